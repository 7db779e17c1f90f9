// Copyright 2026 The dissim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dissim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "dissim/error.hpp"
#include "dissim/pauli.hpp"

namespace dissim {

Operation Operation::fixed(Matrix u, std::vector<int> sites, std::string label) {
    Operation op;
    op.kind = OpKind::kUnitary;
    op.unitary = std::move(u);
    op.sites = std::move(sites);
    op.label = std::move(label);
    return op;
}

Operation Operation::rotation(const Matrix &h, std::vector<int> sites, int param, std::string label) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ConfigError("rotation generator must be Hermitian");
    }
    Operation op;
    op.kind = OpKind::kRotation;
    op.generator = h;
    op.sites = std::move(sites);
    op.param = param;
    op.label = std::move(label);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    op.eigenvalues = es.eigenvalues();
    op.eigenvectors = es.eigenvectors();
    double norm = op.eigenvalues.cwiseAbs().maxCoeff();
    if (!(norm > 0) || norm > 1 + 1e-12) {
        throw ConfigError("rotation generator needs 0 < ||H|| <= 1");
    }
    return op;
}

Operation Operation::noise(std::shared_ptr<const KrausChannel> ch, std::vector<int> sites,
                           std::string label) {
    Operation op;
    op.kind = OpKind::kChannel;
    op.channel = std::move(ch);
    op.sites = std::move(sites);
    op.label = std::move(label);
    return op;
}

Operation Operation::reset(double q, int site) {
    Operation op;
    op.kind = OpKind::kChannel;
    op.channel = std::make_shared<const KrausChannel>(amplitude_damping(q));
    op.sites = {site};
    op.label = "reset";
    op.reset_q = q;
    return op;
}

Matrix Operation::matrix(double theta) const {
    if (kind == OpKind::kUnitary) {
        return unitary;
    }
    if (kind != OpKind::kRotation) {
        throw ConfigError("channel op has no unitary");
    }
    Vector phases(eigenvalues.size());
    for (Eigen::Index k = 0; k < eigenvalues.size(); k++) {
        phases(k) = std::exp(cplx(0, -theta * eigenvalues(k)));
    }
    return eigenvectors * phases.asDiagonal() * eigenvectors.adjoint();
}

std::vector<const Operation *> CircuitProgram::flat_ops() const {
    std::vector<const Operation *> out;
    for (const auto &layer : layers) {
        for (const auto &op : layer.ops) {
            out.push_back(&op);
        }
    }
    return out;
}

int CircuitProgram::count_layers(LayerKind kind) const {
    int c = 0;
    for (const auto &layer : layers) {
        c += layer.kind == kind ? 1 : 0;
    }
    return c;
}

int CircuitProgram::designated_param(int site) const {
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        if (it->kind != LayerKind::kBrickwork) {
            continue;
        }
        for (auto op = it->ops.rbegin(); op != it->ops.rend(); ++op) {
            if (op->kind == OpKind::kRotation &&
                std::find(op->sites.begin(), op->sites.end(), site) != op->sites.end()) {
                return op->param;
            }
        }
        return -1;
    }
    return -1;
}

int chi(int l, int L) {
    if (l < 1 || L < 1) {
        throw ConfigError("chi needs l >= 1 and L >= 1");
    }
    return l % L == 0 ? 1 : 0;
}

TwoQubitGates parse_two_qubit_gates(const std::string &name) {
    if (name == "haar") return TwoQubitGates::kHaar;
    if (name == "clifford") return TwoQubitGates::kClifford;
    if (name == "brickwork" || name == "hardware_efficient") return TwoQubitGates::kHardwareEfficient;
    if (name == "qaoa") return TwoQubitGates::kQaoa;
    if (name == "identity") return TwoQubitGates::kIdentity;
    throw ConfigError("unknown ansatz '" + name + "'");
}

std::string two_qubit_gates_name(TwoQubitGates g) {
    switch (g) {
        case TwoQubitGates::kHaar:
            return "haar";
        case TwoQubitGates::kClifford:
            return "clifford";
        case TwoQubitGates::kHardwareEfficient:
            return "brickwork";
        case TwoQubitGates::kQaoa:
            return "qaoa";
        case TwoQubitGates::kIdentity:
            return "identity";
    }
    return "identity";
}

Matrix rx(double theta) {
    return expm_hermitian(PauliString::from_text("X").dense() * 0.5, theta);
}

Matrix ry(double theta) {
    return expm_hermitian(PauliString::from_text("Y").dense() * 0.5, theta);
}

Matrix rz(double theta) {
    return expm_hermitian(PauliString::from_text("Z").dense() * 0.5, theta);
}

Matrix cnot_gate() {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return c;
}

Matrix hadamard_gate() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Matrix s_gate() {
    Matrix s = Matrix::Identity(2, 2);
    s(1, 1) = cplx(0, 1);
    return s;
}

Matrix hardware_efficient_brick(double t1, double t2, double t3, double t4) {
    return kron(ry(t1), ry(t2)) * cnot_gate() * kron(rx(t3), rx(t4));
}

Matrix expm_hermitian(const Matrix &h, double theta) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        phases(k) = std::exp(cplx(0, -theta * es.eigenvalues()(k)));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<Operation> qaoa_chain_layer(int n, int first_param) {
    const Matrix zz = PauliString::from_text("ZZ").dense() * 0.5;
    const Matrix hx = PauliString::from_text("X").dense() * 0.5;
    const Matrix hy = PauliString::from_text("Y").dense() * 0.5;
    std::vector<Operation> ops;
    int p = first_param;
    for (int parity = 0; parity < 2; parity++) {
        for (int a = parity; a + 1 < n; a += 2) {
            ops.push_back(Operation::rotation(zz, {a, a + 1}, p++, "rzz"));
        }
    }
    for (int a = 0; a < n; a++) {
        ops.push_back(Operation::rotation(hx, {a}, p++, "rx"));
    }
    for (int a = 0; a < n; a++) {
        ops.push_back(Operation::rotation(hy, {a}, p++, "ry"));
    }
    return ops;
}

namespace {

class ParamAllocator {
   public:
    explicit ParamAllocator(bool correlated) : correlated_(correlated) {}

    int get(int phase, int a, int b, int slot) {
        if (!correlated_) {
            return next_++;
        }
        auto key = std::make_tuple(phase, a, b, slot);
        auto it = table_.find(key);
        if (it != table_.end()) {
            return it->second;
        }
        table_[key] = next_;
        return next_++;
    }

    int count() const { return next_; }

   private:
    bool correlated_;
    int next_ = 0;
    std::map<std::tuple<int, int, int, int>, int> table_;
};

}  // namespace

CircuitProgram build_dissipative_circuit(const Lattice &lat, int L, int M, double q,
                                         const AnsatzSpec &ansatz, Rng &rng) {
    if (L < 1 || M < 1) {
        throw ConfigError("invalid schedule: need L >= 1 and M >= 1");
    }
    if (ansatz.correlated && ansatz.correlation_period < 1) {
        throw ConfigError("correlation period must be positive");
    }
    if (ansatz.noise && ansatz.noise->num_qubits() != 1) {
        throw ConfigError("circuit noise must be a single-qubit channel");
    }
    if (ansatz.gates == TwoQubitGates::kQaoa && lat.dim != 1) {
        throw ConfigError("the QAOA chain ansatz needs a 1-d lattice");
    }
    const int n = lat.num_sites();
    const Matrix hx = PauliString::from_text("X").dense() * 0.5;
    const Matrix hy = PauliString::from_text("Y").dense() * 0.5;
    const Matrix zz = PauliString::from_text("ZZ").dense() * 0.5;

    CircuitProgram prog;
    prog.num_qubits = n;
    prog.lattice = lat;
    prog.L = L;
    prog.M = M;
    ParamAllocator params(ansatz.correlated);
    const int period = ansatz.correlated ? ansatz.correlation_period : 1;

    for (int k = 1; k <= L * M; k++) {
        const int phase = (k - 1) % period;
        if (chi(k, L)) {
            Layer reset{LayerKind::kReset, k, {}};
            for (int s : lat.reset_sites) {
                reset.ops.push_back(Operation::reset(q, s));
            }
            prog.layers.push_back(std::move(reset));
        }

        Layer brick{LayerKind::kBrickwork, k, {}};
        // Correlated blocks restart the brick parity so every block has the same structure.
        const int parity = (ansatz.correlated ? phase : k - 1) % 2;
        if (ansatz.gates == TwoQubitGates::kQaoa) {
            int slot = 0;
            for (int par = 0; par < 2; par++) {
                for (int a = par; a + 1 < n; a += 2) {
                    brick.ops.push_back(
                        Operation::rotation(zz, {a, a + 1}, params.get(phase, a, a + 1, slot++), "rzz"));
                }
            }
            for (int a = 0; a < n; a++) {
                brick.ops.push_back(Operation::rotation(hx, {a}, params.get(phase, a, -1, slot++), "rx"));
            }
            for (int a = 0; a < n; a++) {
                brick.ops.push_back(Operation::rotation(hy, {a}, params.get(phase, a, -1, slot++), "ry"));
            }
        } else {
            for (int axis = 0; axis < lat.dim; axis++) {
                for (auto [a, b] : lat.brickwork_pairs(axis, parity)) {
                    switch (ansatz.gates) {
                        case TwoQubitGates::kHaar:
                            brick.ops.push_back(Operation::fixed(haar_unitary(4, rng), {a, b}, "haar"));
                            break;
                        case TwoQubitGates::kClifford:
                            brick.ops.push_back(Operation::fixed(clifford2_sample(rng), {a, b}, "clifford"));
                            break;
                        case TwoQubitGates::kHardwareEfficient: {
                            int t1 = params.get(phase, a, b, 1);
                            int t2 = params.get(phase, a, b, 2);
                            int t3 = params.get(phase, a, b, 3);
                            int t4 = params.get(phase, a, b, 4);
                            brick.ops.push_back(Operation::rotation(hx, {a}, t3, "rx"));
                            brick.ops.push_back(Operation::rotation(hx, {b}, t4, "rx"));
                            brick.ops.push_back(Operation::fixed(cnot_gate(), {a, b}, "cnot"));
                            brick.ops.push_back(Operation::rotation(hy, {a}, t1, "ry"));
                            brick.ops.push_back(Operation::rotation(hy, {b}, t2, "ry"));
                            break;
                        }
                        case TwoQubitGates::kIdentity:
                        case TwoQubitGates::kQaoa:
                            break;
                    }
                }
            }
        }
        if (k == L * M && ansatz.probe) {
            const auto &pg = *ansatz.probe;
            if (pg.first_site < 0 || pg.first_site + 1 >= n) {
                throw ConfigError("probe gate site out of range");
            }
            brick.ops.push_back(Operation::rotation(pg.generator, {pg.first_site, pg.first_site + 1},
                                                    params.get(-1, pg.first_site, -1, 0), "probe"));
        }
        prog.layers.push_back(std::move(brick));

        if (ansatz.noise) {
            Layer noise{LayerKind::kNoise, k, {}};
            for (int s = 0; s < n; s++) {
                noise.ops.push_back(Operation::noise(ansatz.noise, {s}, "noise"));
            }
            prog.layers.push_back(std::move(noise));
        }
        if (ansatz.single_qubit) {
            Layer single{LayerKind::kSingleQubit, k, {}};
            for (int s = 0; s < n; s++) {
                single.ops.push_back(Operation::fixed(sample_unitary(*ansatz.single_qubit, rng), {s}, "single"));
            }
            prog.layers.push_back(std::move(single));
        }
    }
    prog.num_params = params.count();
    return prog;
}

}  // namespace dissim
