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

#include "dissim/steady_state.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "dissim/error.hpp"
#include "dissim/simulate.hpp"

namespace dissim {

RealMatrix circuit_ptm(const CircuitProgram &circ, std::span<const double> theta) {
    const int n = circ.num_qubits;
    if (n > kMaxSteadyStateQubits) {
        throw BudgetError("transfer matrix limited to " + std::to_string(kMaxSteadyStateQubits) + " qubits");
    }
    const auto dim4 = Eigen::Index{1} << (2 * n);
    const double norm = std::ldexp(1.0, -n);
    auto ops = circ.flat_ops();
    RealMatrix t(dim4, dim4);
    for (Eigen::Index j = 0; j < dim4; j++) {
        auto pj = PauliString::from_basis_index(n, static_cast<std::uint64_t>(j));
        DensityState s(n, pj.dense());
        run_ops(s, ops, theta, 0, ops.size());
        for (Eigen::Index i = 0; i < dim4; i++) {
            auto pi = PauliString::from_basis_index(n, static_cast<std::uint64_t>(i));
            t(i, j) = s.expectation(pi) * norm;
        }
    }
    return t;
}

AffineJumpMap assemble_jump_map(const CircuitProgram &circ, std::span<const double> theta) {
    bool has_reset = false;
    for (const auto *op : circ.flat_ops()) {
        has_reset = has_reset || op->reset_q > 0;
    }
    if (!has_reset) {
        throw ConfigError("a jump must contain at least one reset");
    }
    RealMatrix t = circuit_ptm(circ, theta);
    const auto m = t.rows() - 1;
    return {circ.num_qubits, t.bottomRightCorner(m, m), t.col(0).tail(m)};
}

double fixed_point_residual(const AffineJumpMap &map, const RealVector &v) { return (map.apply(v) - v).norm(); }

SteadyState steady_state_closed_form(const AffineJumpMap &map) {
    const auto m = map.omega.rows();
    RealMatrix a = RealMatrix::Identity(m, m) - map.omega;
    Eigen::PartialPivLU<RealMatrix> lu(a);
    if (!(lu.rcond() > 1e-12)) {
        Eigen::EigenSolver<RealMatrix> es(map.omega, false);
        auto ev = es.eigenvalues();
        Eigen::Index k = 0;
        (ev.array() - 1.0).abs().minCoeff(&k);
        std::ostringstream msg;
        msg << "I - omega is singular: omega has eigenvalue " << ev(k).real() << (ev(k).imag() < 0 ? "-" : "+")
            << std::abs(ev(k).imag()) << "i";
        throw NumericalError(msg.str());
    }
    SteadyState out;
    out.v = lu.solve(map.offset);
    out.report.method = "dense_closed_form";
    out.report.iterations = 1;
    out.report.residual = fixed_point_residual(map, out.v);
    out.report.converged = out.report.residual < 1e-10;
    return out;
}

SteadyState steady_state_fixed_point(const AffineJumpMap &map, double tol, int max_iter) {
    if (max_iter < 1 || !(tol > 0)) {
        throw ConfigError("fixed-point iteration needs max_iter >= 1 and tol > 0");
    }
    const int n = map.n;
    SteadyState out;
    out.report.method = "fixed_point_iteration";
    out.v = traceless_part(to_coherence(DensityState::zero(n)));
    constexpr int kWindow = 1000;
    double checkpoint = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iter; it++) {
        RealVector next = map.apply(out.v);
        out.v = std::move(next);
        out.report.iterations = it;
        out.report.residual = fixed_point_residual(map, out.v);
        if (out.report.residual < tol) {
            out.report.converged = true;
            return out;
        }
        if (!std::isfinite(out.report.residual)) {
            return out;
        }
        if (it % kWindow == 0) {
            if (out.report.residual > 0.999 * checkpoint) {
                return out;
            }
            checkpoint = out.report.residual;
        }
    }
    return out;
}

RealVector traceless_part(const CoherenceVector &cv) { return cv.v.tail(cv.v.size() - 1); }

CoherenceVector full_coherence(int n, const RealVector &traceless) {
    CoherenceVector cv{n, RealVector(traceless.size() + 1)};
    cv.v(0) = 1;
    cv.v.tail(traceless.size()) = traceless;
    return cv;
}

std::vector<double> layered_convergence(const CircuitProgram &jump, std::span<const double> theta,
                                        const DensityState &target, const DensityState &rho0, int m_max) {
    if (m_max < 0) {
        throw ConfigError("jump count must be nonnegative");
    }
    // Pure targets use <psi|rho|psi>, which keeps the floor at machine precision.
    Eigen::SelfAdjointEigenSolver<Matrix> es(target.rho());
    const bool pure = std::abs(es.eigenvalues().maxCoeff() - 1.0) < 1e-12;
    const Vector psi = es.eigenvectors().col(es.eigenvalues().size() - 1);
    auto ops = jump.flat_ops();
    DensityState s = rho0;
    std::vector<double> out;
    for (int m = 1; m <= m_max; m++) {
        run_ops(s, ops, theta, 0, ops.size());
        double f = pure ? fidelity(s, psi) : fidelity(s, target);
        out.push_back(std::max(0.0, 1.0 - f));
    }
    return out;
}

namespace {

Layer noise_after(const std::vector<int> &sites, double p) {
    Layer layer{LayerKind::kNoise, 0, {}};
    if (p > 0) {
        auto ch = std::make_shared<KrausChannel>(depolarizing(p));
        for (int s : sites) {
            layer.ops.push_back(Operation::noise(ch, {s}, "depolarizing"));
        }
    }
    return layer;
}

}  // namespace

CircuitProgram bell_pump_jump(const BellPumpOptions &opt) {
    CircuitProgram circ;
    circ.num_qubits = 3;
    circ.lattice = Lattice(1, 3);
    circ.num_params = 1;
    const int anc = 2;
    Matrix crx = Matrix::Zero(4, 4);
    crx(2, 3) = 0.5;
    crx(3, 2) = 0.5;
    auto add = [&](Layer layer) { circ.layers.push_back(std::move(layer)); };
    auto reset = [&]() { add(Layer{LayerKind::kReset, 0, {Operation::reset(1.0, anc)}}); };
    auto hadamards = [&]() {
        add(Layer{LayerKind::kCustom,
                  0,
                  {Operation::fixed(hadamard_gate(), {0}, "H"), Operation::fixed(hadamard_gate(), {1}, "H")}});
    };
    auto pump = [&](bool x_type) {
        if (x_type) {
            hadamards();
        }
        for (int q : {0, 1}) {
            add(Layer{LayerKind::kCustom, 0, {Operation::fixed(cnot_gate(), {q, anc}, "CNOT")}});
            add(noise_after({q, anc}, opt.noise));
        }
        add(Layer{LayerKind::kCustom,
                  0,
                  {Operation::rotation(crx, {anc, 0}, 0, "CRX"), Operation::fixed(s_gate(), {anc}, "S")}});
        add(noise_after({anc, 0}, opt.noise));
        if (x_type) {
            hadamards();
        }
        reset();
    };
    reset();
    if (opt.tau != 0) {
        Matrix xx = PauliString::from_text("XX").dense();
        Matrix zz = PauliString::from_text("ZZ").dense();
        add(Layer{LayerKind::kCustom,
                  0,
                  {Operation::fixed(expm_hermitian(zz, opt.tau), {0, 1}, "ZZ"),
                   Operation::fixed(expm_hermitian(xx, opt.tau), {0, 1}, "XX")}});
        add(noise_after({0, 1}, opt.noise));
    }
    pump(false);
    pump(true);
    return circ;
}

Vector bell_pump_target() {
    Vector psi = Vector::Zero(8);
    psi(0) = 1 / std::sqrt(2.0);  // |000>
    psi(6) = 1 / std::sqrt(2.0);  // |110>
    return psi;
}

}  // namespace dissim
