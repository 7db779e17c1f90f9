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

#ifndef DISSIM_GRADIENTS_HPP
#define DISSIM_GRADIENTS_HPP

#include <span>
#include <string>
#include <vector>

#include "dissim/circuit.hpp"
#include "dissim/pauli.hpp"
#include "dissim/simulate.hpp"

namespace dissim {

struct CostSpec {
    CircuitProgram circuit;
    Observable observable;
    InitialState rho0;
    Backend backend = Backend::kAuto;
    /// Simulate each group of observable terms on its backward light cone only.
    bool light_cone = false;
};

enum class GradientMethod { kCommutator, kParameterShift, kFiniteDiff };
GradientMethod parse_gradient_method(const std::string &name);

/// Prepared evaluator for C(theta) = Tr(O Phi(rho0)) and its partial derivatives.
class CostEvaluator {
   public:
    explicit CostEvaluator(const CostSpec &spec);

    double cost(std::span<const double> theta) const;
    /// Expectation of every observable term (coefficients not applied), in term order.
    std::vector<double> term_values(std::span<const double> theta) const;
    double gradient(std::span<const double> theta, int mu, GradientMethod method,
                    double fd_step = 1e-5) const;
    /// All partial derivatives by central finite differences.
    std::vector<double> gradient_fd_all(std::span<const double> theta, double fd_step) const;

    int num_params() const { return num_params_; }
    /// Qubit counts of the simulated parts (diagnostics).
    std::vector<int> part_sizes() const;

   private:
    struct Part {
        CircuitProgram circuit;
        std::vector<std::pair<double, PauliString>> terms;
        std::vector<int> term_index;
        InitialState rho0;
        bool factored = false;
        /// Flat ops inside the backward light cone of the part's terms.
        std::vector<char> causal;
    };
    static void mark_causal(Part &part);

    double part_cost(const Part &part, std::span<const double> theta) const;
    double part_shift_gradient(const Part &part, std::span<const double> theta, int mu) const;
    double part_commutator_gradient(const Part &part, std::span<const double> theta, int mu) const;
    void add_part(const CircuitProgram &circ, std::vector<int> term_ids, const Observable &obs,
                  const InitialState &rho0, std::vector<int> sites, Backend backend);

    std::vector<Part> parts_;
    double constant_ = 0;
    size_t num_terms_ = 0;
    std::vector<int> constant_terms_;
    int num_params_ = 0;
};

double cost(const CostSpec &spec, std::span<const double> theta);
double gradient_commutator(const CostSpec &spec, std::span<const double> theta, int mu);
double gradient(const CostSpec &spec, std::span<const double> theta, int mu, GradientMethod method);

}  // namespace dissim

#endif
