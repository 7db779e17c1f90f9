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

#ifndef DISSIM_ERROR_HPP
#define DISSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dissim {

/// Invalid arguments, malformed configs, schema violations.
class ConfigError : public std::invalid_argument {
   public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

/// Problem too large for dense simulation.
class BudgetError : public std::runtime_error {
   public:
    explicit BudgetError(const std::string &what) : std::runtime_error(what) {}
};

/// Solver failures, singular systems, non-physical results.
class NumericalError : public std::runtime_error {
   public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace dissim

#endif
