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

#ifndef DISSIM_RECORD_HPP
#define DISSIM_RECORD_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace dissim {

std::string version();

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);
/// FNV-1a of the compact dump of a resolved config, as 16 hex digits.
std::string config_hash(const nlohmann::json &config);

/// %.17g.
std::string format_number(double x);

/// CSV with the header line `# dissim v<version> seed=<seed> config=<hash>` and a column-name line.
struct CsvTable {
    std::string version;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    /// Column lookup; throws ConfigError for an unknown name.
    size_t column(std::string_view name) const;
    double number(size_t row, std::string_view name) const;
};

std::string to_csv(const CsvTable &table);
CsvTable parse_csv(std::string_view text);
void write_text(const std::string &path, std::string_view text);
std::string read_text(const std::string &path);

/// Writes `<path>` and the sidecar `<path>.json` holding the resolved config and run metadata.
void write_record(const std::string &path, const CsvTable &table, const nlohmann::json &config,
                  const nlohmann::json &meta);

/// Expands "1..10" and "4,6,8" (and mixtures such as "2,4..6").
std::vector<int> parse_int_list(const std::string &text);

}  // namespace dissim

#endif
