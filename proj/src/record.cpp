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

#include "dissim/record.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dissim/error.hpp"

#ifndef DISSIM_VERSION
#define DISSIM_VERSION "0.0.0"
#endif

namespace dissim {

std::string version() { return DISSIM_VERSION; }

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const nlohmann::json &config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config.dump())));
    return buf;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw ConfigError("row width does not match the column count");
    }
    rows.push_back(std::move(row));
}

size_t CsvTable::column(std::string_view name) const {
    for (size_t k = 0; k < columns.size(); k++) {
        if (columns[k] == name) {
            return k;
        }
    }
    throw ConfigError("no column '" + std::string(name) + "'");
}

double CsvTable::number(size_t row, std::string_view name) const {
    const auto &cell = rows.at(row).at(column(name));
    try {
        size_t used = 0;
        double v = std::stod(cell, &used);
        if (used != cell.size()) {
            throw std::invalid_argument(cell);
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError("cell '" + cell + "' is not a number");
    }
}

namespace {

std::string join(const std::vector<std::string> &cells) {
    std::string out;
    for (size_t k = 0; k < cells.size(); k++) {
        if (cells[k].find_first_of(",\n\"") != std::string::npos) {
            throw ConfigError("CSV cells may not contain commas, quotes or newlines");
        }
        out += (k ? "," : "") + cells[k];
    }
    return out;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

}  // namespace

std::string to_csv(const CsvTable &table) {
    std::ostringstream out;
    out << "# dissim v" << table.version << " seed=" << table.seed << " config=" << table.config_hash << "\n";
    out << join(table.columns) << "\n";
    for (const auto &row : table.rows) {
        out << join(row) << "\n";
    }
    return out.str();
}

CsvTable parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) {
            pos = text.size();
        }
        lines.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    if (lines.size() < 2) {
        throw ConfigError("CSV needs a header line and a column line");
    }
    CsvTable t;
    std::string header(lines[0]);
    char ver[64] = {0};
    char hash[64] = {0};
    unsigned long long seed = 0;
    if (std::sscanf(header.c_str(), "# dissim v%63s seed=%llu config=%63s", ver, &seed, hash) != 3) {
        throw ConfigError("CSV header line is malformed: '" + header + "'");
    }
    t.version = ver;
    t.seed = seed;
    t.config_hash = hash;
    t.columns = split(lines[1]);
    for (size_t k = 2; k < lines.size(); k++) {
        if (!lines[k].empty()) {
            t.add_row(split(lines[k]));
        }
    }
    return t;
}

void write_text(const std::string &path, std::string_view text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    f << text;
    if (!f) {
        throw ConfigError("failed writing '" + path + "'");
    }
}

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write_record(const std::string &path, const CsvTable &table, const nlohmann::json &config,
                  const nlohmann::json &meta) {
    write_text(path, to_csv(table));
    nlohmann::json side = meta;
    side["config"] = config;
    side["config_hash"] = table.config_hash;
    side["seed"] = table.seed;
    side["version"] = table.version;
    write_text(path + ".json", side.dump(2) + "\n");
}

namespace {

int parse_int(std::string_view s, const std::string &whole) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConfigError("bad integer list '" + whole + "'");
    }
    return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const auto &item : split(text)) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item, text));
            continue;
        }
        int a = parse_int(std::string_view(item).substr(0, dots), text);
        int b = parse_int(std::string_view(item).substr(dots + 2), text);
        if (b < a) {
            throw ConfigError("empty range in '" + text + "'");
        }
        for (int v = a; v <= b; v++) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw ConfigError("empty integer list");
    }
    return out;
}

}  // namespace dissim
