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

#include <gtest/gtest.h>

#include <filesystem>

#include "dissim/error.hpp"
#include "dissim/record.hpp"

namespace dissim {
namespace {

TEST(Record, Fnv1a) {
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(config_hash(nlohmann::json{{"a", 1}}).size(), 16u);
    EXPECT_EQ(config_hash(nlohmann::json{{"a", 1}}), config_hash(nlohmann::json{{"a", 1}}));
    EXPECT_NE(config_hash(nlohmann::json{{"a", 1}}), config_hash(nlohmann::json{{"a", 2}}));
}

TEST(Record, FormatNumberRoundTrips) {
    for (double x : {0.1, -1e-300, 1.0 / 3.0, 6.02214076e23}) EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Record, CsvRoundTrip) {
    CsvTable t;
    t.version = version();
    t.seed = 42;
    t.config_hash = "00000000deadbeef";
    t.columns = {"n", "variance"};
    t.add_row({"4", format_number(0.25)});
    t.add_row({"6", format_number(0.125)});
    auto text = to_csv(t);
    EXPECT_EQ(text.rfind("# dissim v" + version() + " seed=42 config=00000000deadbeef\n", 0), 0u);
    auto back = parse_csv(text);
    EXPECT_EQ(back.seed, 42u);
    EXPECT_EQ(back.config_hash, t.config_hash);
    EXPECT_EQ(back.columns, t.columns);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_EQ(back.number(1, "variance"), 0.125);
    EXPECT_THROW(back.column("mean"), ConfigError);
    EXPECT_THROW(t.add_row({"1"}), ConfigError);
}

TEST(Record, WritesSidecar) {
    auto dir = std::filesystem::temp_directory_path() / "dissim_record_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.csv").string();
    CsvTable t;
    t.version = version();
    t.config_hash = config_hash(nlohmann::json{{"k", 3}});
    t.columns = {"x"};
    t.add_row({"1"});
    write_record(path, t, nlohmann::json{{"k", 3}}, nlohmann::json{{"wall", 0.5}});
    EXPECT_EQ(parse_csv(read_text(path)).rows.size(), 1u);
    auto side = nlohmann::json::parse(read_text(path + ".json"));
    EXPECT_EQ(side["config"]["k"], 3);
    std::filesystem::remove_all(dir);
}

TEST(Record, IntLists) {
    EXPECT_EQ(parse_int_list("2,4..6"), (std::vector<int>{2, 4, 5, 6}));
    EXPECT_EQ(parse_int_list("1..3"), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(parse_int_list("7"), (std::vector<int>{7}));
    EXPECT_THROW(parse_int_list("a"), ConfigError);
    EXPECT_THROW(parse_int_list("5..3"), ConfigError);
}

}  // namespace
}  // namespace dissim
