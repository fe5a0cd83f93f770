// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "drmax/instance_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace drmax {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string ParseErrorPath(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

constexpr char kLinear[] = R"({
  "objective": {"kind": "linear", "weights": [1.0, 2.0]},
  "constraint": {"type": "packing", "m": 1, "n": 2,
                 "entries": [[0, 1, 1.0], [0, 0, 0.5]]},
  "eps": 0.05
})";

TEST(InstanceIoTest, ParsesLinearPacking) {
  const InstanceFile file = ParseInstance(kLinear);
  EXPECT_EQ(file.objective.kind(), ObjectiveKind::kLinear);
  ASSERT_TRUE(std::holds_alternative<SparseMatrix>(file.constraint));
  const SparseMatrix& a = std::get<SparseMatrix>(file.constraint);
  EXPECT_EQ(a.ToDense(), (std::vector<std::vector<double>>{{0.5, 1.0}}));
  EXPECT_DOUBLE_EQ(file.eps, 0.05);
  EXPECT_FALSE(file.known_opt.has_value());
}

TEST(InstanceIoTest, EmitIsCanonical) {
  const std::string once = EmitInstance(ParseInstance(kLinear));
  EXPECT_NE(once.find("\"schema\": 1"), std::string::npos);
  EXPECT_EQ(EmitInstance(ParseInstance(once)), once);
}

TEST(InstanceIoTest, FixturesRoundTrip) {
  int count = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(DRMAX_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    const InstanceFile file = ParseInstance(ReadFile(entry.path()));
    const std::string emitted = EmitInstance(file);
    EXPECT_EQ(EmitInstance(ParseInstance(emitted)), emitted) << entry.path();
  }
  EXPECT_GE(count, 6);
}

TEST(InstanceIoTest, ErrorsCarryPaths) {
  EXPECT_EQ(ParseErrorPath("{"), "");
  EXPECT_EQ(ParseErrorPath(R"({"objective": {"kind": "linear",
      "weights": [1.0, -2.0]}, "constraint": {"type": "packing", "m": 1,
      "n": 2, "entries": [[0, 0, 1.0]]}})"),
            "/objective/weights/1");
  EXPECT_EQ(ParseErrorPath(R"({"objective": {"kind": "linear",
      "weights": [1.0]}, "constraint": {"type": "packing", "m": 1, "n": 1,
      "entries": [[0, 0, 1.0], [0, 0, 2.0]]}})"),
            "/constraint/entries/1");
  EXPECT_EQ(ParseErrorPath(R"({"objective": {"kind": "linear",
      "weights": [1.0]}, "constraint": {"type": "packing", "m": 1, "n": 1,
      "entries": [[0, 0, 1.0]]}, "colour": 1})"),
            "/colour");
  EXPECT_EQ(ParseErrorPath(R"({"schema": 2, "objective": {"kind": "linear",
      "weights": [1.0]}, "constraint": {"type": "packing", "m": 1, "n": 1,
      "entries": [[0, 0, 1.0]]}})"),
            "/schema");
  EXPECT_EQ(ParseErrorPath(R"({"objective": {"kind": "circle"},
      "constraint": {"type": "packing", "m": 1, "n": 1,
      "entries": [[0, 0, 1.0]]}})"),
            "/objective/kind");
}

TEST(InstanceIoTest, RejectsNestedSampling) {
  const std::string text = R"({"objective": {"kind": "sampled",
      "samples": 10, "seed": 0, "set_function": {"kind": "sampled",
      "samples": 10, "seed": 0, "set_function": {"kind": "linear",
      "weights": [1.0]}}}, "constraint": {"type": "packing", "m": 1, "n": 1,
      "entries": [[0, 0, 1.0]]}})";
  EXPECT_THROW(ParseInstance(text), ParseError);
}

TEST(InstanceIoTest, PolymatroidKinds) {
  const InstanceFile file = ParseInstance(R"({
    "objective": {"kind": "directed_cut", "n": 3, "arcs": [[0, 1, 1.0]]},
    "constraint": {"type": "polymatroid", "kind": "partition", "n": 3,
                   "parts": [{"members": [0, 1], "capacity": 1},
                             {"members": [2], "capacity": 1}]}
  })");
  ASSERT_TRUE(std::holds_alternative<LaminarPolymatroid>(file.constraint));
  EXPECT_EQ(std::get<LaminarPolymatroid>(file.constraint).kind(),
            PolymatroidKind::kPartition);
}

TEST(InstanceIoTest, ReportJsonIsStable) {
  SolveReport report;
  report.solution = {0.25, 0.5};
  report.value = 0.75;
  report.max_row_load = 0.9;
  report.Check("gain_rate", true);
  const nlohmann::ordered_json json = ReportToJson(report);
  EXPECT_EQ(json["schema"], 1);
  EXPECT_EQ(json["termination"], "converged");
  EXPECT_EQ(json["invariants"]["gain_rate"]["checked"], 1);
  EXPECT_FALSE(json.contains("polymatroid_margin"));
  EXPECT_EQ(ReportToJson(report).dump(), json.dump());
}

}  // namespace
}  // namespace drmax
