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

#ifndef DRMAX_INSTANCE_IO_H_
#define DRMAX_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "drmax/objective.h"
#include "drmax/polymatroid.h"
#include "drmax/solve_report.h"
#include "drmax/sparse_matrix.h"
#include "json.hpp"

namespace drmax {

inline constexpr int kSchemaVersion = 1;

// Packing constraints are kept as given (before normalization).
using Constraint = std::variant<SparseMatrix, LaminarPolymatroid>;

struct InstanceFile {
  Objective objective;
  Constraint constraint;
  double eps = 0.05;
  uint64_t seed = 0;
  std::optional<double> known_opt;
};

// Invalid instance. path() is a JSON pointer to the offending field ("" for
// syntax errors, whose message carries the byte offset).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Parses and validates an instance document (format in docs/formats.md).
InstanceFile ParseInstance(std::string_view text);

// Canonical form: sorted triplets, fixed key order, two-space indent.
// ParseInstance(EmitInstance(x)) emits identically.
std::string EmitInstance(const InstanceFile& instance);

// Report document without run-specific context; callers add "command" and
// similar fields. Contains no timings, so it is reproducible byte for byte.
nlohmann::ordered_json ReportToJson(const SolveReport& report);

}  // namespace drmax

#endif  // DRMAX_INSTANCE_IO_H_
