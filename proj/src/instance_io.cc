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

#include <cmath>
#include <initializer_list>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace drmax {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

void RequireObject(const Json& node, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : node.items()) {
    if (!keys.count(key)) throw ParseError(path + "/" + key, "unknown field");
  }
}

const Json& Field(const Json& node, const std::string& key,
                  const std::string& path) {
  if (!node.contains(key)) throw ParseError(path + "/" + key, "missing field");
  return node.at(key);
}

double Number(const Json& node, const std::string& path) {
  if (!node.is_number()) throw ParseError(path, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ParseError(path, "expected a finite number");
  return v;
}

double Weight(const Json& node, const std::string& path) {
  const double v = Number(node, path);
  if (v < 0.0) throw ParseError(path, "negative weight");
  return v;
}

long long Integer(const Json& node, const std::string& path) {
  if (!node.is_number_integer()) throw ParseError(path, "expected an integer");
  return node.get<long long>();
}

int Index(const Json& node, const std::string& path, int size) {
  const long long v = Integer(node, path);
  if (v < 0 || v >= size) {
    throw ParseError(path, "index " + std::to_string(v) + " out of range [0, " +
                               std::to_string(size) + ")");
  }
  return static_cast<int>(v);
}

int Count(const Json& node, const std::string& path) {
  const long long v = Integer(node, path);
  if (v < 1 || v > std::numeric_limits<int>::max()) {
    throw ParseError(path, "expected a positive count");
  }
  return static_cast<int>(v);
}

const Json& Array(const Json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path, "expected an array");
  return node;
}

std::string Text(const Json& node, const std::string& path) {
  if (!node.is_string()) throw ParseError(path, "expected a string");
  return node.get<std::string>();
}

template <typename Build>
auto Wrap(const std::string& path, Build build) -> decltype(build()) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

Objective ParseObjective(const Json& node, const std::string& path, int depth) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  const std::string kind = Text(Field(node, "kind", path), path + "/kind");
  if (kind == "coverage") {
    RequireObject(node, path, {"kind", "n", "item_weights", "covers"});
    const int n = Count(Field(node, "n", path), path + "/n");
    std::vector<double> weights;
    const Json& w =
        Array(Field(node, "item_weights", path), path + "/item_weights");
    for (size_t k = 0; k < w.size(); ++k) {
      weights.push_back(
          Weight(w[k], path + "/item_weights/" + std::to_string(k)));
    }
    const Json& c = Array(Field(node, "covers", path), path + "/covers");
    if (static_cast<int>(c.size()) != n) {
      throw ParseError(path + "/covers", "expected one cover list per element");
    }
    std::vector<std::vector<int>> covers(n);
    for (int i = 0; i < n; ++i) {
      const std::string p = path + "/covers/" + std::to_string(i);
      const Json& list = Array(c[i], p);
      for (size_t k = 0; k < list.size(); ++k) {
        covers[i].push_back(Index(list[k], p + "/" + std::to_string(k),
                                  static_cast<int>(weights.size())));
      }
    }
    return Wrap(path, [&] {
      return Objective::Coverage(n, std::move(weights), std::move(covers));
    });
  }
  if (kind == "directed_cut") {
    RequireObject(node, path, {"kind", "n", "arcs"});
    const int n = Count(Field(node, "n", path), path + "/n");
    const Json& list = Array(Field(node, "arcs", path), path + "/arcs");
    std::vector<Arc> arcs;
    for (size_t k = 0; k < list.size(); ++k) {
      const std::string p = path + "/arcs/" + std::to_string(k);
      if (!list[k].is_array() || list[k].size() != 3) {
        throw ParseError(p, "expected [tail, head, weight]");
      }
      arcs.push_back({Index(list[k][0], p + "/0", n),
                      Index(list[k][1], p + "/1", n),
                      Weight(list[k][2], p + "/2")});
    }
    return Wrap(path,
                [&] { return Objective::DirectedCut(n, std::move(arcs)); });
  }
  if (kind == "linear") {
    RequireObject(node, path, {"kind", "weights"});
    const Json& w = Array(Field(node, "weights", path), path + "/weights");
    std::vector<double> weights;
    for (size_t k = 0; k < w.size(); ++k) {
      weights.push_back(Weight(w[k], path + "/weights/" + std::to_string(k)));
    }
    return Wrap(path, [&] { return Objective::Linear(std::move(weights)); });
  }
  if (kind == "sampled") {
    RequireObject(node, path,
                  {"kind", "samples", "seed", "monotone", "set_function"});
    if (depth > 0) {
      throw ParseError(path, "sampled objectives cannot be nested");
    }
    const int samples = Count(Field(node, "samples", path), path + "/samples");
    const long long seed = Integer(Field(node, "seed", path), path + "/seed");
    if (seed < 0) throw ParseError(path + "/seed", "seed must be >= 0");
    std::optional<bool> monotone;
    if (node.contains("monotone")) {
      if (!node["monotone"].is_boolean()) {
        throw ParseError(path + "/monotone", "expected a boolean");
      }
      monotone = node["monotone"].get<bool>();
    }
    const Objective source = ParseObjective(Field(node, "set_function", path),
                                            path + "/set_function", depth + 1);
    return Wrap(path, [&] {
      return Objective::SampledFrom(source, samples,
                                    static_cast<uint64_t>(seed), monotone);
    });
  }
  throw ParseError(path + "/kind", "unknown objective kind '" + kind + "'");
}

std::vector<CapacitatedSet> ParseSets(const Json& node, const std::string& path,
                                      int n) {
  std::vector<CapacitatedSet> sets;
  Array(node, path);
  for (size_t k = 0; k < node.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    RequireObject(node[k], p, {"members", "capacity"});
    CapacitatedSet set;
    const Json& members = Array(Field(node[k], "members", p), p + "/members");
    for (size_t e = 0; e < members.size(); ++e) {
      set.members.push_back(
          Index(members[e], p + "/members/" + std::to_string(e), n));
    }
    set.capacity = Weight(Field(node[k], "capacity", p), p + "/capacity");
    sets.push_back(std::move(set));
  }
  return sets;
}

Constraint ParseConstraint(const Json& node, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  const std::string type = Text(Field(node, "type", path), path + "/type");
  if (type == "packing") {
    RequireObject(node, path, {"type", "m", "n", "entries"});
    const int m = Count(Field(node, "m", path), path + "/m");
    const int n = Count(Field(node, "n", path), path + "/n");
    const Json& list = Array(Field(node, "entries", path), path + "/entries");
    std::vector<Triplet> triplets;
    std::set<std::pair<int, int>> seen;
    for (size_t k = 0; k < list.size(); ++k) {
      const std::string p = path + "/entries/" + std::to_string(k);
      if (!list[k].is_array() || list[k].size() != 3) {
        throw ParseError(p, "expected [row, col, value]");
      }
      Triplet t{Index(list[k][0], p + "/0", m), Index(list[k][1], p + "/1", n),
                Number(list[k][2], p + "/2")};
      if (t.value < 0.0) throw ParseError(p + "/2", "negative matrix entry");
      if (!seen.insert({t.row, t.col}).second) {
        throw ParseError(p, "duplicate triplet");
      }
      triplets.push_back(t);
    }
    return Wrap(path, [&] { return SparseMatrix(m, n, std::move(triplets)); });
  }
  if (type == "polymatroid") {
    const std::string kind = Text(Field(node, "kind", path), path + "/kind");
    if (kind == "uniform") {
      RequireObject(node, path, {"type", "kind", "n", "budget"});
      const int n = Count(Field(node, "n", path), path + "/n");
      const double budget =
          Weight(Field(node, "budget", path), path + "/budget");
      return Wrap(path, [&] { return LaminarPolymatroid::Uniform(n, budget); });
    }
    if (kind == "partition") {
      RequireObject(node, path, {"type", "kind", "n", "parts"});
      const int n = Count(Field(node, "n", path), path + "/n");
      auto parts = ParseSets(Field(node, "parts", path), path + "/parts", n);
      return Wrap(path, [&] {
        return LaminarPolymatroid::Partition(n, std::move(parts));
      });
    }
    if (kind == "laminar") {
      RequireObject(node, path, {"type", "kind", "n", "sets"});
      const int n = Count(Field(node, "n", path), path + "/n");
      auto sets = ParseSets(Field(node, "sets", path), path + "/sets", n);
      return Wrap(path, [&] {
        return LaminarPolymatroid::Laminar(n, std::move(sets));
      });
    }
    throw ParseError(path + "/kind", "unknown polymatroid kind '" + kind + "'");
  }
  throw ParseError(path + "/type", "unknown constraint type '" + type + "'");
}

int ConstraintSize(const Constraint& constraint) {
  if (const auto* a = std::get_if<SparseMatrix>(&constraint)) return a->cols();
  return std::get<LaminarPolymatroid>(constraint).size();
}

OrderedJson EmitObjective(const Objective& objective) {
  OrderedJson out;
  out["kind"] = ObjectiveKindName(objective.kind());
  switch (objective.kind()) {
    case ObjectiveKind::kCoverage: {
      const CoveragePayload& p = *objective.coverage();
      out["n"] = objective.dimension();
      out["item_weights"] = p.item_weights;
      out["covers"] = p.covers;
      break;
    }
    case ObjectiveKind::kDirectedCut: {
      out["n"] = objective.dimension();
      OrderedJson arcs = OrderedJson::array();
      for (const Arc& a : objective.directed_cut()->arcs) {
        arcs.push_back(OrderedJson::array({a.tail, a.head, a.weight}));
      }
      out["arcs"] = std::move(arcs);
      break;
    }
    case ObjectiveKind::kLinear:
      out["weights"] = objective.linear()->weights;
      break;
    case ObjectiveKind::kSampled: {
      const SampledPayload& p = *objective.sampled();
      if (!p.source) {
        throw std::invalid_argument(
            "sampled objective without a closed-form source cannot be "
            "written");
      }
      out["samples"] = p.samples;
      out["seed"] = p.seed;
      out["monotone"] = objective.monotone();
      out["set_function"] = EmitObjective(*p.source);
      break;
    }
  }
  return out;
}

OrderedJson EmitSets(const std::vector<CapacitatedSet>& sets) {
  OrderedJson out = OrderedJson::array();
  for (const CapacitatedSet& s : sets) {
    OrderedJson entry;
    entry["members"] = s.members;
    entry["capacity"] = s.capacity;
    out.push_back(std::move(entry));
  }
  return out;
}

OrderedJson EmitConstraint(const Constraint& constraint) {
  OrderedJson out;
  if (const auto* a = std::get_if<SparseMatrix>(&constraint)) {
    out["type"] = "packing";
    out["m"] = a->rows();
    out["n"] = a->cols();
    OrderedJson entries = OrderedJson::array();
    for (const Triplet& t : a->ToTriplets()) {
      entries.push_back(OrderedJson::array({t.row, t.col, t.value}));
    }
    out["entries"] = std::move(entries);
    return out;
  }
  const auto& pm = std::get<LaminarPolymatroid>(constraint);
  out["type"] = "polymatroid";
  out["kind"] = PolymatroidKindName(pm.kind());
  out["n"] = pm.size();
  switch (pm.kind()) {
    case PolymatroidKind::kUniform:
      out["budget"] = pm.family().front().capacity;
      break;
    case PolymatroidKind::kPartition:
      out["parts"] = EmitSets(pm.family());
      break;
    case PolymatroidKind::kLaminar:
      out["sets"] = EmitSets(pm.family());
      break;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string path, const std::string& message)
    : std::runtime_error((path.empty() ? std::string("(document)") : path) +
                         ": " + message),
      path_(std::move(path)) {}

InstanceFile ParseInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  RequireObject(
      doc, "",
      {"schema", "objective", "constraint", "eps", "seed", "known_opt"});
  if (doc.contains("schema") &&
      Integer(doc["schema"], "/schema") != kSchemaVersion) {
    throw ParseError("/schema", "unsupported schema version");
  }
  Objective objective =
      ParseObjective(Field(doc, "objective", ""), "/objective", 0);
  Constraint constraint =
      ParseConstraint(Field(doc, "constraint", ""), "/constraint");
  if (ConstraintSize(constraint) != objective.dimension()) {
    throw ParseError("/constraint/n",
                     "constraint size differs from the objective dimension");
  }
  double eps = 0.05;
  if (doc.contains("eps")) {
    eps = Number(doc["eps"], "/eps");
    if (!(eps > 0.0 && eps < 1.0)) throw ParseError("/eps", "eps not in (0,1)");
  }
  uint64_t seed = 0;
  if (doc.contains("seed")) {
    const long long s = Integer(doc["seed"], "/seed");
    if (s < 0) throw ParseError("/seed", "seed must be >= 0");
    seed = static_cast<uint64_t>(s);
  }
  std::optional<double> known_opt;
  if (doc.contains("known_opt")) {
    known_opt = Weight(doc["known_opt"], "/known_opt");
  }
  return InstanceFile{std::move(objective), std::move(constraint), eps, seed,
                      known_opt};
}

std::string EmitInstance(const InstanceFile& instance) {
  OrderedJson doc;
  doc["schema"] = kSchemaVersion;
  doc["objective"] = EmitObjective(instance.objective);
  doc["constraint"] = EmitConstraint(instance.constraint);
  doc["eps"] = instance.eps;
  doc["seed"] = instance.seed;
  if (instance.known_opt) doc["known_opt"] = *instance.known_opt;
  return doc.dump(2) + "\n";
}

OrderedJson ReportToJson(const SolveReport& report) {
  OrderedJson out;
  out["schema"] = kSchemaVersion;
  out["termination"] = TerminationName(report.termination);
  out["feasible"] = report.feasible;
  out["value"] = report.value;
  out["solution"] = report.solution;
  out["guess_used"] = report.guess_used;
  out["epochs"] = report.epochs;
  out["inner_iterations"] = report.inner_iterations;
  out["adaptive_rounds"] = report.adaptive_rounds;
  out["iteration_budget"] = report.iteration_budget;
  if (report.max_row_load) out["max_row_load"] = *report.max_row_load;
  if (report.polymatroid_margin) {
    out["polymatroid_margin"] = *report.polymatroid_margin;
  }
  OrderedJson trace = OrderedJson::array();
  for (const GuessTrial& g : report.guess_trace) {
    OrderedJson entry;
    entry["guess"] = g.guess;
    entry["value"] = g.value;
    entry["termination"] = TerminationName(g.termination);
    entry["iterations"] = g.iterations;
    entry["adaptive_rounds"] = g.adaptive_rounds;
    entry["feasible"] = g.feasible;
    trace.push_back(std::move(entry));
  }
  out["guess_trace"] = std::move(trace);
  OrderedJson invariants = OrderedJson::object();
  for (const auto& [name, tally] : report.invariants) {
    invariants[name] = {{"checked", tally.checked},
                        {"violated", tally.violated}};
  }
  out["invariants"] = std::move(invariants);
  out["notes"] = report.notes;
  return out;
}

}  // namespace drmax
