#pragma once

// JSON serialization for permutation tuples and braid orbit reports.
//
// Tuple files are JSON lines, one tuple per line:
//
//   {"n": 5, "perms": ["(1,2,3)", "(1,4,2)", "(2,4,3)"]}
//
// Permutations use the cycle notation of parse_perm / format_perm ("id" for
// the identity). Reports serialize with a fixed field order so that two runs
// of the same computation produce identical bytes; wall-clock time is only
// emitted when explicitly requested.

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hurwitz/braid.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

using ordered_json = nlohmann::ordered_json;

class TupleIoError : public std::runtime_error {
 public:
  explicit TupleIoError(const std::string& what) : std::runtime_error(what) {}
};

inline ordered_json tuple_to_json(const std::vector<Perm>& entries) {
  if (entries.empty())
    throw TupleIoError("cannot serialize an empty tuple");
  ordered_json j;
  j["n"] = entries.front().degree();
  ordered_json perms = ordered_json::array();
  for (const Perm& g : entries) {
    if (g.degree() != entries.front().degree())
      throw TupleIoError("tuple entries have mixed degrees");
    perms.push_back(format_perm(g));
  }
  j["perms"] = std::move(perms);
  return j;
}

inline std::vector<Perm> tuple_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("perms"))
    throw TupleIoError(
        "tuple record must be an object with fields \"n\" and \"perms\"");
  if (!j["n"].is_number_integer())
    throw TupleIoError("field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 64)
    throw TupleIoError("degree out of range: " + std::to_string(n));
  if (!j["perms"].is_array() || j["perms"].empty())
    throw TupleIoError("field \"perms\" must be a non-empty array");
  std::vector<Perm> entries;
  for (const auto& item : j["perms"]) {
    if (!item.is_string())
      throw TupleIoError("entries of \"perms\" must be cycle strings");
    try {
      entries.push_back(parse_perm(item.get<std::string>(), n));
    } catch (const PermError& e) {
      throw TupleIoError(std::string("bad permutation \"") +
                         item.get<std::string>() + "\": " + e.what());
    }
  }
  return entries;
}

inline std::string write_tuples_jsonl(
    const std::vector<std::vector<Perm>>& tuples) {
  std::string out;
  for (const std::vector<Perm>& t : tuples) {
    out += tuple_to_json(t).dump();
    out += '\n';
  }
  return out;
}

inline std::vector<std::vector<Perm>> read_tuples_jsonl(std::istream& in) {
  std::vector<std::vector<Perm>> tuples;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw TupleIoError("line " + std::to_string(line_number) +
                         ": not valid JSON: " + e.what());
    }
    try {
      tuples.push_back(tuple_from_json(j));
    } catch (const TupleIoError& e) {
      throw TupleIoError("line " + std::to_string(line_number) + ": " +
                         e.what());
    }
  }
  return tuples;
}

inline std::vector<std::vector<Perm>> read_tuples_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TupleIoError("cannot open " + path);
  return read_tuples_jsonl(in);
}

inline ordered_json class_spec_to_json(const ClassSpec& spec) {
  ordered_json j;
  j["degree"] = spec.degree;
  j["length"] = spec.length;
  ordered_json classes = ordered_json::array();
  for (const CycleStructure& cs : spec.entry_classes)
    classes.push_back(cs.to_string());
  j["entry_classes"] = std::move(classes);
  j["product"] = spec.product ? format_perm(*spec.product) : "id";
  j["group_filter"] = spec.group_filter;
  if (!spec.ambient_name.empty()) j["ambient"] = spec.ambient_name;
  return j;
}

// Field order is fixed; representatives use the tuple record format above so
// they can be fed back in as seeds. Pass include_timing = true to append the
// measured wall time (off by default so repeated runs byte-match).
inline ordered_json report_to_json(const BraidOrbitReport& report,
                                   bool include_timing = false) {
  ordered_json j;
  j["spec"] = class_spec_to_json(report.spec);
  j["mode"] = to_string(report.mode);
  // The worker count never appears here: report bytes must not depend on it.
  j["raw_tuple_count"] = report.raw_tuple_count;
  j["total_class_size"] = report.total_class_size;
  j["orbit_count"] = report.orbit_count();
  ordered_json orbits = ordered_json::array();
  for (const OrbitSummary& orbit : report.orbits) {
    ordered_json o;
    o["size"] = orbit.size;
    o["representative"] = tuple_to_json(orbit.representative);
    if (orbit.lifting_invariant)
      o["lifting_invariant"] = *orbit.lifting_invariant;
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  if (include_timing) j["wall_time_s"] = report.wall_time_s;
  return j;
}

}  // namespace hurwitz
