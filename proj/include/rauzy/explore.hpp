#pragma once
// Brute-force oracle: class breadth-first search over the Cayley graph,
// full enumeration at fixed n, distances, graph export, verification suites.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rauzy/ops.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

// Work limit exceeded (member cap, enumeration size gate); distinct from
// std::invalid_argument so callers can map it to a budget exit code.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassSummary {
  Perm representative;        // lexicographic minimum of the class
  std::uint64_t cardinality = 0;
  std::string invariant;      // compact invariant text of the class
  Dynamics kind = Dynamics::S;
  bool capped = false;        // true: cardinality is only a lower bound
  int diameter_bound = -1;    // 2 x seed eccentricity when computed, else -1
};

struct BfsOptions {
  std::uint64_t member_cap = UINT64_MAX;
  bool keep_members = false;
};
struct BfsResult {
  ClassSummary summary;
  std::vector<Perm> members;  // populated iff keep_members and not capped
};

// Full class from a seed; n <= 16 (4-bit packed keys). Uses generators and
// inverses so that layer indices are Cayley distances.
BfsResult bfs_class(const Perm& p, Dynamics kind, const BfsOptions& opts = {});

struct EnumerateOptions {
  bool irreducible_only = false;
  bool primitive_only = false;
  bool long_running = false;  // required for n = 11 under S (~40M permutations)
};
// Partition of the filtered size-n permutations into classes, sorted by
// invariant text then representative. n <= 10 (S, Sex); n = 11 opt-in (S).
std::vector<ClassSummary> enumerate_classes(int n, Dynamics kind,
                                            const EnumerateOptions& opts = {});

struct DistancePair {
  int graph_distance = -1;        // unit steps: one generator or inverse
  int alternation_distance = -1;  // unit steps: one full generator power
};
// Requires same class and class size within cap; throws otherwise.
DistancePair distances(const Perm& a, const Perm& b, Dynamics kind,
                       std::uint64_t cap = UINT64_MAX);

// DOT digraph with one edge per generator application (self-loops kept,
// L/R/L'/R' edge colors), vertices labeled by one-line notation.
std::string export_cayley_dot(const Perm& p, Dynamics kind,
                              std::uint64_t cap = UINT64_MAX);
// Straight embedding as TSV "vertex<TAB>x<TAB>y": x = position along the
// vertex's L-orbit, y = L-orbit index in breadth-first discovery order.
std::string export_cayley_tsv(const Perm& p, Dynamics kind,
                              std::uint64_t cap = UINT64_MAX);

// Class-atlas cache: line-oriented text. Header line
//   "atlas n=<n> dynamics=<s|sex> irreducible=<0|1> primitive=<0|1>"
// then one line per class: "<representative>|<cardinality>|<invariant text>"
// with the representative space-separated.
std::string atlas_serialize(int n, Dynamics kind, const EnumerateOptions& opts,
                            const std::vector<ClassSummary>& classes);
std::vector<ClassSummary> atlas_parse(const std::string& text);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string observed;
  std::string expected;
};
struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};
// Known suites: "tables-small", "arf-table", "exceptional-sizes",
// "census9", "census10", "nonprimitive-ratio", "fixtures".
SuiteReport verify_suite(const std::string& name);
std::vector<std::string> verify_suite_names();

}  // namespace rauzy
