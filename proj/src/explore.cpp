#include "rauzy/explore.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "rauzy/classify.hpp"
#include "rauzy/exceptional.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/surgery.hpp"

namespace rauzy {

namespace {

// Packed 4-bit-per-entry keys, position 1 in the top nibble so that numeric
// order on keys equals lexicographic order on permutations of equal size.
std::uint64_t pack_key(const Perm& p) {
  std::uint64_t h = 0;
  for (int v : p) h = (h << 4) | static_cast<std::uint64_t>(v - 1);
  return h;
}

Perm unpack_key(std::uint64_t key, int n) {
  Perm p(n);
  for (int i = n - 1; i >= 0; --i) {
    p[i] = static_cast<int>(key & 0xF) + 1;
    key >>= 4;
  }
  return p;
}

void require_packable(const Perm& p) {
  if (!is_permutation(p) || p.empty()) throw std::invalid_argument("not a permutation");
  if (p.size() > 16) throw std::invalid_argument("class search supports sizes up to 16");
}

// The class-constant text attached to a summary: plain invariant text for
// irreducible classes, the full label for reducible ones.
std::string member_invariant_text(const Perm& p, Dynamics kind) {
  if (is_irreducible(p)) {
    const int sign = sign_fast(p).sign;
    if (kind == Dynamics::Sex) return invariant_text_ex(lambda_prime(p), sign);
    const CycleInvariant ci = cycle_invariant(p);
    return invariant_text(ci.lambda, ci.rank, sign);
  }
  return label_text(class_label(p, kind));
}

[[noreturn]] void invariant_broke(const Perm& seed, const Perm& member) {
  throw std::logic_error("class invariant not constant: seed " + format_perm(seed) +
                         " reached " + format_perm(member));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lexicographic index of a permutation among all of its size.
struct LehmerCoder {
  int n;
  std::array<std::uint64_t, 17> fact{};
  explicit LehmerCoder(int size) : n(size) {
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  }
  std::uint64_t rank(const Perm& p) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller_after = 0;
      for (int j = i + 1; j < n; ++j) smaller_after += p[j] < p[i];
      r += static_cast<std::uint64_t>(smaller_after) * fact[n - 1 - i];
    }
    return r;
  }
};

struct Bitmap {
  std::vector<std::uint64_t> words;
  explicit Bitmap(std::uint64_t size) : words((size + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  bool test_and_set(std::uint64_t i) {
    std::uint64_t& w = words[i >> 6];
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (w & m) return true;
    w |= m;
    return false;
  }
};

const std::vector<Gen>& forward_generators(Dynamics kind) {
  static const std::vector<Gen> s{Gen::L, Gen::R};
  static const std::vector<Gen> sex{Gen::L, Gen::R, Gen::Lp, Gen::Rp};
  return kind == Dynamics::Sex ? sex : s;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::L: return "L";
    case Gen::R: return "R";
    case Gen::Lp: return "L'";
    case Gen::Rp: return "R'";
    default: return "?";
  }
}

const char* gen_color(Gen g) {
  switch (g) {
    case Gen::L: return "#1f77b4";
    case Gen::R: return "#d62728";
    case Gen::Lp: return "#2ca02c";
    case Gen::Rp: return "#9467bd";
    default: return "#000000";
  }
}

}  // namespace

BfsResult bfs_class(const Perm& p, Dynamics kind, const BfsOptions& opts) {
  require_packable(p);
  const int n = static_cast<int>(p.size());
  const auto& gens = generators(kind);
  const std::string inv0 = member_invariant_text(p, kind);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1 << 12);
  const std::uint64_t start = pack_key(p);
  seen.insert(start);
  std::vector<std::uint64_t> frontier{start}, next;
  std::uint64_t min_key = start;
  bool capped = false;
  int eccentricity = 0;
  while (!frontier.empty() && !capped) {
    next.clear();
    for (std::uint64_t key : frontier) {
      const Perm u = unpack_key(key, n);
      for (Gen g : gens) {
        const Perm v = apply_gen(g, u);
        const std::uint64_t vk = pack_key(v);
        if (!seen.insert(vk).second) continue;
        if (member_invariant_text(v, kind) != inv0) invariant_broke(p, v);
        next.push_back(vk);
        min_key = std::min(min_key, vk);
        if (seen.size() > opts.member_cap) {
          capped = true;
          break;
        }
      }
      if (capped) break;
    }
    if (!capped && !next.empty()) ++eccentricity;
    frontier.swap(next);
  }

  BfsResult out;
  out.summary.representative = unpack_key(min_key, n);
  out.summary.cardinality = seen.size();
  out.summary.invariant = inv0;
  out.summary.kind = kind;
  out.summary.capped = capped;
  out.summary.diameter_bound = capped ? -1 : 2 * eccentricity;
  if (opts.keep_members && !capped) {
    std::vector<std::uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    out.members.reserve(keys.size());
    for (std::uint64_t k : keys) out.members.push_back(unpack_key(k, n));
  }
  return out;
}

std::vector<ClassSummary> enumerate_classes(int n, Dynamics kind, const EnumerateOptions& opts) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  if (n > 11 || (kind == Dynamics::Sex && n > 10))
    throw BudgetError("enumeration supports sizes up to 11 (plain) / 10 (extended)");
  if (n == 11 && !opts.long_running)
    throw BudgetError("size 11 visits ~40M permutations; enable the long-running option");

  const LehmerCoder coder(n);
  Bitmap visited(factorial(n));
  const auto& gens = generators(kind);
  std::vector<ClassSummary> out;
  std::deque<std::uint64_t> queue;

  Perm p = identity(n);
  std::uint64_t idx = 0;
  do {
    if (!visited.test(idx)) {
      const bool keep = (!opts.irreducible_only || is_irreducible(p)) &&
                        (!opts.primitive_only || is_primitive(p, kind));
      if (keep) {
        // Filters are class-constant, so the first member met in lexicographic
        // order is the class's lexicographic minimum.
        ClassSummary cs;
        cs.representative = p;
        cs.kind = kind;
        cs.invariant = member_invariant_text(p, kind);
        visited.test_and_set(idx);
        queue.clear();
        queue.push_back(pack_key(p));
        std::uint64_t count = 1;
        while (!queue.empty()) {
          const Perm u = unpack_key(queue.front(), n);
          queue.pop_front();
          for (Gen g : gens) {
            const Perm v = apply_gen(g, u);
            if (visited.test_and_set(coder.rank(v))) continue;
            if (member_invariant_text(v, kind) != cs.invariant) invariant_broke(p, v);
            ++count;
            queue.push_back(pack_key(v));
          }
        }
        cs.cardinality = count;
        out.push_back(std::move(cs));
      }
    }
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));

  std::sort(out.begin(), out.end(), [](const ClassSummary& a, const ClassSummary& b) {
    return std::tie(a.invariant, a.representative) < std::tie(b.invariant, b.representative);
  });
  return out;
}

DistancePair distances(const Perm& a, const Perm& b, Dynamics kind, std::uint64_t cap) {
  require_packable(a);
  if (!is_permutation(b) || a.size() != b.size())
    throw std::invalid_argument("distances need two permutations of one size");
  if (!same_class(a, b, kind))
    throw std::invalid_argument("the two permutations lie in different classes");
  const int n = static_cast<int>(a.size());
  const std::uint64_t target = pack_key(b);

  DistancePair out;
  // Plain Cayley distance: one step = one generator or inverse application.
  {
    const auto& gens = generators(kind);
    std::unordered_set<std::uint64_t> seen{pack_key(a)};
    std::vector<std::uint64_t> frontier{pack_key(a)}, next;
    int depth = 0;
    bool found = target == pack_key(a);
    while (!found) {
      next.clear();
      for (std::uint64_t key : frontier) {
        const Perm u = unpack_key(key, n);
        for (Gen g : gens) {
          const std::uint64_t vk = pack_key(apply_gen(g, u));
          if (seen.insert(vk).second) {
            if (vk == target) found = true;
            next.push_back(vk);
          }
        }
      }
      if (seen.size() > cap) throw BudgetError("class larger than the distance cap");
      if (next.empty()) break;  // unreachable given the same-class precheck
      ++depth;
      frontier.swap(next);
    }
    if (!found) throw std::logic_error("same-class pair not connected by search");
    out.graph_distance = depth;
  }
  // Alternation distance: one step = any power of one generator, i.e. the
  // whole single-generator orbit of the current vertex.
  {
    const auto& bases = forward_generators(kind);
    std::unordered_set<std::uint64_t> seen{pack_key(a)};
    std::vector<std::uint64_t> frontier{pack_key(a)}, next;
    int depth = 0;
    bool found = target == pack_key(a);
    while (!found) {
      next.clear();
      for (std::uint64_t key : frontier) {
        const Perm u = unpack_key(key, n);
        for (Gen g : bases) {
          for (Perm w = apply_gen(g, u); w != u; w = apply_gen(g, w)) {
            const std::uint64_t wk = pack_key(w);
            if (seen.insert(wk).second) {
              if (wk == target) found = true;
              next.push_back(wk);
            }
          }
        }
      }
      if (seen.size() > cap) throw BudgetError("class larger than the distance cap");
      if (next.empty()) break;
      ++depth;
      frontier.swap(next);
    }
    if (!found) throw std::logic_error("same-class pair not connected by orbit search");
    out.alternation_distance = depth;
  }
  return out;
}

std::string export_cayley_dot(const Perm& p, Dynamics kind, std::uint64_t cap) {
  BfsOptions bo;
  bo.member_cap = cap;
  bo.keep_members = true;
  const BfsResult r = bfs_class(p, kind, bo);
  if (r.summary.capped) throw BudgetError("class larger than the export cap");
  const int n = static_cast<int>(p.size());

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(r.members.size());
  for (std::size_t i = 0; i < r.members.size(); ++i) index[pack_key(r.members[i])] = i;

  std::ostringstream os;
  os << "digraph cayley {\n";
  os << "  // class of " << format_perm(p) << ", invariant " << r.summary.invariant << "\n";
  os << "  rankdir=LR;\n  node [shape=box fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < r.members.size(); ++i)
    os << "  v" << i << " [label=\"" << format_perm(r.members[i]) << "\"];\n";
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    for (Gen g : forward_generators(kind)) {
      const std::size_t j = index.at(pack_key(apply_gen(g, r.members[i])));
      os << "  v" << i << " -> v" << j << " [color=\"" << gen_color(g) << "\" label=\""
         << gen_name(g) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_cayley_tsv(const Perm& p, Dynamics kind, std::uint64_t cap) {
  require_packable(p);
  const int n = static_cast<int>(p.size());
  const auto& gens = generators(kind);

  std::unordered_set<std::uint64_t> seen{pack_key(p)};
  std::unordered_set<std::uint64_t> placed;
  std::deque<std::uint64_t> queue{pack_key(p)};
  int orbit = 0;
  std::ostringstream os;
  os << "vertex\tx\ty\n";
  while (!queue.empty()) {
    const std::uint64_t key = queue.front();
    queue.pop_front();
    if (!placed.count(key)) {
      // Lay the whole L-orbit of this vertex on row `orbit`.
      int x = 0;
      Perm w = unpack_key(key, n);
      std::uint64_t wk = key;
      do {
        placed.insert(wk);
        os << format_perm(w) << "\t" << x << "\t" << orbit << "\n";
        w = op_L(w);
        wk = pack_key(w);
        ++x;
      } while (wk != key);
      ++orbit;
    }
    const Perm u = unpack_key(key, n);
    for (Gen g : gens) {
      const std::uint64_t vk = pack_key(apply_gen(g, u));
      if (seen.insert(vk).second) {
        queue.push_back(vk);
        if (seen.size() > cap) throw BudgetError("class larger than the export cap");
      }
    }
  }
  return os.str();
}

std::string atlas_serialize(int n, Dynamics kind, const EnumerateOptions& opts,
                            const std::vector<ClassSummary>& classes) {
  std::ostringstream os;
  os << "atlas n=" << n << " dynamics=" << (kind == Dynamics::Sex ? "sex" : "s")
     << " irreducible=" << (opts.irreducible_only ? 1 : 0)
     << " primitive=" << (opts.primitive_only ? 1 : 0) << "\n";
  for (const ClassSummary& c : classes)
    os << format_perm(c.representative) << "|" << c.cardinality << "|" << c.invariant << "\n";
  return os.str();
}

std::vector<ClassSummary> atlas_parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty atlas text");
  std::istringstream header(line);
  std::string word, tok;
  header >> word;
  if (word != "atlas") throw std::invalid_argument("atlas header missing");
  Dynamics kind = Dynamics::S;
  bool have_kind = false;
  while (header >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed atlas header field: " + tok);
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "dynamics") {
      if (value != "s" && value != "sex") throw std::invalid_argument("unknown dynamics: " + value);
      kind = value == "sex" ? Dynamics::Sex : Dynamics::S;
      have_kind = true;
    } else if (key != "n" && key != "irreducible" && key != "primitive") {
      throw std::invalid_argument("unknown atlas header field: " + key);
    }
  }
  if (!have_kind) throw std::invalid_argument("atlas header lacks dynamics");

  std::vector<ClassSummary> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto p1 = line.find('|');
    const auto p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
    if (p2 == std::string::npos) throw std::invalid_argument("malformed atlas record: " + line);
    ClassSummary cs;
    cs.representative = parse_perm(line.substr(0, p1));
    cs.cardinality = std::stoull(line.substr(p1 + 1, p2 - p1 - 1));
    cs.invariant = line.substr(p2 + 1);
    cs.kind = kind;
    out.push_back(std::move(cs));
  }
  return out;
}

bool SuiteReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add_check(SuiteReport& rep, const std::string& name, const std::string& observed,
               const std::string& expected) {
  rep.checks.push_back({name, observed == expected, observed, expected});
}

std::string join_sorted(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

Perm primitive_core(Perm p, Dynamics kind) {
  while (!is_primitive(p, kind)) p = primitive_reduction(p, kind);
  return p;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// (invariant text, exceptional column) pairs for one table row.
std::vector<std::string> table_row(int n, Dynamics kind) {
  EnumerateOptions opts;
  opts.irreducible_only = true;
  opts.primitive_only = true;
  std::vector<std::string> got;
  const Perm idn = identity(n);
  const Perm idp = n >= 4 ? id_prime_representative(n) : Perm{};
  for (const ClassSummary& c : enumerate_classes(n, kind, opts)) {
    std::string tag;
    if (same_class(c.representative, idn, kind))
      tag = "Id";
    else if (kind == Dynamics::S && n >= 4 && same_class(c.representative, idp, kind))
      tag = "Idp";
    got.push_back(c.invariant + "/" + tag);
  }
  return got;
}

SuiteReport suite_tables_small() {
  SuiteReport rep{"tables-small", {}, };
  const std::vector<std::pair<int, std::vector<std::string>>> plain = {
      {4, {"∅|3-/Id"}},
      {5, {"2|2/Id", "3|1-/Idp"}},
      {6, {"∅|5+/Id", "22|1/Idp", "∅|5-/"}},
      {7, {"3|3+/Id", "5|1+/Idp", "2|4/", "4|2/", "3|3-/", "5|1-/"}},
      {8, {"∅|7+/Id", "33|1+/Idp", "22|3/", "32|2/", "42|1/", "33|1-/", "∅|7+/", "∅|7-/"}},
  };
  for (const auto& [n, expect] : plain)
    add_check(rep, "plain n=" + std::to_string(n), join_sorted(table_row(n, Dynamics::S)),
              join_sorted(expect));
  const std::vector<std::pair<int, std::vector<std::string>>> extended = {
      {4, {"3-/Id"}},
      {5, {"22/Id"}},
      {6, {"5+/Id", "5-/"}},
      {7, {"33+/Id", "24/", "33-/"}},
  };
  for (const auto& [n, expect] : extended)
    add_check(rep, "extended n=" + std::to_string(n), join_sorted(table_row(n, Dynamics::Sex)),
              join_sorted(expect));
  return rep;
}

SuiteReport suite_arf_table() {
  SuiteReport rep{"arf-table", {}};
  const std::vector<long long> id_expect = {-2, -4, -4, 0, 8, 16, 16, 0};
  for (int n = 2; n <= 9; ++n)
    add_check(rep, "abar(Id_" + std::to_string(n) + ")",
              std::to_string(arf_naive(identity(n)).abar),
              std::to_string(id_expect[static_cast<std::size_t>(n - 2)]));
  const std::vector<long long> idp_expect = {-8, -8, 0, 16, 32, 32};
  for (int n = 4; n <= 9; ++n)
    add_check(rep, "abar(Id'_" + std::to_string(n) + ")",
              std::to_string(arf_naive(id_prime_representative(n)).abar),
              std::to_string(idp_expect[static_cast<std::size_t>(n - 4)]));
  return rep;
}

SuiteReport suite_exceptional_sizes() {
  SuiteReport rep{"exceptional-sizes", {}};
  for (int n = 2; n <= 10; ++n) {
    const std::uint64_t want = (std::uint64_t{1} << (n - 1)) - 1;
    add_check(rep, "|Id_" + std::to_string(n) + "| by class search",
              std::to_string(bfs_class(identity(n), Dynamics::S).summary.cardinality),
              std::to_string(want));
    add_check(rep, "|Id_" + std::to_string(n) + "| under extended generators",
              std::to_string(bfs_class(identity(n), Dynamics::Sex).summary.cardinality),
              std::to_string(want));
  }
  for (int n = 4; n <= 10; ++n)
    add_check(rep, "|Id'_" + std::to_string(n) + "| by class search",
              std::to_string(bfs_class(id_prime_representative(n), Dynamics::S).summary.cardinality),
              std::to_string((std::uint64_t{1} << (n - 2)) + static_cast<std::uint64_t>(n) - 2));
  for (int n = 2; n <= 16; ++n)
    add_check(rep, "|Id_" + std::to_string(n) + "| by enumeration",
              std::to_string(enumerate_exceptional(n, ExceptionalTag::Id).size()),
              std::to_string((std::uint64_t{1} << (n - 1)) - 1));
  for (int n = 4; n <= 16; ++n)
    add_check(rep, "|Id'_" + std::to_string(n) + "| by enumeration",
              std::to_string(enumerate_exceptional(n, ExceptionalTag::IdPrime).size()),
              std::to_string((std::uint64_t{1} << (n - 2)) + static_cast<std::uint64_t>(n) - 2));
  return rep;
}

SuiteReport suite_census9() {
  SuiteReport rep{"census9", {}};
  EnumerateOptions opts;
  opts.irreducible_only = true;
  opts.primitive_only = true;
  const auto classes = enumerate_classes(9, Dynamics::S, opts);
  std::vector<std::string> got;
  std::uint64_t total = 0;
  for (const ClassSummary& c : classes) {
    got.push_back(c.invariant + ":" + std::to_string(c.cardinality));
    total += c.cardinality;
  }
  const std::vector<std::string> expect = {
      "2|6:31031",  "3|5+:6614", "3|5-:14709", "4|4:255",   "4|4:15568",
      "5|3+:3954",  "5|3-:8797", "6|2:10543",  "222|2:1255", "7|1+:2679",
      "7|1+:135",   "7|1-:6289", "322|1:2569",
  };
  add_check(rep, "class count", std::to_string(classes.size()), "13");
  add_check(rep, "cardinalities by invariant", join_sorted(got), join_sorted(expect));
  // Which of the two 4|4 classes is exceptional, and which 7|1+ is Id'.
  for (const ClassSummary& c : classes) {
    if (same_class(c.representative, identity(9), Dynamics::S))
      add_check(rep, "Id_9 cardinality", std::to_string(c.cardinality), "255");
    if (same_class(c.representative, id_prime_representative(9), Dynamics::S))
      add_check(rep, "Id'_9 cardinality", std::to_string(c.cardinality), "135");
  }
  std::uint64_t primitive_count = 0;
  Perm p = identity(9);
  do {
    if (is_irreducible(p) && is_primitive(p, Dynamics::S)) ++primitive_count;
  } while (std::next_permutation(p.begin(), p.end()));
  add_check(rep, "class sizes sum to the primitive irreducible count", std::to_string(total),
            std::to_string(primitive_count));
  return rep;
}

SuiteReport suite_census10() {
  SuiteReport rep{"census10", {}};
  struct Spot {
    Perm rep;
    std::uint64_t size;
    const char* invariant;  // empty: only the size is pinned
  };
  const std::vector<Spot> spots = {
      {identity(10), 511, ""},
      {{1, 2, 3, 4, 5, 6, 7, 9, 10, 8}, 233285, "∅|9+"},
      {{1, 2, 3, 4, 5, 7, 8, 9, 10, 6}, 352697, "∅|9-"},
      {{1, 2, 3, 4, 5, 6, 10, 7, 8, 9}, 96434, "32|4"},
      {{1, 2, 3, 4, 5, 10, 7, 8, 9, 6}, 70886, "22|5"},
      {{1, 2, 3, 4, 5, 6, 8, 9, 10, 7}, 72006, "42|3"},
      {{1, 2, 3, 4, 6, 7, 9, 10, 8, 5}, 57606, "52|2"},
      {{1, 2, 3, 4, 6, 7, 8, 9, 10, 5}, 48954, "43|2"},
      {{1, 2, 3, 4, 5, 6, 10, 8, 9, 7}, 9876, "33|3+"},
      {{1, 2, 3, 4, 8, 9, 10, 5, 6, 7}, 23167, "33|3-"},
  };
  for (const Spot& s : spots) {
    const BfsResult r = bfs_class(s.rep, Dynamics::S, {});
    add_check(rep, "cardinality at " + format_perm(s.rep), std::to_string(r.summary.cardinality),
              std::to_string(s.size));
    if (s.invariant[0] != '\0')
      add_check(rep, "invariant at " + format_perm(s.rep), r.summary.invariant, s.invariant);
  }
  return rep;
}

SuiteReport suite_nonprimitive_ratio() {
  SuiteReport rep{"nonprimitive-ratio", {}};
  for (int n = 3; n <= 8; ++n) {
    EnumerateOptions opts;
    opts.irreducible_only = true;
    int checked = 0, failed = 0;
    std::string first_failure;
    for (const ClassSummary& c : enumerate_classes(n, Dynamics::S, opts)) {
      if (is_primitive(c.representative, Dynamics::S)) continue;
      const Perm core = primitive_core(c.representative, Dynamics::S);
      const std::uint64_t core_size =
          core.size() <= 1 ? 1 : bfs_class(core, Dynamics::S).summary.cardinality;
      const std::uint64_t want = binomial(n, static_cast<int>(core.size())) * core_size;
      ++checked;
      if (c.cardinality != want) {
        ++failed;
        if (first_failure.empty())
          first_failure = format_perm(c.representative) + " has " +
                          std::to_string(c.cardinality) + ", ratio predicts " +
                          std::to_string(want);
      }
    }
    add_check(rep, "n=" + std::to_string(n) + " (" + std::to_string(checked) + " classes)",
              failed == 0 ? "all match" : first_failure, "all match");
  }
  return rep;
}

SuiteReport suite_fixtures() {
  SuiteReport rep{"fixtures", {}};
  add_check(rep, "single R application", format_perm(op_R(parse_perm("1 4 5 2 3 6"))),
            "4 5 2 3 1 6");
  const Perm t_small = parse_perm("5 8 3 6 7 1 2 4");
  const Perm t_big = parse_perm("7 1 6 10 4 8 9 2 3 5");
  add_check(rep, "rank+2 surgery forward", format_perm(t_apply(t_small)), format_perm(t_big));
  add_check(rep, "rank+2 surgery backward", format_perm(t_inverse(t_big)), format_perm(t_small));
  const Perm q2 = q_surgery(identity(8), 2);
  add_check(rep, "q2 of the identity", format_perm(q2), "2 3 4 5 1 6 7 8 9");
  add_check(rep, "four-step word on q2", format_perm(apply_word(parse_word("R L R^-1 L^3"), q2, Dynamics::S)),
            "3 7 8 1 9 2 4 5 6");
  const auto pre = q_preimage(q2, 2);
  add_check(rep, "q2 preimage", pre ? format_perm(*pre) : "(undefined)", "1 2 3 4 5 6 7 8");
  return rep;
}

}  // namespace

SuiteReport verify_suite(const std::string& name) {
  if (name == "tables-small") return suite_tables_small();
  if (name == "arf-table") return suite_arf_table();
  if (name == "exceptional-sizes") return suite_exceptional_sizes();
  if (name == "census9") return suite_census9();
  if (name == "census10") return suite_census10();
  if (name == "nonprimitive-ratio") return suite_nonprimitive_ratio();
  if (name == "fixtures") return suite_fixtures();
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<std::string> verify_suite_names() {
  return {"tables-small", "arf-table",          "exceptional-sizes", "census9",
          "census10",     "nonprimitive-ratio", "fixtures"};
}

}  // namespace rauzy
