#include "rauzy/surgery.hpp"

#include <algorithm>
#include <stdexcept>

#include "rauzy/ops.hpp"

namespace rauzy {

namespace {

std::vector<int> sorted_with(const std::vector<int>& parts, int extra) {
  std::vector<int> out = parts;
  out.push_back(extra);
  std::sort(out.begin(), out.end());
  return out;
}

// Removes one instance of `gone`; empty result distinct from "not present",
// so the caller checks presence first.
std::vector<int> sorted_without(const std::vector<int>& parts, int gone) {
  std::vector<int> out = parts;
  auto it = std::find(out.begin(), out.end(), gone);
  out.erase(it);
  return out;
}

bool contains(const std::vector<int>& parts, int v) {
  return std::find(parts.begin(), parts.end(), v) != parts.end();
}

}  // namespace

Perm add_edge(const Perm& p, int i) {
  const int n = static_cast<int>(p.size());
  if (i < 1 || i > n) throw std::invalid_argument("insertion position out of range");
  Perm out;
  out.reserve(n + 1);
  for (int k = 0; k < i - 1; ++k) out.push_back(p[k] + 1);
  out.push_back(1);
  for (int k = i - 1; k < n; ++k) out.push_back(p[k] + 1);
  return out;
}

Perm q_surgery(const Perm& p, int which) {
  const int n = static_cast<int>(p.size());
  if (which != 1 && which != 2) throw std::invalid_argument("q index must be 1 or 2");
  if (!is_irreducible(p)) throw std::invalid_argument("q surgery requires an irreducible permutation");
  if (!is_primitive(p, Dynamics::S)) throw std::invalid_argument("q surgery requires a primitive permutation");
  if (cycle_invariant(p).rank <= which)
    throw std::invalid_argument("q surgery requires rank greater than the target rank");

  std::vector<int> candidates;
  for (int l = 1; l <= n; ++l) {
    Perm t = add_edge(p, l);
    if (is_irreducible(t) && cycle_invariant(t).rank == which) candidates.push_back(l);
  }
  if (candidates.size() == 1) return add_edge(p, candidates[0]);
  if (candidates.size() == 2) {
    // The only possible tie: inserting before position 1 vs. after the column
    // carrying value n; the two results differ by one R application.
    int pn = 0;
    for (int k = 0; k < n; ++k)
      if (p[k] == n) pn = k + 1;
    const bool tie_ok = (candidates[0] == 1 && candidates[1] == pn) ||
                        (candidates[0] == pn && candidates[1] == 1);
    Perm a = add_edge(p, 1), b = add_edge(p, pn);
    if (!tie_ok || !(a == op_Ri(b) || b == op_Ri(a)))
      throw std::logic_error("unexpected candidate pair in q surgery");
    return b;
  }
  throw std::logic_error("q surgery found no admissible insertion");
}

std::optional<Perm> q_preimage(const Perm& p, int which) {
  const int n = static_cast<int>(p.size());
  if (which != 1 && which != 2) throw std::invalid_argument("q index must be 1 or 2");
  if (n < 2) return std::nullopt;
  if (!is_irreducible(p)) throw std::invalid_argument("q preimage requires an irreducible permutation");
  if (cycle_invariant(p).rank != which)
    throw std::invalid_argument("q preimage requires rank equal to the q index");

  Perm cand;
  cand.reserve(n - 1);
  for (int v : p)
    if (v != 1) cand.push_back(v - 1);
  if (!is_irreducible(cand) || !is_primitive(cand, Dynamics::S)) return std::nullopt;
  if (cycle_invariant(cand).rank <= which) return std::nullopt;
  if (q_surgery(cand, which) == p) return cand;
  return std::nullopt;
}

Perm t_apply(const Perm& p) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw std::invalid_argument("t requires a nonempty permutation");
  const int l = p[0];
  Perm out;
  out.reserve(n + 2);
  out.push_back(l + 2);
  out.push_back(1);
  for (int v : p) out.push_back(v <= l ? v + 1 : v + 2);
  return out;
}

Perm t_inverse(const Perm& p) {
  const int n = static_cast<int>(p.size());
  if (n < 3 || p[1] != 1 || p[0] != p[2] + 1) throw std::invalid_argument("no T-structure");
  std::vector<int> vals;
  vals.reserve(n - 2);
  for (int k = 2; k < n; ++k)
    if (p[k] != 1 && p[k] != p[0]) vals.push_back(p[k]);
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  Perm out;
  out.reserve(vals.size());
  for (int v : vals) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return out;
}

int insertion_transition_row(const CycleInvariant& before, const CycleInvariant& after) {
  const std::vector<int>& lam = before.lambda;
  const std::vector<int>& lam2 = after.lambda;
  if (before.type_h) {
    const int r1 = before.r1, r2 = before.r2;
    if (after.type_h) {
      for (int s = 1; s <= r1; ++s)
        if (sorted_with(lam, s) == lam2 && after.r1 == r1 - s + 1 && after.r2 == r2) return 1;
      for (int l : lam)
        if (sorted_without(lam, l) == lam2 && after.r1 == r1 + l + 1 && after.r2 == r2) return 2;
    } else {
      for (int s = 0; s <= r2; ++s)
        if (sorted_with(lam, r1 + s) == lam2 && after.rank == r2 - s && after.principal == r1 + s)
          return 3;
    }
  } else {
    const int r = before.rank, i = before.principal;
    if (!after.type_h) {
      for (int s = 1; s <= r; ++s)
        if (sorted_with(lam, s) == lam2 && after.rank == r - s + 1 && after.principal == i) return 4;
      for (int l : lam)
        if (sorted_without(lam, l) == lam2 && after.rank == r + l + 1 && after.principal == i)
          return 5;
    } else if (contains(lam, i)) {
      const std::vector<int> rest = sorted_without(lam, i);
      for (int s = 0; s <= i; ++s)
        if (rest == lam2 && after.r1 == i - s + 1 && after.r2 == r + s + 1) return 6;
    }
  }
  return 0;
}

SurgeryOutcome add_edge_outcome(const Perm& p, int i) {
  SurgeryOutcome out;
  out.result = add_edge(p, i);
  out.inserted_position = i;
  out.transition_row = 0;
  if (is_irreducible(p) && is_irreducible(out.result))
    out.transition_row = insertion_transition_row(cycle_invariant(p), cycle_invariant(out.result));
  return out;
}

}  // namespace rauzy
