#include "rauzy/exceptional.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace rauzy {

Perm id_prime_representative(int n) {
  if (n < 3) throw std::invalid_argument("id' requires size >= 3");
  Perm out(n);
  out[0] = 1;
  out[1] = n - 1;
  out[n - 1] = n;
  for (int i = 2; i < n - 1; ++i) out[i] = i;  // sigma(i+1) = i
  return out;
}

ExceptionalTag exceptional_tag(const Perm& p) {
  const int n = static_cast<int>(p.size());
  if (n < 1 || !is_permutation(p)) throw std::invalid_argument("not a permutation");
  if (!is_irreducible(p)) return ExceptionalTag::None;  // both classes are irreducible
  // n <= 3: Id_n is exactly the set of irreducible permutations (1, 12, and
  // {123, 132, 213}); id'_3 coincides with id_3.
  if (n <= 3) return ExceptionalTag::Id;
  // Members of Id_n / Id'_n are primitive for n >= 4 (primitivity is a class
  // property and both representatives are primitive).
  if (!is_primitive(p, Dynamics::S)) return ExceptionalTag::None;
  Perm t = standardize(p).first;
  for (int step = 0; step < n - 1 && t[n - 1] != n; ++step) t = op_L(t);
  if (t == identity(n)) return ExceptionalTag::Id;
  if (t == id_prime_representative(n)) return ExceptionalTag::IdPrime;
  return ExceptionalTag::None;
}

namespace {

// Dense enough for the sizes involved (2^{n-1} members maximum).
struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

std::vector<Perm> enumerate_exceptional(int n, ExceptionalTag tag) {
  if (tag == ExceptionalTag::None) throw std::invalid_argument("no class selected");
  if (n < 1 || (tag == ExceptionalTag::IdPrime && n < 3))
    throw std::invalid_argument("class undefined at this size");
  const Perm start = tag == ExceptionalTag::Id ? identity(n) : id_prime_representative(n);
  std::unordered_set<Perm, PermHash> seen{start};
  std::deque<Perm> queue{start};
  while (!queue.empty()) {
    Perm u = std::move(queue.front());
    queue.pop_front();
    for (Perm v : {op_L(u), op_R(u)}) {
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rauzy
