#pragma once
// Class invariants: the cycle invariant (lambda, r) with structure type X/H,
// the extended invariant lambda' = lambda + {r}, and the Arf sign, computed
// both by the exponential-sum definition and by a polynomial GF(2) algorithm.

#include <cstdint>
#include <string>
#include <vector>

#include "rauzy/perm.hpp"

namespace rauzy {

struct CycleInvariant {
  std::vector<int> lambda;  // cycle lengths, sorted ascending
  int rank = 0;             // open-path length r
  bool type_h = false;      // true: rank path passes the corner mark
  int principal = 0;        // type X: length of the cycle through the mark
  int r1 = 0, r2 = 0;       // type H: r1 + r2 = r + 1
  bool operator==(const CycleInvariant&) const = default;
};

// Gap-token traversal, O(n); throws std::invalid_argument on reducible input
// (message names the offending block size).
CycleInvariant cycle_invariant(const Perm& p);

// lambda' = lambda + {r}, sorted ascending; sums to n-1.
std::vector<int> lambda_prime(const Perm& p);

// #{i<j in I : sigma(i) < sigma(j)} - pairs of non-crossing edges within I.
long long noncrossing_count(const Perm& p, const std::vector<int>& I);

struct ArfData {
  long long abar = 0;   // sum over subsets of (-1)^{|I|+chi_I}   (naive only)
  long long a = 0;      // sum over subsets of (-1)^{chi_I}       (naive only)
  int sign = 0;         // -1 / 0 / +1
  int radical_dim = 0;  // dimension of the bilinear form's radical (fast only)
  int arf_bit = 0;      // defined when sign != 0 (fast only)
};

// Exponential sum over all 2^n subsets; throws when n exceeds the cap.
ArfData arf_naive(const Perm& p, int cap = 20);

// Polynomial path: quadratic form q(e_i) = 1 with bilinear form
// B_ij = [edges i,j do not cross]; radical elimination + symplectic pairing,
// O(n^3) bit-ops on word-packed rows. sign = 0 iff q is nonzero on the radical.
ArfData sign_fast(const Perm& p);

struct InvariantTriple {
  std::vector<int> lambda;
  int rank = 0;
  int sign = 0;
  bool operator==(const InvariantTriple&) const = default;
};
InvariantTriple invariant_triple(const Perm& p);  // requires irreducible

// Compact text: lambda parts concatenated (comma-separated once any part
// exceeds 9), "|", rank, then +/- (omitted when sign is 0): "22|1", "@|7+".
// The empty lambda prints as the UTF-8 empty-set symbol.
std::string invariant_text(const std::vector<int>& lambda, int rank, int sign);
std::string invariant_text_ex(const std::vector<int>& lambda_prime, int sign);

}  // namespace rauzy
