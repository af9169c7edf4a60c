#pragma once
// The dynamics on permutations: generators L, R (plain) plus L', R' (extended),
// their exact inverses, generator words, irreducibility certificates,
// standardization, descents and primitive reduction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/perm.hpp"

namespace rauzy {

enum class Dynamics { S, Sex };  // S: {L,R}; Sex: {L,R,L',R'}

enum class Gen { L, R, Lp, Rp, Li, Ri, Lpi, Rpi };

// All eight are total bijections of the full symmetric group.
Perm op_L(const Perm& p);
Perm op_R(const Perm& p);
Perm op_Lp(const Perm& p);   // L' = inv . L . inv
Perm op_Rp(const Perm& p);   // R' = inv . R . inv
Perm op_Li(const Perm& p);   // exact functional inverses, closed form
Perm op_Ri(const Perm& p);
Perm op_Lpi(const Perm& p);
Perm op_Rpi(const Perm& p);
Perm apply_gen(Gen g, const Perm& p);

bool gen_valid_for(Gen g, Dynamics kind);
const std::vector<Gen>& generators(Dynamics kind);  // with inverses

// A word is a product of signed generator powers; the rightmost factor is
// applied first. Text form: whitespace-separated tokens L, R, Lp, Rp, each
// with optional ^k for any nonzero integer k (negative = inverse).
struct WordFactor {
  Gen base;   // L, R, Lp or Rp
  int power;  // nonzero
  bool operator==(const WordFactor&) const = default;
};
using Word = std::vector<WordFactor>;

Word parse_word(const std::string& text);  // throws std::invalid_argument
std::string format_word(const Word& w);
Perm apply_word(const Word& w, const Perm& p, Dynamics kind);

// Zig-zag certificate of irreducibility: alternating edge path whose length is
// the level lev(sigma). The greedy construction either terminates with a
// certificate or exposes the size of the top-left reducible block.
struct ZigzagCertificate {
  char side;                                // 'L' or 'R'
  std::vector<std::pair<int, int>> edges;   // (i_a, j_a)
  int level;                                // = edges.size()
};
struct ZigzagResult {
  std::optional<ZigzagCertificate> certificate;  // set iff irreducible
  int reducible_block;                           // top-left block size otherwise
};
ZigzagResult greedy_zigzag(const Perm& p, char side);
int lev(const Perm& p);  // min of the two sides; requires irreducible input

// Standardization: a same-class tau with tau(1) = 1, reached by a word of
// single-generator bursts; the number of bursts is at most lev(sigma).
std::pair<Perm, Word> standardize(const Perm& p);  // requires irreducible

// For standard sigma (sigma(1)=1): the n-1 permutations L^0 sigma .. L^{n-2} sigma.
std::vector<Perm> standard_family(const Perm& p);

// Descents: position i with sigma(i+1) = sigma(i)-1; special descent: i with
// sigma(1) = sigma(i)-1 and sigma(i+1) = n. Each corresponds to a length-1
// cycle of the cycle invariant. The extended dynamics additionally treats
// rank 1 as a removable unit (the extra 1-part of lambda').
struct DescentData {
  std::vector<int> descents;   // positions i, 1-based
  std::vector<int> specials;   // positions i, 1-based
  bool rank_one;               // extended kinds only; false for Dynamics::S
};
DescentData descent_data(const Perm& p, Dynamics kind);

// O(n) rank-1 detector for irreducible input, no full traversal needed:
// with p1 = sigma^{-1}(1) (p1 < n whenever n >= 2 and sigma irreducible),
//   sigma(p1+1) = n:  rank 1 iff sigma(n) = sigma(1)+1;
//   sigma(p1+1) < n:  rank 1 iff sigma(n) = sigma(p1+1)+1.
bool rank_is_one(const Perm& p);

bool is_primitive(const Perm& p, Dynamics kind);

// Removes every descent edge (descent i -> position i+1, special -> position 1)
// in one pass and relabels order-preservingly; under Sex, afterwards strips the
// rank-1 edge if the reduced permutation has rank 1 (position right after
// value 1, except the one family where that breaks irreducibility, which takes
// the value-1 edge instead). Idempotent; irreducible inputs stay irreducible.
Perm primitive_reduction(const Perm& p, Dynamics kind);

}  // namespace rauzy
