#pragma once
// Surgery operators: edge insertion add_i, the rank-resetting insertions q1/q2
// with their preimages, and the rank+2 operator T with its inverse.

#include <optional>

#include "rauzy/invariants.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

// (sigma(1)+1, ..., sigma(i-1)+1, 1, sigma(i)+1, ..., sigma(n)+1);
// preserves irreducibility for every i in 1..n.
Perm add_edge(const Perm& p, int i);

// q_i = the unique add_l with rank(add_l(sigma)) = i. Scans all positions;
// one or two candidates exist (two only as the pair {1, sigma^{-1}(n)}, whose
// results differ by one R application; the tie-break picks sigma^{-1}(n)).
// Requires sigma primitive irreducible with rank > i; throws otherwise.
// Invariant transitions: q1: (lambda,r,s) -> (lambda+{r},1,s);
//                        q2: (lambda,r,s) -> (lambda+{r-1},2,0).
Perm q_surgery(const Perm& p, int which);  // which in {1,2}

// Undo q_i: remove value 1, relabel; defined iff q_i of the result reproduces
// the input. When undefined, the preimage of R(sigma) is defined instead
// (at least one of the two always is). Requires rank(sigma) = which.
std::optional<Perm> q_preimage(const Perm& p, int which);

// T: size +2, rank +2, sign preserved. With l = sigma(1): result sigma' has
// sigma'(1) = l+2, sigma'(2) = 1, sigma'(i+2) = sigma(i)+1 if sigma(i) <= l
// else sigma(i)+2. Requires n >= 1; the unique rank-0 input (n = 1) yields a
// reducible image and is accepted but degenerate.
Perm t_apply(const Perm& p);

// Requires the left-edge T-structure: sigma'(2) = 1, sigma'(1) = sigma'(3)+1,
// n >= 3; throws "no T-structure" otherwise. t_apply . t_inverse = identity.
Perm t_inverse(const Perm& p);

// Which of the six insertion transitions maps `before` to `after`:
//   1: H(r1,r2), lambda+{s}        -> H(r1-s+1, r2),   s in 1..r1
//   2: H(r1,r2), lambda-{l}        -> H(r1+l+1, r2)
//   3: H(r1,r2), lambda+{r1+s}     -> X(r2-s, r1+s),   s in 0..r2
//   4: X(r,i),   lambda+{s}        -> X(r-s+1, i),     s in 1..r
//   5: X(r,i),   lambda-{l}, l!=i  -> X(r+l+1, i)
//   6: X(r,i),   lambda-{i}        -> H(i-s+1, r+s+1), s in 0..i
// Returns 1..6, or 0 if none applies.
int insertion_transition_row(const CycleInvariant& before,
                             const CycleInvariant& after);

struct SurgeryOutcome {
  Perm result;
  int inserted_position = 0;  // add-based operators
  int transition_row = 0;     // insertion_transition_row, 0 for T
};
SurgeryOutcome add_edge_outcome(const Perm& p, int i);

}  // namespace rauzy
