#pragma once
// The two exceptional classes: Id_n (contains the identity, 2^{n-1}-1 members)
// and Id'_n (contains id'_n, 2^{n-2}+n-2 members) - the only classes not
// separated by the invariant-plus-sign label.

#include <vector>

#include "rauzy/ops.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

enum class ExceptionalTag { None, Id, IdPrime };

// sigma(1)=1, sigma(2)=n-1, sigma(n)=n, sigma(i)=i-1 elsewhere; n >= 3.
// Degenerate overlap: id'_3 = id_3.
Perm id_prime_representative(int n);

// Membership test for irreducible primitive input (non-primitive inputs are
// tagged after primitive_reduction by the caller). n <= 3 answers literally
// (id_1, id_2 are alone in their classes; no size-3 primitive irreducible
// exists); n >= 4 standardizes, walks the L-orbit to the member fixing n,
// and compares with id_n / id'_n.
ExceptionalTag exceptional_tag(const Perm& p);

// Full class contents via class-restricted breadth-first search;
// sizes match 2^{n-1}-1 (Id) and 2^{n-2}+n-2 (IdPrime).
std::vector<Perm> enumerate_exceptional(int n, ExceptionalTag tag);

}  // namespace rauzy
