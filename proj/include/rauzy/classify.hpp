#pragma once
// Polynomial-time canonical class labels and same-class decisions for both
// dynamics, covering reducible and non-primitive inputs.

#include <optional>
#include <string>
#include <vector>

#include "rauzy/exceptional.hpp"
#include "rauzy/ops.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

// Label of one irreducible block, computed on its primitive core (the fixed
// point of primitive_reduction). Under S the core carries (lambda, rank);
// under Sex it carries lambda' (rank = -1 marks that case). Sign, invariant
// and exceptional tag are the core's; descent_count is the number of removed
// unit edges, which pins down the block's own invariant.
struct BlockLabel {
  int n = 0;
  int descent_count = 0;  // kind-appropriate count of removable 1-units
  ExceptionalTag tag = ExceptionalTag::None;
  std::vector<int> lambda;  // lambda (S) or lambda' (Sex), sorted
  int rank = -1;            // -1 for Sex-style labels
  int sign = 0;
  bool operator==(const BlockLabel&) const = default;
};

// Reducible permutations evolve only in the outermost blocks: under S the
// first block moves and everything after it is frozen pointwise; under Sex
// the first block moves under {L,R} and the last under {L',R'} (equivalently,
// {L,R} on its inverse), with the middle frozen pointwise.
struct ClassLabel {
  Dynamics kind = Dynamics::S;
  int n = 0;
  BlockLabel first;
  std::optional<BlockLabel> last;  // Sex reducible only (S-label of the inverse)
  std::vector<int> frozen;         // literal tail (S) / middle (Sex) values
  bool operator==(const ClassLabel&) const = default;
};

ClassLabel class_label(const Perm& p, Dynamics kind);
bool same_class(const Perm& a, const Perm& b, Dynamics kind);
std::string label_text(const ClassLabel& label);

}  // namespace rauzy
