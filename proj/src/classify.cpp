#include "rauzy/classify.hpp"

#include <stdexcept>

#include "rauzy/invariants.hpp"

namespace rauzy {

namespace {

const char* tag_text(ExceptionalTag tag) {
  switch (tag) {
    case ExceptionalTag::Id: return "Id";
    case ExceptionalTag::IdPrime: return "IdPrime";
    default: return "none";
  }
}

BlockLabel label_block(Perm block, Dynamics kind, bool via_inverse) {
  if (via_inverse) {
    // A block driven by {L',R'} alone evolves exactly as {L,R} on its inverse.
    block = inverse(block);
    kind = Dynamics::S;
  }
  BlockLabel out;
  out.n = static_cast<int>(block.size());
  Perm core = block;
  while (!is_primitive(core, kind)) core = primitive_reduction(core, kind);
  out.descent_count = out.n - static_cast<int>(core.size());
  ExceptionalTag tag = exceptional_tag(core);
  if (kind == Dynamics::Sex && tag == ExceptionalTag::IdPrime)
    tag = ExceptionalTag::None;  // Id' is not exceptional under the extended dynamics
  out.tag = tag;
  out.sign = sign_fast(core).sign;
  if (kind == Dynamics::Sex) {
    out.lambda = lambda_prime(core);
    out.rank = -1;
  } else {
    CycleInvariant ci = cycle_invariant(core);
    out.lambda = std::move(ci.lambda);
    out.rank = ci.rank;
  }
  return out;
}

std::string block_text(const BlockLabel& b) {
  std::string core = b.rank < 0 ? invariant_text_ex(b.lambda, b.sign)
                                : invariant_text(b.lambda, b.rank, b.sign);
  return "n=" + std::to_string(b.n) + " d=" + std::to_string(b.descent_count) +
         " tag=" + tag_text(b.tag) + " core=" + core;
}

}  // namespace

ClassLabel class_label(const Perm& p, Dynamics kind) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  ClassLabel out;
  out.kind = kind;
  out.n = static_cast<int>(p.size());
  BlockDecomposition bd = block_decomposition(p);
  if (bd.blocks.size() == 1) {
    out.first = label_block(bd.blocks.front(), kind, false);
    return out;
  }
  if (kind == Dynamics::S) {
    // Only the leading block (the one holding value n and position 1) moves;
    // everything to its right is frozen pointwise.
    out.first = label_block(bd.blocks.front(), Dynamics::S, false);
    out.frozen.assign(p.begin() + bd.sizes.front(), p.end());
    return out;
  }
  // Extended dynamics: the leading block moves under {L,R}, the trailing block
  // under {L',R'}; the middle is frozen pointwise.
  out.first = label_block(bd.blocks.front(), Dynamics::S, false);
  out.last = label_block(bd.blocks.back(), Dynamics::Sex, true);
  out.frozen.assign(p.begin() + bd.sizes.front(), p.end() - bd.sizes.back());
  return out;
}

bool same_class(const Perm& a, const Perm& b, Dynamics kind) {
  if (a.size() != b.size()) return false;
  return class_label(a, kind) == class_label(b, kind);
}

std::string label_text(const ClassLabel& label) {
  std::string out = label.kind == Dynamics::Sex ? "sex" : "s";
  out += " n=" + std::to_string(label.n);
  if (!label.last && label.frozen.empty()) {
    out += " irreducible " + block_text(label.first);
    return out;
  }
  out += " reducible first{" + block_text(label.first) + "}";
  if (label.last) out += " last{" + block_text(*label.last) + "}";
  out += " frozen=[";
  for (size_t i = 0; i < label.frozen.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(label.frozen[i]);
  }
  out += "]";
  return out;
}

}  // namespace rauzy
