#pragma once
// Permutations in one-line notation: p[i] = sigma(i+1), values 1..n.
// Value semantics throughout; every function returns a fresh object.

#include <string>
#include <vector>

namespace rauzy {

using Perm = std::vector<int>;

Perm identity(int n);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);

// tau(n+1-i) = n+1-sigma(i): the half-turn symmetry of the diagram.
Perm reverse_complement(const Perm& p);

// No k < n with {sigma(1..k)} = {n-k+1..n}; single pass over running minima.
bool is_irreducible(const Perm& p);

struct BlockDecomposition {
  std::vector<int> sizes;          // k_1..k_m, sum = n
  std::vector<Perm> blocks;        // block t rescaled to size k_t
};
BlockDecomposition block_decomposition(const Perm& p);

// "4 5 1 2 6 3", "4,5,1,2,6,3" or "[4,5,1,2,6,3]"; throws std::invalid_argument.
Perm parse_perm(const std::string& text);
std::string format_perm(const Perm& p);  // space-separated 1-based images

}  // namespace rauzy
