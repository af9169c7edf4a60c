#include "rauzy/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rauzy {

Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

Perm inverse(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(n);
  for (int i = 0; i < n; ++i) q[p[i] - 1] = i + 1;
  return q;
}

bool is_permutation(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

Perm reverse_complement(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(n);
  for (int i = 0; i < n; ++i) q[n - 1 - i] = n + 1 - p[i];
  return q;
}

bool is_irreducible(const Perm& p) {
  const int n = static_cast<int>(p.size());
  int run_min = n + 1;
  for (int k = 1; k < n; ++k) {
    run_min = std::min(run_min, p[k - 1]);
    if (run_min == n - k + 1) return false;
  }
  return true;
}

BlockDecomposition block_decomposition(const Perm& p) {
  const int n = static_cast<int>(p.size());
  BlockDecomposition out;
  int run_min = n + 1;
  int start = 0;  // 0-based start of the current block
  for (int k = 1; k <= n; ++k) {
    run_min = std::min(run_min, p[k - 1]);
    if (k == n || run_min == n - k + 1) {
      const int size = k - start;
      Perm block(size);
      // values of this block occupy the band run_min .. run_min+size-1
      for (int t = 0; t < size; ++t) block[t] = p[start + t] - run_min + 1;
      out.sizes.push_back(size);
      out.blocks.push_back(std::move(block));
      start = k;
      run_min = n + 1;
    }
  }
  return out;
}

Perm parse_perm(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') {
      s.push_back(' ');
    } else {
      s.push_back(c);
    }
  }
  Perm p;
  std::istringstream in(s);
  int v = 0;
  while (in >> v) p.push_back(v);
  if (!in.eof()) throw std::invalid_argument("not a permutation: '" + text + "'");
  if (p.empty() || !is_permutation(p)) {
    throw std::invalid_argument("not a permutation: '" + text + "'");
  }
  return p;
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace rauzy
