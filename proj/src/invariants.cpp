#include "rauzy/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rauzy {

CycleInvariant cycle_invariant(const Perm& s) {
  const int n = static_cast<int>(s.size());
  if (!is_irreducible(s)) {
    throw std::invalid_argument(
        "cycle invariant requires an irreducible permutation (top-left block of size " +
        std::to_string(block_decomposition(s).sizes.front()) + ")");
  }
  const Perm si = inverse(s);
  // token ids: Top(j) = j for 0..n; Bot(i) = n + i for 1..n.
  // succ(Top j) = Bot(sigma^{-1}(j+1)) for j < n; succ(Top n) = Top(sigma(1))
  // crossing the corner mark; succ(Bot i) = Top(sigma(i+1)); Bot(n) terminal.
  auto succ = [&](int t, bool& mark) {
    mark = false;
    if (t <= n) {
      if (t == n) {
        mark = true;
        return s[0];
      }
      return n + si[t];
    }
    const int i = t - n;
    if (i == n) return -1;
    return s[i];
  };
  std::vector<char> seen(2 * n + 1, 0);
  CycleInvariant out;
  // rank path Top(0) -> ... -> Bot(n)
  int cur = 0;
  seen[0] = 1;
  int tops_after_mark = 0;
  bool used_mark = false;
  while (true) {
    bool mark = false;
    const int nxt = succ(cur, mark);
    if (mark) used_mark = true;
    if (nxt < 0) break;
    cur = nxt;
    seen[cur] = 1;
    if (1 <= cur && cur <= n - 1) {
      ++out.rank;
      if (used_mark) ++tops_after_mark;
    }
  }
  // remaining tokens form cycles; length = internal-top count
  for (int start = 1; start < 2 * n; ++start) {
    if (seen[start] || start == n) continue;
    int len = 0;
    bool this_mark = false;
    int c = start;
    do {
      seen[c] = 1;
      if (1 <= c && c <= n - 1) ++len;
      bool mark = false;
      c = succ(c, mark);
      if (mark) this_mark = true;
    } while (c != start);
    out.lambda.push_back(len);
    if (this_mark) out.principal = len;
  }
  std::sort(out.lambda.begin(), out.lambda.end());
  out.type_h = used_mark;
  if (used_mark) {
    out.r2 = tops_after_mark;
    out.r1 = out.rank - tops_after_mark + 1;
    out.principal = 0;
  }
  return out;
}

std::vector<int> lambda_prime(const Perm& p) {
  CycleInvariant ci = cycle_invariant(p);
  ci.lambda.push_back(ci.rank);
  std::sort(ci.lambda.begin(), ci.lambda.end());
  return ci.lambda;
}

long long noncrossing_count(const Perm& p, const std::vector<int>& I) {
  const int n = static_cast<int>(p.size());
  std::vector<int> idx = I;
  std::sort(idx.begin(), idx.end());
  long long c = 0;
  for (size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > n) throw std::invalid_argument("index out of range");
    for (size_t b = a + 1; b < idx.size(); ++b) {
      if (p[idx[a] - 1] < p[idx[b] - 1]) ++c;
    }
  }
  return c;
}

ArfData arf_naive(const Perm& p, int cap) {
  const int n = static_cast<int>(p.size());
  if (n > cap) {
    throw std::invalid_argument("arf_naive: size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  }
  // nonx[k]: edges forming a non-crossing pair with edge k
  std::vector<std::uint32_t> nonx(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (static_cast<long long>(i - j)) * (p[i] - p[j]) > 0) {
        nonx[i] |= 1u << j;
      }
    }
  }
  // Gray-code walk over all subsets; chi changes by |I & nonx[k]| on toggling k.
  ArfData out;
  out.abar = 1;  // empty subset: (-1)^{0+0}
  out.a = 1;
  std::uint32_t I = 0;
  int chi_par = 0;
  int size_par = 0;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    const int k = std::countr_zero(m);  // bit toggled between gray(m-1), gray(m)
    const std::uint32_t bit = 1u << k;
    if (I & bit) {
      I ^= bit;
      chi_par ^= std::popcount(I & nonx[k]) & 1;
      size_par ^= 1;
    } else {
      chi_par ^= std::popcount(I & nonx[k]) & 1;
      I ^= bit;
      size_par ^= 1;
    }
    out.a += chi_par ? -1 : 1;
    out.abar += (chi_par ^ size_par) ? -1 : 1;
  }
  out.sign = out.abar > 0 ? 1 : (out.abar < 0 ? -1 : 0);
  return out;
}

namespace {
// Flat GF(2) row workspace: each row has `words` machine words for its
// coordinate bits, `words` for its B-image bits, and a q value.
struct F2Rows {
  int n, words;
  std::vector<std::uint64_t> bits, brow;
  std::vector<char> q;
  explicit F2Rows(int n_) : n(n_), words((n_ + 63) / 64) {
    bits.assign(static_cast<size_t>(n) * words, 0);
    brow.assign(static_cast<size_t>(n) * words, 0);
    q.assign(n, 1);  // q(e_i) = 1
  }
  std::uint64_t* b(int r) { return bits.data() + static_cast<size_t>(r) * words; }
  std::uint64_t* m(int r) { return brow.data() + static_cast<size_t>(r) * words; }
  int bform(int u, int v) {  // B(row u, row v) = parity(bits_u & brow_v)
    std::uint64_t acc = 0;
    const std::uint64_t* a = b(u);
    const std::uint64_t* c = m(v);
    for (int w = 0; w < words; ++w) acc ^= a[w] & c[w];
    return std::popcount(acc) & 1;
  }
  void addrow(int w, int u) {  // row w += row u, tracking q
    q[w] = static_cast<char>((q[w] + q[u] + bform(w, u)) & 1);
    std::uint64_t* bw = b(w);
    std::uint64_t* bu = b(u);
    std::uint64_t* mw = m(w);
    std::uint64_t* mu = m(u);
    for (int k = 0; k < words; ++k) {
      bw[k] ^= bu[k];
      mw[k] ^= mu[k];
    }
  }
  bool brow_zero(int r) {
    const std::uint64_t* mr = m(r);
    for (int k = 0; k < words; ++k) {
      if (mr[k]) return false;
    }
    return true;
  }
  int brow_bit(int r, int col) { return (m(r)[col >> 6] >> (col & 63)) & 1; }
};
}  // namespace

ArfData sign_fast(const Perm& p) {
  const int n = static_cast<int>(p.size());
  F2Rows rows(n);
  for (int i = 0; i < n; ++i) {
    rows.b(i)[i >> 6] |= 1ull << (i & 63);
    for (int j = 0; j < n; ++j) {
      if (i != j && (static_cast<long long>(i - j)) * (p[i] - p[j]) > 0) {
        rows.m(i)[j >> 6] |= 1ull << (j & 63);
      }
    }
  }
  // column sweep: pivot rows end up with independent B-images; unused rows
  // are reduced into the radical (B-image zero)
  std::vector<char> used(n, 0);
  std::vector<int> pivot_rows;
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int k = 0; k < n; ++k) {
      if (!used[k] && rows.brow_bit(k, col)) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = 1;
    pivot_rows.push_back(pr);
    for (int k = 0; k < n; ++k) {
      if (k != pr && !used[k] && rows.brow_bit(k, col)) rows.addrow(k, pr);
    }
  }
  ArfData out;
  bool q_on_radical = false;
  for (int k = 0; k < n; ++k) {
    if (!used[k]) {
      if (!rows.brow_zero(k)) throw std::logic_error("elimination left a nonzero free row");
      ++out.radical_dim;
      if (rows.q[k]) q_on_radical = true;  // the sum cancels: sign 0
    }
  }
  if (q_on_radical) {
    out.sign = 0;
    return out;
  }
  // greedy symplectic pairing on the pivot rows
  std::vector<int> rem = pivot_rows;
  int arf = 0;
  while (!rem.empty()) {
    const int u = rem.front();
    rem.erase(rem.begin());
    int vi = -1;
    for (size_t k = 0; k < rem.size(); ++k) {
      if (rows.bform(u, rem[k])) {
        vi = static_cast<int>(k);
        break;
      }
    }
    if (vi < 0) throw std::logic_error("nondegenerate part failed to pair");
    const int v = rem[vi];
    rem.erase(rem.begin() + vi);
    arf = (arf + (rows.q[u] & rows.q[v])) & 1;
    for (int w : rem) {
      if (rows.bform(w, v)) rows.addrow(w, u);
      if (rows.bform(w, u)) rows.addrow(w, v);
    }
  }
  out.arf_bit = arf;
  out.sign = arf == 0 ? 1 : -1;
  return out;
}

InvariantTriple invariant_triple(const Perm& p) {
  const CycleInvariant ci = cycle_invariant(p);
  return {ci.lambda, ci.rank, sign_fast(p).sign};
}

namespace {
std::string parts_text(std::vector<int> parts, bool descending) {
  if (parts.empty()) return "∅";
  // Display conventions differ: lambda prints largest part first, lambda'
  // smallest part first.
  if (descending)
    std::sort(parts.rbegin(), parts.rend());
  else
    std::sort(parts.begin(), parts.end());
  const bool wide = std::any_of(parts.begin(), parts.end(), [](int x) { return x > 9; });
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (wide && i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}
std::string sign_text(int sign) {
  return sign > 0 ? "+" : (sign < 0 ? "-" : "");
}
}  // namespace

std::string invariant_text(const std::vector<int>& lambda, int rank, int sign) {
  return parts_text(lambda, true) + "|" + std::to_string(rank) + sign_text(sign);
}

std::string invariant_text_ex(const std::vector<int>& lambda_prime, int sign) {
  return parts_text(lambda_prime, false) + sign_text(sign);
}

}  // namespace rauzy
