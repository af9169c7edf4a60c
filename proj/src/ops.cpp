#include "rauzy/ops.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rauzy {

Perm op_L(const Perm& s) {
  const int n = static_cast<int>(s.size());
  const int q = s[0];
  if (q == n) return s;
  Perm t(n);
  for (int i = 0; i < n; ++i) {
    const int v = s[i];
    t[i] = v <= q ? v : (v == n ? q + 1 : v + 1);
  }
  return t;
}

Perm op_Li(const Perm& s) {
  const int n = static_cast<int>(s.size());
  const int q = s[0];  // L fixes the value at position 1
  if (q == n) return s;
  Perm t(n);
  for (int i = 0; i < n; ++i) {
    const int v = s[i];
    t[i] = v <= q ? v : (v == q + 1 ? n : v - 1);
  }
  return t;
}

Perm op_R(const Perm& s) {
  const int n = static_cast<int>(s.size());
  const int p = static_cast<int>(std::find(s.begin(), s.end(), n) - s.begin()) + 1;
  if (p == 1) return s;
  Perm t;
  t.reserve(n);
  t.insert(t.end(), s.begin() + 1, s.begin() + (p - 1));
  t.push_back(s[0]);
  t.push_back(n);
  t.insert(t.end(), s.begin() + p, s.end());
  return t;
}

Perm op_Ri(const Perm& s) {
  const int n = static_cast<int>(s.size());
  const int p = static_cast<int>(std::find(s.begin(), s.end(), n) - s.begin()) + 1;
  if (p == 1) return s;
  Perm t;
  t.reserve(n);
  t.push_back(s[p - 2]);
  t.insert(t.end(), s.begin(), s.begin() + (p - 2));
  t.push_back(n);
  t.insert(t.end(), s.begin() + p, s.end());
  return t;
}

Perm op_Lp(const Perm& s) { return inverse(op_L(inverse(s))); }
Perm op_Lpi(const Perm& s) { return inverse(op_Li(inverse(s))); }
Perm op_Rp(const Perm& s) { return inverse(op_R(inverse(s))); }
Perm op_Rpi(const Perm& s) { return inverse(op_Ri(inverse(s))); }

Perm apply_gen(Gen g, const Perm& p) {
  switch (g) {
    case Gen::L: return op_L(p);
    case Gen::R: return op_R(p);
    case Gen::Lp: return op_Lp(p);
    case Gen::Rp: return op_Rp(p);
    case Gen::Li: return op_Li(p);
    case Gen::Ri: return op_Ri(p);
    case Gen::Lpi: return op_Lpi(p);
    case Gen::Rpi: return op_Rpi(p);
  }
  throw std::logic_error("unknown generator");
}

bool gen_valid_for(Gen g, Dynamics kind) {
  if (kind == Dynamics::Sex) return true;
  return g == Gen::L || g == Gen::R || g == Gen::Li || g == Gen::Ri;
}

const std::vector<Gen>& generators(Dynamics kind) {
  static const std::vector<Gen> s = {Gen::L, Gen::R, Gen::Li, Gen::Ri};
  static const std::vector<Gen> sex = {Gen::L,  Gen::R,  Gen::Lp,  Gen::Rp,
                                       Gen::Li, Gen::Ri, Gen::Lpi, Gen::Rpi};
  return kind == Dynamics::S ? s : sex;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    int power = 1;
    if (caret != std::string::npos) {
      const std::string ptxt = tok.substr(caret + 1);
      size_t used = 0;
      try {
        power = std::stoi(ptxt, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad word token: '" + tok + "'");
      }
      if (used != ptxt.size() || power == 0) {
        throw std::invalid_argument("bad word token: '" + tok + "'");
      }
    }
    Gen g;
    if (base == "L") g = Gen::L;
    else if (base == "R") g = Gen::R;
    else if (base == "Lp") g = Gen::Lp;
    else if (base == "Rp") g = Gen::Rp;
    else throw std::invalid_argument("bad word token: '" + tok + "'");
    w.push_back({g, power});
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& f : w) {
    if (!out.empty()) out.push_back(' ');
    switch (f.base) {
      case Gen::L: out += "L"; break;
      case Gen::R: out += "R"; break;
      case Gen::Lp: out += "Lp"; break;
      case Gen::Rp: out += "Rp"; break;
      default: throw std::logic_error("word factors use base generators only");
    }
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

namespace {
Gen inverse_gen(Gen g) {
  switch (g) {
    case Gen::L: return Gen::Li;
    case Gen::R: return Gen::Ri;
    case Gen::Lp: return Gen::Lpi;
    case Gen::Rp: return Gen::Rpi;
    case Gen::Li: return Gen::L;
    case Gen::Ri: return Gen::R;
    case Gen::Lpi: return Gen::Lp;
    case Gen::Rpi: return Gen::Rp;
  }
  throw std::logic_error("unknown generator");
}
}  // namespace

Perm apply_word(const Word& w, const Perm& p, Dynamics kind) {
  Perm t = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {  // rightmost first
    if (!gen_valid_for(it->base, kind)) {
      throw std::invalid_argument("generator not in this dynamics");
    }
    const Gen g = it->power > 0 ? it->base : inverse_gen(it->base);
    const int reps = it->power > 0 ? it->power : -it->power;
    for (int k = 0; k < reps; ++k) t = apply_gen(g, t);
  }
  return t;
}

namespace {
// Anti-transpose: the symmetry exchanging the two zig-zag sides.
Perm anti_transpose(const Perm& s) {
  const int n = static_cast<int>(s.size());
  const Perm si = inverse(s);
  Perm t(n);
  for (int k = 0; k < n; ++k) t[k] = n + 1 - si[n - 1 - k];
  return t;
}
}  // namespace

ZigzagResult greedy_zigzag(const Perm& s, char side) {
  if (side == 'R') {
    const int n = static_cast<int>(s.size());
    ZigzagResult res = greedy_zigzag(anti_transpose(s), 'L');
    if (res.certificate) {
      res.certificate->side = 'R';
      for (auto& [i, j] : res.certificate->edges) {  // back to original frame
        const int oi = n + 1 - j;
        const int oj = n + 1 - i;
        i = oi;
        j = oj;
      }
    }
    return res;
  }
  const int n = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> edges{{1, s[0]}};
  auto done = [&](void) {
    ZigzagResult r;
    r.certificate = ZigzagCertificate{'L', edges, static_cast<int>(edges.size())};
    r.reducible_block = 0;
    return r;
  };
  auto blocked = [&](int block) {
    ZigzagResult r;
    r.reducible_block = block;
    return r;
  };
  if (s[0] == n) return n > 1 ? blocked(1) : done();
  if (s[0] == 1) return done();
  const Perm si = inverse(s);
  // suffix maxima of value positions: maxpos[v] = max position of values >= v
  std::vector<int> maxpos(n + 2, 0);
  for (int v = n; v >= 1; --v) maxpos[v] = std::max(maxpos[v + 1], si[v - 1]);
  // prefix minima of images: minval[i] = min sigma(2..i)
  std::vector<int> minval(n + 1, n + 1);
  for (int i = 2; i <= n; ++i) minval[i] = std::min(minval[i - 1], s[i - 1]);
  while (true) {
    // even round: widest edge above the last value
    const int j = edges.back().second;
    const int i = maxpos[j];
    if (i <= n - j + 1) return blocked(n - j + 1);
    edges.emplace_back(i, s[i - 1]);
    if (i == n) return done();
    // odd round: lowest value left of the last position (excluding position 1)
    const int i2 = edges.back().first;
    const int j2 = minval[i2];
    if (j2 >= n - i2 + 1) return blocked(i2);
    edges.emplace_back(si[j2 - 1], j2);
    if (j2 == 1) return done();
  }
}

int lev(const Perm& s) {
  const ZigzagResult a = greedy_zigzag(s, 'L');
  const ZigzagResult b = greedy_zigzag(s, 'R');
  if (!a.certificate || !b.certificate) {
    throw std::invalid_argument("lev requires an irreducible permutation");
  }
  return std::min(a.certificate->level, b.certificate->level);
}

std::pair<Perm, Word> standardize(const Perm& s) {
  if (!is_irreducible(s)) {
    throw std::invalid_argument("standardize requires an irreducible permutation");
  }
  const int limit = 10 * static_cast<int>(s.size()) + 10;
  Perm t = s;
  std::vector<WordFactor> performed;
  int guard = 0;
  while (t[0] != 1) {
    if (++guard > limit) throw std::logic_error("standardize failed to converge");
    const int n = static_cast<int>(t.size());
    const auto zl = greedy_zigzag(t, 'L').certificate->edges;
    const auto zr = greedy_zigzag(t, 'R').certificate->edges;
    bool use_l = zl.size() <= zr.size();
    if (use_l && zl.size() >= 2) {
      const int j2 = zl[1].second;
      const int k = n - j2;
      for (int c = 0; c < k; ++c) t = op_L(t);
      if (k > 0) performed.push_back({Gen::L, k});
      continue;
    }
    // R side; burst length from the second greedy edge's position. Falls back
    // to rotating value 1 to the front when the edge gives no progress.
    int k = 0;
    if (zr.size() >= 2) {
      k = zr[1].first - 1;
    }
    if (k <= 0) {
      const int p = static_cast<int>(std::find(t.begin(), t.end(), 1) - t.begin()) + 1;
      k = p - 1;
    }
    for (int c = 0; c < k; ++c) t = op_R(t);
    if (k > 0) performed.push_back({Gen::R, k});
  }
  Word w(performed.rbegin(), performed.rend());  // first burst = rightmost factor
  return {t, w};
}

std::vector<Perm> standard_family(const Perm& s) {
  const int n = static_cast<int>(s.size());
  if (n < 1 || s[0] != 1 || !is_irreducible(s)) {
    throw std::invalid_argument("standard_family requires a standard irreducible permutation");
  }
  std::vector<Perm> fam;
  Perm t = s;
  for (int i = 0; i + 1 < n; ++i) {
    fam.push_back(t);
    t = op_L(t);
  }
  if (fam.empty()) fam.push_back(s);  // n = 1
  return fam;
}

bool rank_is_one(const Perm& s) {
  const int n = static_cast<int>(s.size());
  if (n == 1) return false;
  if (!is_irreducible(s)) return false;  // the shortcut below assumes irreducibility
  const int p1 = static_cast<int>(std::find(s.begin(), s.end(), 1) - s.begin()) + 1;
  if (p1 == n) return false;
  const int v = s[p1];
  return v == n ? s[n - 1] == s[0] + 1 : s[n - 1] == v + 1;
}

DescentData descent_data(const Perm& s, Dynamics kind) {
  const int n = static_cast<int>(s.size());
  DescentData d;
  for (int i = 1; i < n; ++i) {
    if (s[i] == s[i - 1] - 1) d.descents.push_back(i);
    if (s[0] == s[i - 1] - 1 && s[i] == n) d.specials.push_back(i);
  }
  d.rank_one = kind == Dynamics::Sex && rank_is_one(s);
  return d;
}

bool is_primitive(const Perm& s, Dynamics kind) {
  const DescentData d = descent_data(s, kind);
  return d.descents.empty() && d.specials.empty() && !d.rank_one;
}

namespace {
Perm remove_positions(const Perm& s, const std::vector<char>& drop) {
  Perm kept;
  kept.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (!drop[i]) kept.push_back(s[i]);
  }
  Perm sorted_vals = kept;
  std::sort(sorted_vals.begin(), sorted_vals.end());
  for (int& v : kept) {
    v = static_cast<int>(std::lower_bound(sorted_vals.begin(), sorted_vals.end(), v) -
                         sorted_vals.begin()) + 1;
  }
  return kept;
}

/// Strip the rank-1 unit from a descent-free rank-1 permutation. Default edge:
// position right after value 1 (it borders both gaps of the rank path); the
// family sigma(1)=n-1, sigma(n-1)=1, sigma(n)=n is the one case where that
// removal is reducible, and takes the value-1 edge instead.
Perm rank1_strip(const Perm& s) {
  const int n = static_cast<int>(s.size());
  if (n <= 1) return s;
  const int p1 = static_cast<int>(std::find(s.begin(), s.end(), 1) - s.begin()) + 1;
  std::vector<char> drop(n, 0);
  if (s[0] == n - 1 && s[n - 2] == 1 && s[n - 1] == n) {
    drop[p1 - 1] = 1;
  } else {
    drop[p1] = 1;  // position p1+1, 0-based p1
  }
  return remove_positions(s, drop);
}
}  // namespace

Perm primitive_reduction(const Perm& s, Dynamics kind) {
  const int n = static_cast<int>(s.size());
  const DescentData d = descent_data(s, Dynamics::S);
  std::vector<char> drop(n, 0);
  for (int i : d.descents) drop[i] = 1;           // position i+1, 0-based i
  if (!d.specials.empty()) drop[0] = 1;           // position 1
  Perm q = remove_positions(s, drop);
  if (kind == Dynamics::Sex && rank_is_one(q)) q = rank1_strip(q);
  return q;
}

}  // namespace rauzy
