#include "artifact/distribution.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "artifact/linalg.hpp"
#include "artifact/relations.hpp"
#include "artifact/rewrite.hpp"

namespace artifact {

// ---------------------------------------------------------------- DeltaDist

DeltaDist DeltaDist::constant(int nvars, const Element& c) {
  DeltaDist d(nvars, c.trunc());
  d.add(DeltaKey(nvars, {kNoVar, 0}), c);
  return d;
}

void DeltaDist::add(const DeltaKey& key, const Element& c) {
  if (c.trunc() != N_) throw std::invalid_argument("truncation level mismatch");
  if (static_cast<int>(key.size()) != n_) throw std::invalid_argument("delta key has wrong arity");
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

DeltaDist& DeltaDist::operator+=(const DeltaDist& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

DeltaDist& DeltaDist::operator-=(const DeltaDist& o) {
  for (const auto& [k, c] : o.t_) add(k, c * Scalar(-1));
  return *this;
}

DeltaDist& DeltaDist::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, e] : t_) e *= c;
  return *this;
}

DeltaDist operator*(const DeltaDist& a, const DeltaDist& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("delta distributions over different variables");
  DeltaDist r(a.n_, a.N_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      DeltaKey k(ka);
      for (int v = 0; v < a.n_; ++v) {
        if (kb[v].first == kNoVar) continue;
        if (k[v].first != kNoVar) throw std::invalid_argument("product of distributions in the same variable");
        k[v] = kb[v];
      }
      r.add(k, ca * cb);
    }
  return r;
}

std::string DeltaDist::key_str(const DeltaKey& key, const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < n_; ++v) {
    if (key[v].first == kNoVar) continue;
    os << (first ? "" : " ") << "D[" << key[v].first << "," << key[v].second << "](" << names[v] << ")";
    first = false;
  }
  return first ? "1" : os.str();
}

namespace {

DeltaDist mul_by_var(const DeltaDist& d, int v) {
  DeltaDist r(d.nvars(), d.trunc());
  for (const auto& [key, c] : d.terms()) {
    auto [k, m] = key[v];
    if (k == kNoVar) throw std::invalid_argument("polynomial factor on a term without delta support");
    Element ac = c * Scalar::q(k);
    r.add(key, ac);
    if (m > 0) {
      DeltaKey low(key);
      low[v].second = m - 1;
      r.add(low, ac);
    }
  }
  return r;
}

// binom(r, m) for any integer r.
mpz_class gen_binom(long r, int m) {
  mpz_class num = 1, den = 1;
  for (int t = 0; t < m; ++t) {
    num *= r - t;
    den *= t + 1;
  }
  return num / den;
}

}  // namespace

DeltaDist mul_by_poly(const DeltaDist& d, int v, const std::vector<Scalar>& c) {
  DeltaDist r(d.nvars(), d.trunc()), pw = d;
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (t) pw = mul_by_var(pw, v);
    if (!c[t].is_zero()) r += pw * c[t];
  }
  return r;
}

DeltaDist delta_product(const DeltaDist& d, int u, int v) {
  DeltaDist r(d.nvars(), d.trunc());
  for (const auto& [key, c] : d.terms()) {
    auto [k, M] = key[u];
    if (k == kNoVar) throw std::invalid_argument("delta(u/v) needs delta support in u");
    if (key[v].first != kNoVar) throw std::invalid_argument("delta(u/v) times a term already in v");
    for (int m = 0; m <= M; ++m) {
      DeltaKey nk(key);
      nk[u] = {k, m};
      nk[v] = {k, M - m};
      r.add(nk, c);
    }
  }
  return r;
}

Element mode_coefficient(const DeltaDist& d, int v, int r) {
  Element out(d.trunc());
  for (const auto& [key, c] : d.terms()) {
    for (int w = 0; w < d.nvars(); ++w)
      if (w != v && key[w].first != kNoVar) throw std::invalid_argument("mode of a multi-variable distribution");
    auto [k, m] = key[v];
    if (k == kNoVar) {
      if (r == 0) out += c;
      continue;
    }
    mpz_class b = gen_binom(r, m);
    if (b == 0) continue;
    out += c * (Scalar(Laurent::monomial(b, 0)) * Scalar::q(k * r));
  }
  return out;
}

DeltaDist theta_image(const CartanData& cd, const PointSet& P, int N, Series s, int node, int nvars,
                      int var) {
  if (node < 1 || node > cd.n) throw std::invalid_argument("node out of range");
  if (s == Series::K) return DeltaDist::constant(nvars, Element::word(N, {GenSym::Ks(node)}));
  if (s == Series::Kinv) return DeltaDist::constant(nvars, Element::word(N, {GenSym::Kinvs(node)}));
  DeltaDist d(nvars, N);
  const Kind kd = s == Series::Xplus ? Kind::Eplus : s == Series::Xminus ? Kind::Eminus : Kind::H;
  for (int k : P.at(node))
    for (int m = 0; m < N; ++m) {
      DeltaKey key(nvars, {kNoVar, 0});
      key[var] = {k, m};
      d.add(key, Element::word(N, {GenSym{kd, node, k, m}}));
    }
  return d;
}

// ---------------------------------------------------------------- relation catalog

std::string UqlgRelation::name() const {
  switch (id) {
    case UqlgId::PhiZero: return "phi0-k";
    case UqlgId::PhiK: return "phi-k";
    case UqlgId::XpXm: return "xplus-xminus";
    case UqlgId::KX: return "k-x";
    case UqlgId::PhiX: return "phi-x";
    case UqlgId::XX: return "x-x";
    case UqlgId::Serre: return "serre";
  }
  return "?";
}

std::string UqlgRelation::params() const {
  std::ostringstream os;
  switch (id) {
    case UqlgId::PhiZero: os << "i=" << i; break;
    case UqlgId::PhiK:
    case UqlgId::XpXm: os << "i=" << i << " j=" << j; break;
    default: os << "i=" << i << " j=" << j << " sign=" << (sign > 0 ? "+" : "-");
  }
  return os.str();
}

std::vector<UqlgRelation> uqlg_catalog(const CartanData& cd) {
  std::vector<UqlgRelation> out;
  for (int i = 1; i <= cd.n; ++i) out.push_back({UqlgId::PhiZero, i, i, 1});
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) out.push_back({UqlgId::PhiK, i, j, 1});
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) out.push_back({UqlgId::XpXm, i, j, 1});
  for (auto id : {UqlgId::KX, UqlgId::PhiX, UqlgId::XX})
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j)
        for (int sg : {1, -1}) out.push_back({id, i, j, sg});
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j)
      if (i != j)
        for (int sg : {1, -1}) out.push_back({UqlgId::Serre, i, j, sg});
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

using Letter = std::tuple<int, int, int>;  // (kind, node, point)

Letter letter_of(const GenSym& g) { return {static_cast<int>(g.kind), g.node, g.k}; }

std::vector<Letter> letters_of(const Word& w) {
  std::vector<Letter> l;
  for (const auto& g : w) l.push_back(letter_of(g));
  std::sort(l.begin(), l.end());
  return l;
}

// Span of framed E-E exchange and cyclic Serre relations inside one block of words sharing
// the same (kind, node, point) letters, mod F_N.
class IdealSpan {
 public:
  IdealSpan(const CartanData& cd, const PointSet& P, int N) : cd_(cd), P_(P), N_(N) {}

  bool contains(const Element& x) {
    std::map<std::vector<Letter>, Element> parts;
    for (const auto& [w, c] : x.terms()) {
      auto [it, fresh] = parts.emplace(letters_of(w), Element(N_));
      it->second.add(w, c);
    }
    for (const auto& [key, part] : parts) {
      const Block& b = block(key);
      if (!b.span) return false;
      Vec v(b.index.size());
      for (const auto& [w, c] : part.terms()) {
        auto it = b.index.find(w);
        if (it == b.index.end()) return false;
        v[it->second] = c;
      }
      if (!b.span->contains(v)) return false;
    }
    return true;
  }

 private:
  struct Block {
    std::map<Word, int> index;
    std::unique_ptr<RowSpace> span;
  };
  const CartanData& cd_;
  const PointSet& P_;
  int N_;
  std::map<std::vector<Letter>, Block> cache_;

  const Block& block(const std::vector<Letter>& key) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Block& b = cache_[key];
    for (const auto& l : key)
      if (std::get<0>(l) == static_cast<int>(Kind::K) || std::get<0>(l) == static_cast<int>(Kind::Kinv))
        return b;  // K letters: no span
    std::vector<Word> words = block_words(key);
    for (const auto& w : words) b.index.emplace(w, static_cast<int>(b.index.size()));
    b.span = std::make_unique<RowSpace>(static_cast<int>(b.index.size()));
    auto insert = [&](const Word& pre, const Element& rel, const Word& post) {
      Element f = Element::word(N_, pre) * rel * Element::word(N_, post);
      if (f.is_zero()) return;
      Vec v(b.index.size());
      for (const auto& [w, c] : f.terms()) v[b.index.at(w)] = c;
      b.span->insert(v);
    };
    for (const auto& w : words) {
      const int L = static_cast<int>(w.size());
      for (int p = 0; p + 1 < L; ++p) {
        Element rel(N_);
        if (!pair_relation(w[p], w[p + 1], rel)) continue;
        insert(Word(w.begin(), w.begin() + p), rel, Word(w.begin() + p + 2, w.end()));
      }
      for (int p = 0; p < L; ++p)
        for (int e = p + 3; e <= L; ++e) {
          Word win(w.begin() + p, w.begin() + e);
          Element rel(N_);
          if (!serre_window(win, rel)) continue;
          insert(Word(w.begin(), w.begin() + p), rel, Word(w.begin() + e, w.end()));
        }
    }
    return b;
  }

  // All orderings of the letters with every m-assignment of total degree < N.
  std::vector<Word> block_words(std::vector<Letter> key) const {
    std::vector<Word> out;
    const int L = static_cast<int>(key.size());
    do {
      std::vector<int> ms(L, 0);
      std::function<void(int, int)> rec = [&](int t, int used) {
        if (t == L) {
          Word w;
          for (int u = 0; u < L; ++u)
            w.push_back(GenSym{static_cast<Kind>(std::get<0>(key[u])), std::get<1>(key[u]), std::get<2>(key[u]), ms[u]});
          out.push_back(w);
          return;
        }
        for (int m = 0; used + m < N_; ++m) {
          ms[t] = m;
          rec(t + 1, used + m);
        }
      };
      rec(0, 0);
    } while (std::next_permutation(key.begin(), key.end()));
    return out;
  }

  // Relation whose words are x y and y x up to m-shifts, when one exists without leaving the block.
  bool pair_relation(const GenSym& x, const GenSym& y, Element& rel) const {
    if (x.is_E() && y.is_E() && x.kind == y.kind) {
      rel = exchange_relation(cd_, N_, x, y);
      return true;
    }
    if (x.kind == Kind::H && y.is_E()) {
      rel = exchange_relation(cd_, N_, x, y);
      return true;
    }
    if (x.is_E() && y.kind == Kind::H) {
      rel = exchange_relation(cd_, N_, y, x);
      return true;
    }
    if (x.kind == Kind::H && y.kind == Kind::H) {
      rel = Element::word(N_, {x, y}) - Element::word(N_, {y, x});
      return true;
    }
    if (x.kind == Kind::Eplus && y.kind == Kind::Eminus && (x.node != y.node || x.k != y.k)) {
      rel = epem_relation(N_, x, y);
      return true;
    }
    if (x.kind == Kind::Eminus && y.kind == Kind::Eplus && (x.node != y.node || x.k != y.k)) {
      rel = epem_relation(N_, y, x);
      return true;
    }
    return false;
  }

  // A window that is exactly one cyclic Serre word (up to the order its letters appear in).
  bool serre_window(const Word& win, Element& rel) const {
    if (!win.front().is_E()) return false;
    const int sg = win.front().sign();
    std::map<int, int> count;
    for (const auto& g : win) {
      if (g.kind != win.front().kind) return false;
      count[g.node]++;
    }
    if (count.size() != 2) return false;
    for (auto [j, cj] : count) {
      if (cj != 1) continue;
      int i = -1;
      for (auto [n, c] : count)
        if (n != j) i = n;
      if (cd_.B(i, j) == 0) continue;
      const int s = serre_order(cd_, i, j);
      if (count[i] != s) continue;
      int b = 0, n = 0;
      for (const auto& g : win)
        if (g.node == j) b = g.k, n = g.m;
      auto pts = serre_points(cd_, i, j, b, sg);
      std::vector<int> ms(s, -1);
      for (const auto& g : win) {
        if (g.node != i) continue;
        auto it = std::find(pts.begin(), pts.end(), g.k);
        if (it == pts.end()) return false;
        ms[it - pts.begin()] = g.m;
      }
      if (std::count(ms.begin(), ms.end(), -1)) return false;
      rel = serre_instance(cd_, P_, N_, i, j, b, ms, n, sg);
      return true;
    }
    return false;
  }
};

bool no_K(const Element& x) {
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) return false;
    for (const auto& g : w)
      if (g.is_Ktype()) return false;
  }
  return true;
}

struct Piece {
  DeltaDist expr;
  std::vector<std::string> names;
};

// (cu u + cv v) d
DeltaDist lin(const DeltaDist& d, const Scalar& cu, const Scalar& cv) {
  return mul_by_poly(d, 0, {Scalar(0), cu}) + mul_by_poly(d, 1, {Scalar(0), cv});
}

std::vector<Piece> relation_pieces(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N) {
  const int i = rel.i, j = rel.j;
  if (i < 1 || i > cd.n || j < 1 || j > cd.n) throw std::invalid_argument("node out of range");
  const std::vector<std::string> uv = {"u", "v"};
  auto img = [&](Series s, int node, int nv, int var) { return theta_image(cd, P, N, s, node, nv, var); };
  const Series xs = rel.sign > 0 ? Series::Xplus : Series::Xminus;
  std::vector<Piece> out;
  switch (rel.id) {
    case UqlgId::PhiZero: {
      Element lhs = mode_coefficient(img(Series::Phi, i, 1, 0), 0, 0);
      Scalar inv = (cd.qi(i) - cd.qi(i).inverse()).inverse();
      lhs -= (Element::word(N, {GenSym::Ks(i)}) - Element::word(N, {GenSym::Kinvs(i)})) * inv;
      out.push_back({DeltaDist::constant(1, lhs), {"z"}});
      break;
    }
    case UqlgId::PhiK: {
      auto pu = img(Series::Phi, i, 2, 0), pv = img(Series::Phi, j, 2, 1);
      out.push_back({pu * pv - pv * pu, uv});
      auto k2 = img(Series::K, j, 2, 0);
      out.push_back({pu * k2 - k2 * pu, uv});
      auto ki = img(Series::K, i, 2, 0), kj = img(Series::K, j, 2, 0);
      out.push_back({ki * kj - kj * ki, uv});
      break;
    }
    case UqlgId::XpXm: {
      auto xu = img(Series::Xplus, i, 2, 0), xv = img(Series::Xminus, j, 2, 1);
      DeltaDist e = xu * xv - xv * xu;
      if (i == j) e -= delta_product(img(Series::Phi, i, 2, 0), 0, 1);
      out.push_back({e, uv});
      break;
    }
    case UqlgId::KX: {
      auto k = img(Series::K, i, 1, 0), x = img(xs, j, 1, 0);
      out.push_back({k * x - (x * k) * Scalar::q(rel.sign * cd.B(i, j)), {"v"}});
      break;
    }
    case UqlgId::PhiX:
    case UqlgId::XX: {
      auto a = rel.id == UqlgId::PhiX ? img(Series::Phi, i, 2, 0) : img(xs, i, 2, 0);
      auto x = img(xs, j, 2, 1);
      Scalar Q = Scalar::q(rel.sign * cd.B(i, j));
      out.push_back({lin(a * x, Scalar(1), -Q) - lin(x * a, Q, Scalar(-1)), uv});
      break;
    }
    case UqlgId::Serre: {
      if (i == j) throw std::invalid_argument("Serre relation needs i != j");
      const int s = serre_order(cd, i, j);
      std::vector<std::string> names;
      for (int t = 1; t <= s; ++t) names.push_back("w" + std::to_string(t));
      names.push_back("z");
      std::vector<DeltaDist> xw;
      for (int t = 0; t < s; ++t) xw.push_back(img(xs, i, s + 1, t));
      auto xz = img(xs, j, s + 1, s);
      std::vector<int> pi(s);
      std::iota(pi.begin(), pi.end(), 0);
      DeltaDist e(s + 1, N);
      do
        for (int r = 0; r <= s; ++r) {
          DeltaDist t = DeltaDist::constant(s + 1, Element::scalar(N, Scalar(1)));
          for (int u = 0; u < r; ++u) t = t * xw[pi[u]];
          t = t * xz;
          for (int u = r; u < s; ++u) t = t * xw[pi[u]];
          Scalar c = qbinom(s, r, cd.r(i));
          e += t * (r % 2 ? -c : c);
        }
      while (std::next_permutation(pi.begin(), pi.end()));
      out.push_back({e, names});
      break;
    }
  }
  return out;
}

VerifyResult verify_impl(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N, bool parallel) {
  if (rel.id == UqlgId::Serre || rel.id == UqlgId::PhiX || rel.id == UqlgId::XX ||
      rel.id == UqlgId::KX)
    if (rel.sign != 1 && rel.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  VerifyResult res;
  res.rel = rel;
  res.trunc = N;
  Rewriter rw(cd, P, N);
  IdealSpan ideal(cd, P, N);
  for (const auto& piece : relation_pieces(rel, cd, P, N)) {
    std::vector<std::pair<DeltaKey, Element>> coeffs(piece.expr.terms().begin(), piece.expr.terms().end());
    const int nc = static_cast<int>(coeffs.size());
    std::vector<Element> red(nc, Element(N));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t < nc; ++t) red[t] = rw.triangular_form(coeffs[t].second);
    res.coefficients += nc;
    for (int t = 0; t < nc; ++t) {
      if (red[t].is_zero()) continue;
      const Element& raw = coeffs[t].second;
      if (no_K(raw) && ideal.contains(raw)) continue;
      if (no_K(red[t]) && ideal.contains(red[t])) continue;
      res.ok = false;
      for (const auto& [w, c] : red[t].terms())
        res.residual.push_back({piece.expr.key_str(coeffs[t].first, piece.names), w, c});
    }
  }
  return res;
}

}  // namespace

VerifyResult verify_relation(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N) {
  return verify_impl(rel, cd, P, N, true);
}

VerifyResult verify_relation_serial(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N) {
  return verify_impl(rel, cd, P, N, false);
}

// ---------------------------------------------------------------- determinant identities

namespace {

ZPoly det_closed(int M, int p) {
  ZPoly prod = ZPoly::constant(p, 1);
  for (int t = 0; t < p; ++t) prod = prod * ZPoly::var(p, t);
  ZPoly r = prod.pow(M * (M + 1) / 2);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) r = r * (ZPoly::var(p, b) - ZPoly::var(p, a)).pow(M * M);
  return r;
}

mpz_class binom_z(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Leibniz terms of det X whose permutation starts with first; each term is a monomial.
ZPoly det_terms(int M, int p, int first) {
  const int n = M * p;
  ZPoly acc(p);
  std::vector<int> rest;
  for (int c = 0; c < n; ++c)
    if (c != first) rest.push_back(c);
  do {
    std::vector<int> sigma{first};
    sigma.insert(sigma.end(), rest.begin(), rest.end());
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += sigma[a] > sigma[b];
    mpz_class c = inv % 2 ? -1 : 1;
    std::vector<int> e(p, 0);
    for (int row = 0; row < n; ++row) {
      const int col = sigma[row], pt = col / M, m = col % M + 1, nn = row + 1;
      c *= binom_z(nn + m - 2, m - 1);
      e[pt] += nn;
    }
    acc.add(e, c);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return acc;
}

}  // namespace

DetX det_X(int M, int npoints) {
  if (M < 1 || npoints < 1) throw std::invalid_argument("det_X needs M, npoints >= 1");
  const int n = M * npoints;
  std::vector<ZPoly> part(n, ZPoly(npoints));
#pragma omp parallel for schedule(dynamic)
  for (int f = 0; f < n; ++f) part[f] = det_terms(M, npoints, f);
  DetX r{ZPoly(npoints), det_closed(M, npoints)};
  for (const auto& p : part) r.computed += p;
  return r;
}

DetX det_X_serial(int M, int npoints) {
  if (M < 1 || npoints < 1) throw std::invalid_argument("det_X needs M, npoints >= 1");
  DetX r{ZPoly(npoints), det_closed(M, npoints)};
  for (int f = 0; f < M * npoints; ++f) r.computed += det_terms(M, npoints, f);
  return r;
}

mpz_class det_binom(int M, int k) {
  if (M < 1 || k < 0) throw std::invalid_argument("det_binom needs M >= 1, k >= 0");
  std::vector<std::vector<mpz_class>> a(M, std::vector<mpz_class>(M));
  for (int n = 1; n <= M; ++n)
    for (int m = 1; m <= M; ++m) a[n - 1][m - 1] = binom_z(n + m + k - 2, m - 1);
  // fraction-free Bareiss elimination
  mpz_class prev = 1, sign = 1;
  for (int c = 0; c < M; ++c) {
    int piv = c;
    while (piv < M && a[piv][c] == 0) ++piv;
    if (piv == M) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < M; ++r) {
      for (int t = c + 1; t < M; ++t) a[r][t] = (a[r][t] * a[c][c] - a[r][c] * a[c][t]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[M - 1][M - 1];
}

}  // namespace artifact
