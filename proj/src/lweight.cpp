#include "artifact/lweight.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace artifact {

PointSet::PointSet(int rank, std::vector<int> common) {
  std::sort(common.begin(), common.end());
  if (std::adjacent_find(common.begin(), common.end()) != common.end())
    throw std::invalid_argument("duplicate point exponent");
  pts.assign(rank, common);
}

PointSet::PointSet(std::vector<std::vector<int>> per_node) : pts(std::move(per_node)) {
  for (auto& p : pts) {
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw std::invalid_argument("duplicate point exponent");
  }
}

bool PointSet::contains(int i, int k) const {
  if (i < 1 || i > rank()) return false;
  return std::binary_search(pts[i - 1].begin(), pts[i - 1].end(), k);
}

// ---------------------------------------------------------------- RatForm

RatForm& RatForm::operator*=(const RatForm& o) {
  qpow += o.qpow;
  for (auto [j, e] : o.fac)
    if ((fac[j] += e) == 0) fac.erase(j);
  return *this;
}

RatForm RatForm::inverse() const {
  RatForm r;
  r.qpow = -qpow;
  for (auto [j, e] : fac) r.fac[j] = -e;
  return r;
}

Scalar RatForm::at(const Scalar& u) const {
  Scalar v = Scalar::q(qpow);
  for (auto [j, e] : fac) v *= (Scalar(1) - Scalar::q(j) * u).pow(e);
  return v;
}

std::string RatForm::str() const {
  std::ostringstream num, den;
  num << "q^" << qpow;
  bool any_den = false;
  for (auto [j, e] : fac) {
    std::ostringstream& os = e > 0 ? num : den;
    if (e < 0 && any_den) os << "*";
    if (e < 0) any_den = true;
    if (e > 0) os << "*";
    os << "(1 - q^" << j << "*u)";
    int p = e > 0 ? e : -e;
    if (p != 1) os << "^" << p;
  }
  return any_den ? num.str() + "/(" + den.str() + ")" : num.str();
}

// ---------------------------------------------------------------- LWeight

LWeight& LWeight::operator*=(const LWeight& o) {
  for (auto& [key, e] : o.y)
    if ((y[key] += e) == 0) y.erase(key);
  return *this;
}

LWeight LWeight::inverse() const {
  LWeight r;
  for (auto& [key, e] : y) r.y[key] = -e;
  return r;
}

bool LWeight::dominant() const {
  return std::all_of(y.begin(), y.end(), [](const auto& kv) { return kv.second > 0; });
}

RatForm y_rational(const CartanData& cd, int i, int k, int node) {
  RatForm f;
  if (i != node) return f;
  f.qpow = cd.r(i);
  f.fac[k - 2 * cd.r(i)] = 1;
  f.fac[k] = -1;
  return f;
}

RatForm LWeight::rational_form(const CartanData& cd, int node) const {
  RatForm f;
  for (auto& [key, e] : y) {
    if (key.first != node) continue;
    RatForm g = y_rational(cd, key.first, key.second, node);
    for (int t = 0; t < (e > 0 ? e : -e); ++t) f *= (e > 0 ? g : g.inverse());
  }
  return f;
}

std::string LWeight::str(bool rank1) const {
  if (y.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, e] : y) {
    if (!first) os << " ";
    first = false;
    if (rank1) os << "Y" << key.second;
    else os << "Y[" << key.first << "," << key.second << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LWeight LWeight::parse(const std::string& s) {
  LWeight w;
  std::size_t p = 0;
  auto ws = [&] {
    while (p < s.size() && (std::isspace(static_cast<unsigned char>(s[p])) || s[p] == '*')) ++p;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("lweight parse: ") + what + " in \"" + s + "\"");
  };
  auto integer = [&]() {
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p || !std::isdigit(static_cast<unsigned char>(s[p - 1]))) fail("expected integer");
    return std::stoi(s.substr(start, p - start));
  };
  ws();
  if (s.substr(p) == "1") return w;
  while (ws(), p < s.size()) {
    if (s[p] != 'Y') fail("expected Y");
    ++p;
    int node = 1, k;
    if (p < s.size() && s[p] == '[') {
      ++p;
      node = integer();
      if (p >= s.size() || s[p] != ',') fail("expected ','");
      ++p;
      k = integer();
      if (p >= s.size() || s[p] != ']') fail("expected ']'");
      ++p;
    } else {
      k = integer();
    }
    int e = 1;
    if (p < s.size() && s[p] == '^') {
      ++p;
      e = integer();
    }
    if ((w.y[{node, k}] += e) == 0) w.y.erase({node, k});
  }
  return w;
}

LWeight y_monomial(const std::vector<std::tuple<int, int, int>>& spec) {
  LWeight w;
  for (auto [i, k, e] : spec)
    if ((w.y[{i, k}] += e) == 0) w.y.erase({i, k});
  return w;
}

RatForm a_root_rational(const CartanData& cd, int j, int k, int node) {
  RatForm f;
  int b = cd.B(j, node);
  if (b == 0) return f;
  f.qpow = b;
  f.fac[k - b] = 1;
  f.fac[k + b] = -1;
  return f;
}

bool lweight_from_rational(const CartanData& cd, const std::vector<RatForm>& forms, LWeight& out) {
  out = LWeight();
  for (int i = 1; i <= cd.n; ++i) {
    const RatForm& f = forms[i - 1];
    const int step = 2 * cd.r(i);
    // Y_{i,x} contributes (1 - q^{x-step} u)/(1 - q^x u): N(j) = e_{j+step} - e_j.
    std::set<int> support;
    for (auto [j, e] : f.fac)
      for (int t = 0; t <= 64; ++t) support.insert(j - t * step);
    int total = 0;
    for (int x : support) {
      int e = 0;
      for (auto [j, nj] : f.fac)
        if (j >= x && (j - x) % step == 0) e -= nj;
      if (e != 0) {
        out.y[{i, x}] = e;
        total += e;
      }
    }
    if (out.rational_form(cd, i) != f) return false;
    (void)total;
  }
  return true;
}

LWeight a_root(const CartanData& cd, int j, int k) {
  std::vector<RatForm> forms;
  for (int i = 1; i <= cd.n; ++i) forms.push_back(a_root_rational(cd, j, k, i));
  LWeight w;
  if (!lweight_from_rational(cd, forms, w)) throw std::logic_error("A-root is not a Y-monomial");
  return w;
}

LWeight lweight_mul(const LWeight& x, const LWeight& y) { return x * y; }

LWeight apply_aroot_inv(const CartanData& cd, const LWeight& x, int j, int k) {
  return x * a_root(cd, j, k).inverse();
}

// ---------------------------------------------------------------- partial fractions

Scalar pfrac_basis(int k, int m, const Scalar& u) {
  Scalar x = Scalar::q(k) * u;
  if (m == 0) return x / (Scalar(1) - x);
  return x.pow(m) / (Scalar(1) - x).pow(m + 1);
}

namespace {

// Power series of (alpha + beta t)^f to order n over Q(q).
std::vector<Scalar> binomial_series(const Scalar& alpha, const Scalar& beta, int f, int n) {
  std::vector<Scalar> s(n);
  if (n == 0) return s;
  Scalar ratio = beta / alpha, term = alpha.pow(f);
  for (int t = 0; t < n; ++t) {
    s[t] = term;
    term *= Scalar(f - t) * ratio / Scalar(t + 1);
  }
  return s;
}

std::vector<Scalar> series_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> r(a.size());
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; s + t < a.size(); ++t) r[s + t] += a[s] * b[t];
  return r;
}

}  // namespace

PFrac partial_fractions(const CartanData& cd, const LWeight& w, int node) {
  RatForm f = w.rational_form(cd, node);
  PFrac out;
  out.lambda = Scalar::q(f.qpow);
  for (auto [k, e] : f.fac) {
    if (e >= 0) continue;
    const int p = -e;
    // u = q^{-k}(1 - t): gamma = q^qpow t^{-p} prod_{j != k} ((1 - q^{j-k}) + q^{j-k} t)^{f_j}
    std::vector<Scalar> g(p, Scalar(0));
    g[0] = Scalar::q(f.qpow);
    for (auto [j, ej] : f.fac) {
      if (j == k) continue;
      g = series_mul(g, binomial_series(Scalar(1) - Scalar::q(j - k), Scalar::q(j - k), ej, p));
    }
    // principal part: coefficient of t^{-d} is g[p-d]
    std::vector<Scalar> princ(p + 1);
    for (int d = 1; d <= p; ++d) princ[d] = g[p - d];
    for (int m = p - 1; m >= 0; --m) {
      Scalar c = princ[m + 1];
      if (!c.is_zero()) out.coef[{k, m}] = c;
      // subtract c * f_m; f_m = (1-t)^m t^{-m-1} for m >= 1, 1/t - 1 for m = 0
      if (m == 0) {
        princ[1] -= c;
        continue;
      }
      Scalar bin(1);
      for (int s = 0; s <= m; ++s) {
        int d = m + 1 - s;
        princ[d] -= c * (s % 2 ? -bin : bin);
        bin = bin * Scalar(m - s) / Scalar(s + 1);
      }
    }
  }
  return out;
}

Scalar pfrac_eval(const PFrac& p, const Scalar& u) {
  Scalar v = p.lambda;
  for (auto& [km, c] : p.coef) v += c * pfrac_basis(km.first, km.second, u);
  return v;
}

Scalar HighestWeightData::h(int node, int k, int m) const {
  auto it = h_eig[node - 1].find({k, m});
  return it == h_eig[node - 1].end() ? Scalar(0) : it->second;
}

int HighestWeightData::max_pole_order() const {
  int best = 0;
  for (auto& p : poles)
    for (auto [k, o] : p) best = std::max(best, o);
  return best;
}

HighestWeightData h_eigenvalues(const LWeight& w, const CartanData& cd) {
  HighestWeightData d;
  for (int i = 1; i <= cd.n; ++i) {
    PFrac pf = partial_fractions(cd, w, i);
    d.k_eig.push_back(pf.lambda);
    Scalar denom = cd.qi(i) - cd.qi(i).inverse();
    std::map<std::pair<int, int>, Scalar> h;
    for (auto& [km, c] : pf.coef) h[km] = c / denom;
    d.h_eig.push_back(std::move(h));
    std::map<int, int> po;
    for (auto [j, e] : w.rational_form(cd, i).fac)
      if (e < 0) po[j] = -e;
    d.poles.push_back(std::move(po));
  }
  return d;
}

}  // namespace artifact
