#include "artifact/ratlimit.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace artifact {

void rat_add(RatElement& x, const Word& w, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = x.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

std::string rat_str(const RatElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x) {
    mpq_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (w.empty()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << " ";
    os << word_str(w);
  }
  return os.str();
}

namespace {

RatRelation make(std::string id, std::string params) { return {std::move(id), std::move(params), {}}; }

std::string pair_params(const GenSym& x, const GenSym& y) { return x.str() + " " + y.str(); }

}  // namespace

RatRelation rat_exchange(const CartanData& cd, const GenSym& L, const GenSym& R) {
  const int sg = R.sign();
  const int sB = sg * cd.B(L.node, R.node);
  const int k = L.k, l = R.k, m = L.m, n = R.m;
  RatRelation r = make(L.kind == Kind::H ? "HE" : "EE", pair_params(L, R));
  rat_add(r.expr, {L, R}, k - l - sB);
  rat_add(r.expr, {L.with_m(m + 1), R}, 1);
  rat_add(r.expr, {L, R.with_m(n + 1)}, -1);
  rat_add(r.expr, {R, L}, -(k + sB - l));
  rat_add(r.expr, {R, L.with_m(m + 1)}, -1);
  rat_add(r.expr, {R.with_m(n + 1), L}, 1);
  return r;
}

RatRelation rat_epem(const GenSym& ep, const GenSym& em) {
  RatRelation r = make("EpEm", pair_params(ep, em));
  rat_add(r.expr, {ep, em}, 1);
  rat_add(r.expr, {em, ep}, -1);
  if (ep.node == em.node && ep.k == em.k) rat_add(r.expr, {GenSym::Hs(ep.node, ep.k, ep.m + em.m)}, -1);
  return r;
}

RatRelation rat_sum_h(const PointSet& P, int i) {
  RatRelation r = make("sum-H", "node " + std::to_string(i));
  for (int k : P.at(i)) rat_add(r.expr, {GenSym::Hs(i, k, 0)}, 1);
  rat_add(r.expr, {GenSym::Ks(i)}, -1);
  return r;
}

RatRelation rat_hh_e(const CartanData& cd, int i, const GenSym& e) {
  RatRelation r = make("HH-E", "HH" + std::to_string(i) + " " + e.str());
  rat_add(r.expr, {GenSym::Ks(i), e}, 1);
  rat_add(r.expr, {e, GenSym::Ks(i)}, -1);
  rat_add(r.expr, {e}, -e.sign() * cd.C(i, e.node));
  return r;
}

RatRelation rat_commutator(const std::string& id, const GenSym& x, const GenSym& y) {
  RatRelation r = make(id, pair_params(x, y));
  rat_add(r.expr, {x, y}, 1);
  rat_add(r.expr, {y, x}, -1);
  return r;
}

RatRelation rat_serre_instance(const CartanData& cd, const PointSet& P, int i, int j, int k,
                               const std::vector<int>& ms, int n, int sign) {
  if (i == j || cd.B(i, j) == 0) throw std::invalid_argument("rational Serre relation needs adjacent nodes");
  const int s = serre_order(cd, i, j);
  if (static_cast<int>(ms.size()) != s) throw std::invalid_argument("rational Serre relation needs s m-indices");
  if (!P.contains(j, k)) throw std::invalid_argument("exponent " + std::to_string(k) + " out of range");
  auto pts = serre_points(cd, i, j, k, sign);
  for (int p : pts)
    if (!P.contains(i, p)) throw std::invalid_argument("exponent " + std::to_string(p) + " out of range");
  const Kind kd = sign > 0 ? Kind::Eplus : Kind::Eminus;
  std::ostringstream os;
  os << (sign > 0 ? "E+" : "E-") << " i=" << i << " j=" << j << " k=" << k << " m=(";
  for (int u = 0; u < s; ++u) os << (u ? "," : "") << ms[u];
  os << ") n=" << n;
  RatRelation r = make("rat-Serre", os.str());
  for (int t = 0; t <= s; ++t) {
    Word w;
    for (int u = t; u < s; ++u) w.push_back(GenSym{kd, i, pts[u], ms[u]});
    w.push_back(GenSym{kd, j, k, n});
    for (int u = 0; u < t; ++u) w.push_back(GenSym{kd, i, pts[u], ms[u]});
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), s, t);
    rat_add(r.expr, w, t % 2 ? mpq_class(-b) : mpq_class(b));
  }
  return r;
}

std::vector<RatRelation> rat_serre_instances(const CartanData& cd, const PointSet& P, int max_index) {
  std::vector<RatRelation> out;
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      if (i == j || cd.B(i, j) == 0) continue;
      const int s = serre_order(cd, i, j);
      for (int sign : {-1, 1})
        for (int k : P.at(j)) {
          bool ok = true;
          for (int p : serre_points(cd, i, j, k, sign)) ok = ok && P.contains(i, p);
          if (!ok) continue;
          std::vector<int> ms(s, 0);
          std::function<void(int)> rec = [&](int t) {
            if (t == s) {
              for (int n = 0; n <= max_index; ++n) out.push_back(rat_serre_instance(cd, P, i, j, k, ms, n, sign));
              return;
            }
            for (int m = 0; m <= max_index; ++m) {
              ms[t] = m;
              rec(t + 1);
            }
          };
          rec(0);
        }
    }
  return out;
}

std::optional<RatRelation> rat_counterpart(const CartanData& cd, const PointSet& P, const RelationInstance& inst) {
  const auto& key = inst.key;
  if (inst.family == "K") {
    const GenSym &x = key.gens.at(0), &y = key.gens.at(1);
    if (x.kind == Kind::K && y.kind == Kind::Kinv) return std::nullopt;
    if (x.kind == Kind::Kinv && y.kind == Kind::K) return std::nullopt;
    if (x.kind == Kind::K && y.kind == Kind::K) return rat_commutator("HH-HH", x, y);
    if (x.kind == Kind::K && y.is_E()) return rat_hh_e(cd, x.node, y);
    if (x.kind == Kind::K && y.kind == Kind::H) return rat_commutator("HH-H", x, y);
    if (x.kind == Kind::H && y.kind == Kind::H) return rat_commutator("H-H", x, y);
    throw std::invalid_argument("unknown K-type relation " + inst.params);
  }
  if (inst.family == "EpEm") return rat_epem(key.gens.at(0), key.gens.at(1));
  if (inst.family == "EE" || inst.family == "EH") return rat_exchange(cd, key.gens.at(0), key.gens.at(1));
  if (inst.family == "HK") return rat_sum_h(P, key.i);
  if (inst.family == "Serre") return rat_serre_instance(cd, P, key.i, key.j, key.b, key.ms, key.n, key.sign);
  throw std::invalid_argument("unknown relation family " + inst.family);
}

std::map<int, RatElement> h_layers(const CartanData& cd, const Element& x, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  std::map<int, RatElement> out;
  if (x.is_zero()) return out;
  int lowest = INT_MAX;
  std::vector<int> val;
  for (const auto& [w, c] : x.terms()) {
    int v = h_expand_laurent(c, 1).valuation + filtration_degree(w);
    val.push_back(v);
    lowest = std::min(lowest, v);
  }
  const int top = lowest + order;  // layers t < top
  std::size_t idx = 0;
  for (const auto& [w, c] : x.terms()) {
    const int v0 = val[idx++];
    if (v0 >= top) continue;
    const HLaurent e = h_expand_laurent(c, top - v0);
    const int cv = e.valuation;
    // letters: E/H carry h^m; K_i^{+-1} = sum_t (+-r_i h)^t HH_i^t / t!
    std::function<void(std::size_t, Word&, mpq_class, int)> rec = [&](std::size_t p, Word& acc, mpq_class coef,
                                                                     int pw) {
      if (pw >= top) return;
      if (p == w.size()) {
        rat_add(out[pw], acc, coef);
        return;
      }
      const GenSym& g = w[p];
      if (!g.is_Ktype()) {
        acc.push_back(g);
        rec(p + 1, acc, coef, pw + g.m);
        acc.pop_back();
        return;
      }
      const int sc = (g.kind == Kind::K ? 1 : -1) * cd.r(g.node);
      mpq_class f = 1;
      const std::size_t base = acc.size();
      for (int t = 0; pw + t < top; ++t) {
        if (t) {
          f = f * sc / t;
          acc.push_back(GenSym::Ks(g.node));
        }
        rec(p + 1, acc, coef * f, pw + t);
      }
      acc.resize(base);
    };
    for (int t = 0; t < e.series.order(); ++t) {
      if (e.series[t] == 0) continue;
      Word acc;
      rec(0, acc, e.series[t], cv + t);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

Degeneration degeneration_check(const CartanData& cd, const PointSet& P, const RelationInstance& inst, int K) {
  if (K < 2) throw std::invalid_argument("degeneration order must be at least 2");
  Degeneration d;
  d.expected = rat_counterpart(cd, P, inst);
  std::map<int, RatElement> layers;
  int order = K;
  for (;; order *= 2) {
    layers = h_layers(cd, inst.expr, order);
    if (!layers.empty() || order >= 16) break;
  }
  d.order_used = order;
  if (layers.empty()) {
    d.identically_zero = true;
    d.ok = !d.expected.has_value();
    return d;
  }
  d.power = layers.begin()->first;
  d.leading = layers.begin()->second;
  if (!d.expected || d.expected->expr.empty()) return d;
  const auto& ex = d.expected->expr;
  auto first = ex.begin();
  auto it = d.leading.find(first->first);
  if (it == d.leading.end()) return d;
  d.factor = it->second / first->second;
  RatElement scaled;
  for (const auto& [w, c] : ex) rat_add(scaled, w, c * d.factor);
  d.ok = d.factor != 0 && scaled == d.leading;
  return d;
}

}  // namespace artifact
