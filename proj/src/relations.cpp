#include "artifact/relations.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace artifact {

Element exchange_relation(const CartanData& cd, int N, const GenSym& L, const GenSym& R) {
  const int sg = R.sign();
  Scalar Q = Scalar::q(sg * cd.B(L.node, R.node));
  Scalar a = Scalar::q(L.k), b = Scalar::q(R.k);
  const int m = L.m, n = R.m;
  Element e(N);
  e.add({L, R}, a - b * Q);
  e.add({L.with_m(m + 1), R}, a);
  e.add({L, R.with_m(n + 1)}, -b * Q);
  e.add({R, L}, -(a * Q - b));
  e.add({R, L.with_m(m + 1)}, -a * Q);
  e.add({R.with_m(n + 1), L}, b);
  return e;
}

Element epem_relation(int N, const GenSym& ep, const GenSym& em) {
  Element e(N);
  e.add({ep, em}, Scalar(1));
  e.add({em, ep}, Scalar(-1));
  if (ep.node == em.node && ep.k == em.k) e.add({GenSym::Hs(ep.node, ep.k, ep.m + em.m)}, Scalar(-1));
  return e;
}

Element hk_relation(const CartanData& cd, const PointSet& P, int N, int i) {
  Element e(N);
  for (int a : P.at(i)) e.add({GenSym::Hs(i, a, 0)}, Scalar(1));
  Scalar inv = (cd.qi(i) - cd.qi(i).inverse()).inverse();
  e.add({GenSym::Ks(i)}, -inv);
  e.add({GenSym::Kinvs(i)}, inv);
  return e;
}

Element serre_instance(const CartanData& cd, const PointSet& P, int N, int i, int j, int b,
                       const std::vector<int>& ms, int n, int sign) {
  if (i == j || cd.B(i, j) == 0) throw std::invalid_argument("Serre relation needs adjacent nodes");
  const int s = serre_order(cd, i, j);
  if (static_cast<int>(ms.size()) != s) throw std::invalid_argument("Serre relation needs s m-indices");
  if (!P.contains(j, b)) throw std::invalid_argument("Serre base point missing from P");
  auto pts = serre_points(cd, i, j, b, sign);
  for (int p : pts)
    if (!P.contains(i, p)) throw std::invalid_argument("Serre point " + std::to_string(p) + " missing from P");
  Kind kd = sign > 0 ? Kind::Eplus : Kind::Eminus;
  auto Ei = [&](int t) { return GenSym{kd, i, pts[t], ms[t]}; };
  Element e(N);
  for (int r = 0; r <= s; ++r) {
    Word w;
    for (int t = r; t < s; ++t) w.push_back(Ei(t));
    w.push_back(GenSym{kd, j, b, n});
    for (int t = 0; t < r; ++t) w.push_back(Ei(t));
    Scalar c = qbinom(s, r, cd.r(i));
    e.add(w, r % 2 ? -c : c);
  }
  return e;
}

namespace {

std::vector<GenSym> letters(const CartanData& cd, const PointSet& P, Kind kd, int maxm) {
  std::vector<GenSym> out;
  for (int i = 1; i <= cd.n; ++i)
    for (int k : P.at(i))
      for (int m = 0; m <= maxm; ++m) out.push_back(GenSym{kd, i, k, m});
  return out;
}

}  // namespace

std::vector<RelationInstance> relation_catalog(const CartanData& cd, const PointSet& P, int N,
                                               const CatalogOptions& opt) {
  const int maxm = opt.max_index < 0 ? N - 1 : opt.max_index;
  std::vector<RelationInstance> out;
  auto push = [&](std::string fam, std::string par, Element e, RelationKey key) {
    out.push_back({std::move(fam), std::move(par), std::move(e), std::move(key)});
  };
  auto gens = [](std::vector<GenSym> g) {
    RelationKey k;
    k.gens = std::move(g);
    return k;
  };
  auto Em = letters(cd, P, Kind::Eminus, maxm), Ep = letters(cd, P, Kind::Eplus, maxm),
       Hs = letters(cd, P, Kind::H, maxm);
  if (opt.k_rels) {
    for (int i = 1; i <= cd.n; ++i) {
      Element e(N);
      e.add({GenSym::Ks(i), GenSym::Kinvs(i)}, Scalar(1));
      e.add({}, Scalar(-1));
      push("K", "K" + std::to_string(i) + " Kinv" + std::to_string(i), e, gens({GenSym::Ks(i), GenSym::Kinvs(i)}));
      Element f(N);
      f.add({GenSym::Kinvs(i), GenSym::Ks(i)}, Scalar(1));
      f.add({}, Scalar(-1));
      push("K", "Kinv" + std::to_string(i) + " K" + std::to_string(i), f, gens({GenSym::Kinvs(i), GenSym::Ks(i)}));
      for (int j = i + 1; j <= cd.n; ++j) {
        Element g(N);
        g.add({GenSym::Ks(i), GenSym::Ks(j)}, Scalar(1));
        g.add({GenSym::Ks(j), GenSym::Ks(i)}, Scalar(-1));
        push("K", "K" + std::to_string(i) + " K" + std::to_string(j), g, gens({GenSym::Ks(i), GenSym::Ks(j)}));
      }
      for (const auto* fam : {&Em, &Ep})
        for (const auto& x : *fam) {
          Element h(N);
          h.add({GenSym::Ks(i), x}, Scalar(1));
          h.add({x, GenSym::Ks(i)}, -Scalar::q(x.sign() * cd.B(i, x.node)));
          push("K", "K" + std::to_string(i) + " " + x.str(), h, gens({GenSym::Ks(i), x}));
        }
      for (const auto& x : Hs) {
        Element h(N);
        h.add({GenSym::Ks(i), x}, Scalar(1));
        h.add({x, GenSym::Ks(i)}, Scalar(-1));
        push("K", "K" + std::to_string(i) + " " + x.str(), h, gens({GenSym::Ks(i), x}));
      }
    }
    for (std::size_t s = 0; s < Hs.size(); ++s)
      for (std::size_t t = s + 1; t < Hs.size(); ++t) {
        Element h(N);
        h.add({Hs[s], Hs[t]}, Scalar(1));
        h.add({Hs[t], Hs[s]}, Scalar(-1));
        push("K", Hs[s].str() + " " + Hs[t].str(), h, gens({Hs[s], Hs[t]}));
      }
  }
  if (opt.epem)
    for (const auto& x : Ep)
      for (const auto& y : Em)
        if (x.m + y.m < N) push("EpEm", x.str() + " " + y.str(), epem_relation(N, x, y), gens({x, y}));
  if (opt.ee)
    for (const auto* fam : {&Em, &Ep})
      for (const auto& x : *fam)
        for (const auto& y : *fam)
          if (x.m + y.m < N) push("EE", x.str() + " " + y.str(), exchange_relation(cd, N, x, y), gens({x, y}));
  if (opt.eh)
    for (const auto& h : Hs)
      for (const auto* fam : {&Em, &Ep})
        for (const auto& y : *fam)
          if (h.m + y.m < N) push("EH", h.str() + " " + y.str(), exchange_relation(cd, N, h, y), gens({h, y}));
  if (opt.hk)
    for (int i = 1; i <= cd.n; ++i) {
      RelationKey k;
      k.i = i;
      push("HK", "node " + std::to_string(i), hk_relation(cd, P, N, i), k);
    }
  if (opt.serre)
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j) {
        if (i == j || cd.B(i, j) == 0) continue;
        const int s = serre_order(cd, i, j);
        for (int sign : {-1, 1})
          for (int b : P.at(j)) {
            auto pts = serre_points(cd, i, j, b, sign);
            bool ok = true;
            for (int p : pts) ok = ok && P.contains(i, p);
            if (!ok) continue;
            std::vector<int> ms(s, 0);
            std::function<void(int, int)> rec = [&](int t, int used) {
              if (t == s) {
                for (int n = 0; n <= maxm && used + n < N; ++n) {
                  std::ostringstream os;
                  os << (sign > 0 ? "E+" : "E-") << " i=" << i << " j=" << j << " b=" << b << " m=(";
                  for (int u = 0; u < s; ++u) os << (u ? "," : "") << ms[u];
                  os << ") n=" << n;
                  RelationKey k;
                  k.i = i;
                  k.j = j;
                  k.b = b;
                  k.n = n;
                  k.sign = sign;
                  k.ms = ms;
                  push("Serre", os.str(), serre_instance(cd, P, N, i, j, b, ms, n, sign), k);
                }
                return;
              }
              for (int m = 0; m <= maxm && used + m < N; ++m) {
                ms[t] = m;
                rec(t + 1, used + m);
              }
            };
            rec(0, 0);
          }
      }
  return out;
}

}  // namespace artifact
