#include "artifact/rewrite.hpp"

#include <algorithm>

namespace artifact {

namespace {

int rank_of(const GenSym& g) {
  switch (g.kind) {
    case Kind::Eminus: return 0;
    case Kind::Eplus: return 2;
    default: return 1;
  }
}

Element two(int N, const GenSym& x, const GenSym& y, const Scalar& c) {
  return Element::word(N, Word{x, y}, c);
}

// prefix * e * suffix, truncated
void splice(Element& out, const Word& prefix, const Element& e, const Word& suffix, const Scalar& c) {
  for (auto& [w, x] : e.terms()) {
    Word v = prefix;
    v.insert(v.end(), w.begin(), w.end());
    v.insert(v.end(), suffix.begin(), suffix.end());
    out.add(v, c * x);
  }
}

}  // namespace

Rewriter::Rewriter(CartanData cd, PointSet P, int N) : cd_(std::move(cd)), P_(std::move(P)), N_(N) {
  if (N_ < 1) throw std::invalid_argument("truncation level must be positive");
  if (P_.rank() != cd_.n) throw std::invalid_argument("point set rank mismatch");
}

Element Rewriter::hk_substitute(int i, int k) const {
  Element e(N_);
  Scalar inv = (cd_.qi(i) - cd_.qi(i).inverse()).inverse();
  e.add({GenSym::Ks(i)}, inv);
  e.add({GenSym::Kinvs(i)}, -inv);
  bool found = false;
  for (int c : P_.at(i)) {
    if (c == k) found = true;
    else e.add({GenSym::Hs(i, c, 0)}, Scalar(-1));
  }
  if (!found) throw std::invalid_argument("point not in P");
  return e;
}

Element Rewriter::same_family(const GenSym& x, const GenSym& y) const {
  const int N = N_;
  if (x.m + y.m >= N) return Element(N);
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_same_.find(key);
    if (it != cache_same_.end()) return it->second;
  }
  const int sg = x.sign();
  const int m = x.m, n = y.m;
  Scalar Q = Scalar::q(sg * cd_.B(x.node, x.node));
  Scalar a = Scalar::q(x.k);
  auto X = [&](int mm, int nn) { return two(N, x.with_m(mm), x.with_m(nn), Scalar(1)); };
  auto rec = [&](int mm, int nn) {
    if (mm + nn >= N) return Element(N);
    return same_family(x.with_m(mm), x.with_m(nn));
  };
  bool ordered = sg < 0 ? m < n : m > n;
  Element r(N);
  if (ordered) {
    r = X(m, n);
  } else if (m == n) {
    Scalar f = (Scalar(1) - Q).inverse();
    r += rec(m + 1, m) * (-f);
    r += rec(m, m + 1) * (Q * f);
  } else {
    Scalar alpha = a * (Scalar(1) - Q), beta = a * (Q - Scalar(1));
    Scalar f = alpha.inverse();
    r += rec(n, m) * (beta * f);
    r += rec(n, m + 1) * (a * Q * f);
    r += rec(n + 1, m) * (-a * f);
    r += rec(m + 1, n) * (-a * f);
    r += rec(m, n + 1) * (a * Q * f);
  }
  std::lock_guard<std::mutex> lk(mu_);
  cache_same_.emplace(key, r);
  return r;
}

Element Rewriter::move_right_left(const GenSym& L, const GenSym& R) const {
  const int N = N_;
  if (L.m + R.m >= N) return Element(N);
  if (L.is_E() && L.kind == R.kind && L.node == R.node && L.k == R.k) return same_family(L, R);
  auto key = std::make_pair(L, R);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_rl_.find(key);
    if (it != cache_rl_.end()) return it->second;
  }
  const int sg = R.sign(), i = L.node, j = R.node;
  Scalar Q = Scalar::q(sg * cd_.B(i, j)), Qi = Q.inverse();
  Scalar a = Scalar::q(L.k), b = Scalar::q(R.k);
  Scalar alpha = a - b * Q, beta = a * Q - b;
  const int m = L.m, n = R.m;
  Element r(N);
  if (!alpha.is_zero()) {
    Scalar f = alpha.inverse();
    r.add({R, L}, beta * f);
    r.add({R, L.with_m(m + 1)}, a * Q * f);
    r.add({R.with_m(n + 1), L}, -b * f);
    r += move_right_left(L.with_m(m + 1), R) * (-a * f);
    r += move_right_left(L, R.with_m(n + 1)) * (b * Q * f);
  } else if (L.kind != Kind::H) {
    throw StuckPair("no relation moves " + R.str() + " left of " + L.str());
  } else if (m > 0) {
    r += move_right_left(L.with_m(m - 1), R.with_m(n + 1));
    r.add({R, L.with_m(m - 1)}, Q - Qi);
    r.add({R, L}, Q);
    r.add({R.with_m(n + 1), L.with_m(m - 1)}, -Qi);
  } else {
    Element hk = hk_substitute(i, L.k);
    for (auto& [w, c] : hk.terms()) {
      const GenSym& g = w[0];
      if (g.kind == Kind::K) r.add({R, g}, c * k_factor(i, R));
      else if (g.kind == Kind::Kinv) r.add({R, g}, c * k_factor(i, R).inverse());
      else r += move_right_left(g, R) * c;
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  cache_rl_.emplace(key, r);
  return r;
}

Element Rewriter::move_left_right(const GenSym& R, const GenSym& L) const {
  const int N = N_;
  if (L.m + R.m >= N) return Element(N);
  if (L.is_E() && L.kind == R.kind && L.node == R.node && L.k == R.k) return same_family(R, L);
  auto key = std::make_pair(R, L);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_lr_.find(key);
    if (it != cache_lr_.end()) return it->second;
  }
  const int sg = R.sign(), i = L.node, j = R.node;
  Scalar Q = Scalar::q(sg * cd_.B(i, j));
  Scalar a = Scalar::q(L.k), b = Scalar::q(R.k);
  Scalar alpha = a - b * Q, beta = a * Q - b;
  const int m = L.m, n = R.m;
  Element r(N);
  if (!beta.is_zero()) {
    Scalar f = beta.inverse();
    r.add({L, R}, alpha * f);
    r.add({L.with_m(m + 1), R}, a * f);
    r.add({L, R.with_m(n + 1)}, -b * Q * f);
    r += move_left_right(R, L.with_m(m + 1)) * (-a * Q * f);
    r += move_left_right(R.with_m(n + 1), L) * (b * f);
  } else if (L.kind != Kind::H) {
    throw StuckPair("no relation moves " + L.str() + " left of " + R.str());
  } else if (m > 0) {
    Scalar f = (a * Q).inverse();
    r.add({L.with_m(m - 1), R}, alpha * f);
    r.add({L, R}, a * f);
    r.add({L.with_m(m - 1), R.with_m(n + 1)}, -b * Q * f);
    r += move_left_right(R.with_m(n + 1), L.with_m(m - 1)) * (b * f);
  } else {
    Element hk = hk_substitute(i, L.k);
    for (auto& [w, c] : hk.terms()) {
      const GenSym& g = w[0];
      // R K_i = q^{-sign B} K_i R
      if (g.kind == Kind::K) r.add({g, R}, c * k_factor(i, R).inverse());
      else if (g.kind == Kind::Kinv) r.add({g, R}, c * k_factor(i, R));
      else r += move_left_right(R, g) * c;
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  cache_lr_.emplace(key, r);
  return r;
}

Element Rewriter::solve_step(const GenSym& L, const GenSym& R) const {
  const int sg = R.sign(), i = L.node, j = R.node;
  Scalar Q = Scalar::q(sg * cd_.B(i, j));
  Scalar a = Scalar::q(L.k), b = Scalar::q(R.k);
  Scalar alpha = a - b * Q, beta = a * Q - b;
  if (alpha.is_zero()) throw StuckPair("relation does not solve for " + L.str() + " " + R.str());
  const int m = L.m, n = R.m;
  Scalar f = alpha.inverse();
  Element r(N_);
  r.add({R, L}, beta * f);
  r.add({R, L.with_m(m + 1)}, a * Q * f);
  r.add({R.with_m(n + 1), L}, -b * f);
  r.add({L.with_m(m + 1), R}, -a * f);
  r.add({L, R.with_m(n + 1)}, b * Q * f);
  return r;
}

Element Rewriter::swap_adjacent(const GenSym& g1, const GenSym& g2) const {
  const int N = N_;
  if (g1.is_Ktype() && g2.is_Ktype())
    throw std::invalid_argument("K swaps are exact; no rewrite needed");
  if (g1.is_Ktype() || g2.is_Ktype()) {
    const GenSym& kk = g1.is_Ktype() ? g1 : g2;
    const GenSym& o = g1.is_Ktype() ? g2 : g1;
    Scalar c(1);
    if (o.is_E()) {
      // K_i E = f E K_i, K_i^{-1} E = f^{-1} E K_i^{-1}
      Scalar f = k_factor(kk.node, o);
      if (kk.kind == Kind::Kinv) f = f.inverse();
      c = g1.is_Ktype() ? f : f.inverse();
    }
    return two(N, g2, g1, c);
  }
  if (g1.kind == Kind::H && g2.kind == Kind::H) return two(N, g2, g1, Scalar(1));
  if (g1.is_E() && g2.is_E() && g1.kind != g2.kind) {
    Element r = two(N, g2, g1, Scalar(1));
    if (g1.node == g2.node && g1.k == g2.k)
      r.add({GenSym::Hs(g1.node, g1.k, g1.m + g2.m)}, Scalar(g1.kind == Kind::Eplus ? 1 : -1));
    return r;
  }
  if (g1.kind == Kind::H) return move_right_left(g1, g2);
  if (g2.kind == Kind::H) return move_left_right(g1, g2);
  return move_right_left(g1, g2);
}

Element Rewriter::rewrite_pair_triangular(const GenSym& a, const GenSym& b) const {
  // a has larger rank than b
  if (a.kind == Kind::Eplus && b.kind == Kind::Eminus) return swap_adjacent(a, b);
  if (a.is_Ktype() || b.is_Ktype()) return swap_adjacent(a, b);
  if (a.kind == Kind::H) return move_right_left(a, b);  // H E^-
  return move_left_right(a, b);                          // E^+ H
}

Element Rewriter::canonical_middle(const Word& mid) const {
  // sort, cancel K K^{-1}, eliminate H_{i,last point,0} through the sum rule
  std::vector<GenSym> hs;
  std::map<int, int> kpow;
  for (const auto& g : mid) {
    if (g.kind == Kind::K) ++kpow[g.node];
    else if (g.kind == Kind::Kinv) --kpow[g.node];
    else hs.push_back(g);
  }
  auto elim = std::find_if(hs.begin(), hs.end(), [&](const GenSym& g) {
    return g.m == 0 && !P_.at(g.node).empty() && g.k == P_.at(g.node).back() && P_.at(g.node).size() > 0;
  });
  Element out(N_);
  if (elim != hs.end()) {
    GenSym g = *elim;
    hs.erase(elim);
    Word rest = hs;
    for (auto [i, p] : kpow)
      for (int t = 0; t < (p > 0 ? p : -p); ++t) rest.push_back(p > 0 ? GenSym::Ks(i) : GenSym::Kinvs(i));
    Element sub = hk_substitute(g.node, g.k);
    for (auto& [w, c] : sub.terms()) {
      Word v = rest;
      v.insert(v.end(), w.begin(), w.end());
      out += canonical_middle(v) * c;
    }
    return out;
  }
  std::sort(hs.begin(), hs.end());
  Word w = hs;
  for (auto [i, p] : kpow)
    for (int t = 0; t < (p > 0 ? p : -p); ++t) w.push_back(p > 0 ? GenSym::Ks(i) : GenSym::Kinvs(i));
  out.add(w, Scalar(1));
  return out;
}

Element Rewriter::triangular_form(const Element& x) const {
  if (x.trunc() != N_) throw std::invalid_argument("truncation level mismatch");
  Element done(N_);
  std::map<Word, Scalar> todo(x.terms().begin(), x.terms().end());
  while (!todo.empty()) {
    auto it = todo.begin();
    Word w = it->first;
    Scalar c = it->second;
    todo.erase(it);
    if (c.is_zero()) continue;
    std::size_t t = 0;
    while (t + 1 < w.size() && rank_of(w[t]) <= rank_of(w[t + 1])) ++t;
    if (t + 1 >= w.size()) {
      std::size_t lo = 0, hi = w.size();
      while (lo < w.size() && rank_of(w[lo]) == 0) ++lo;
      while (hi > lo && rank_of(w[hi - 1]) == 2) --hi;
      Word prefix(w.begin(), w.begin() + lo), mid(w.begin() + lo, w.begin() + hi),
          suffix(w.begin() + hi, w.end());
      Element canon = canonical_middle(mid);
      splice(done, prefix, canon, suffix, c);
      continue;
    }
    Element rep = rewrite_pair_triangular(w[t], w[t + 1]);
    Word prefix(w.begin(), w.begin() + t), suffix(w.begin() + t + 2, w.end());
    Element piece(N_);
    splice(piece, prefix, rep, suffix, c);
    for (auto& [v, y] : piece.terms()) {
      auto [jt, fresh] = todo.emplace(v, y);
      if (!fresh) {
        jt->second += y;
        if (jt->second.is_zero()) todo.erase(jt);
      }
    }
  }
  return done;
}

bool Rewriter::sl2_bad(const GenSym& a, const GenSym& b) const {
  auto ka = std::make_pair(a.k, a.m), kb = std::make_pair(b.k, b.m);
  return a.kind == Kind::Eminus ? !(ka < kb) : !(ka > kb);
}

Element Rewriter::rewrite_pair_sl2(const GenSym& a, const GenSym& b) const {
  if (a.k == b.k) return same_family(a, b);
  return move_right_left(a, b);
}

Element Rewriter::normal_form_sl2(const Element& x) const {
  if (cd_.n != 1) throw std::invalid_argument("normal_form_sl2 requires type A1");
  if (x.trunc() != N_) throw std::invalid_argument("truncation level mismatch");
  Element done(N_);
  std::map<Word, Scalar> todo(x.terms().begin(), x.terms().end());
  while (!todo.empty()) {
    auto it = todo.begin();
    Word w = it->first;
    Scalar c = it->second;
    todo.erase(it);
    if (c.is_zero()) continue;
    for (const auto& g : w)
      if (!g.is_E() || g.kind != w[0].kind) throw std::invalid_argument("normal_form_sl2 expects pure E-words");
    std::size_t t = 0;
    while (t + 1 < w.size() && !sl2_bad(w[t], w[t + 1])) ++t;
    if (t + 1 >= w.size()) {
      done.add(w, c);
      continue;
    }
    Element rep = rewrite_pair_sl2(w[t], w[t + 1]);
    Word prefix(w.begin(), w.begin() + t), suffix(w.begin() + t + 2, w.end());
    Element piece(N_);
    splice(piece, prefix, rep, suffix, c);
    for (auto& [v, y] : piece.terms()) {
      auto [jt, fresh] = todo.emplace(v, y);
      if (!fresh) {
        jt->second += y;
        if (jt->second.is_zero()) todo.erase(jt);
      }
    }
  }
  return done;
}

}  // namespace artifact
