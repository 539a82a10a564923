#include "artifact/jing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace artifact {

namespace {

void check_pair(const CartanData& cd, int i, int j) {
  if (i == j || cd.B(i, j) == 0) throw std::invalid_argument("Jing identity needs adjacent nodes i != j");
}

std::vector<std::vector<int>> permutations(int s) {
  std::vector<int> p(s);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// sum_r (-1)^r binom(s,r)_{q_i} A_{pi,r}
JingPoly permutation_block(const CartanData& cd, int i, int j, const std::vector<int>& pi) {
  const int s = static_cast<int>(pi.size());
  JingPoly acc(s + 1);
  for (int r = 0; r <= s; ++r) {
    Scalar c = qbinom(s, r, cd.r(i));
    Laurent lc = c.num();
    if (r % 2) lc = -lc;
    JingPoly t = jing_term(cd, i, j, pi, r);
    t *= lc;
    acc += t;
  }
  return acc;
}

}  // namespace

JingPoly jing_term(const CartanData& cd, int i, int j, const std::vector<int>& pi, int r) {
  check_pair(cd, i, j);
  const int s = static_cast<int>(pi.size());
  std::vector<int> inv(s);
  for (int t = 0; t < s; ++t) inv[pi[t]] = t;
  const Laurent qii = Laurent::monomial(1, -cd.B(i, i)), qij = Laurent::monomial(1, -cd.B(i, j));
  auto F = [&](int n, const Laurent& c) { return JingPoly::var(s + 1, n, c); };
  const JingPoly G = JingPoly::var(s + 1, s);
  JingPoly p = JingPoly::constant(s + 1, Laurent(1));
  for (int n = 0; n < s; ++n)
    for (int m = n + 1; m < s; ++m)
      p = p * (inv[n] < inv[m] ? F(m, 1) - F(n, qii) : F(m, qii) - F(n, 1));
  // positions are 1-based in the definition: pi^{-1}(n) > r  <=>  inv[n] >= r
  for (int n = 0; n < s; ++n) {
    JingPoly Gq = G;
    Gq *= qij;
    p = p * (inv[n] >= r ? F(n, 1) - Gq : F(n, qij) - G);
  }
  return p;
}

JingPoly jing_identity_serial(const CartanData& cd, int i, int j) {
  check_pair(cd, i, j);
  const int s = serre_order(cd, i, j);
  JingPoly acc(s + 1);
  for (const auto& pi : permutations(s)) acc += permutation_block(cd, i, j, pi);
  return acc;
}

JingPoly jing_identity(const CartanData& cd, int i, int j) {
  check_pair(cd, i, j);
  const int s = serre_order(cd, i, j);
  const auto perms = permutations(s);
  const int np = static_cast<int>(perms.size());
  std::vector<JingPoly> part(np, JingPoly(s + 1));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < np; ++t) part[t] = permutation_block(cd, i, j, perms[t]);
  JingPoly acc(s + 1);
  for (const auto& p : part) acc += p;
  return acc;
}

}  // namespace artifact
