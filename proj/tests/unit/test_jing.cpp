#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "artifact/jing.hpp"

using namespace artifact;

namespace {

JingPoly v(int n, int i, int c = 1, int e = 0) { return JingPoly::var(n, i, Laurent::monomial(c, e)); }

}  // namespace

TEST_CASE("A2 identity term") {
  CartanData a2 = cartan("A2");
  JingPoly want = (v(3, 1) - v(3, 0, 1, -2)) * (v(3, 0) - v(3, 2, 1, 1)) * (v(3, 1) - v(3, 2, 1, 1));
  CHECK(jing_term(a2, 1, 2, {0, 1}, 0) == want);
}

TEST_CASE("A2 terms for each permutation and r") {
  CartanData a2 = cartan("A2");
  const JingPoly F1 = v(3, 0), F2 = v(3, 1), G = v(3, 2);
  auto q = [](int e) { return Laurent::monomial(1, e); };
  auto sc = [](JingPoly p, const Laurent& c) { return p *= c, p; };
  const JingPoly fid = F2 - sc(F1, q(-2)), fsw = sc(F2, q(-2)) - F1;
  const JingPoly up1 = F1 - sc(G, q(1)), up2 = F2 - sc(G, q(1));
  const JingPoly lo1 = sc(F1, q(1)) - G, lo2 = sc(F2, q(1)) - G;
  CHECK(jing_term(a2, 1, 2, {0, 1}, 1) == fid * lo1 * up2);
  CHECK(jing_term(a2, 1, 2, {0, 1}, 2) == fid * lo1 * lo2);
  CHECK(jing_term(a2, 1, 2, {1, 0}, 0) == fsw * up1 * up2);
  CHECK(jing_term(a2, 1, 2, {1, 0}, 1) == fsw * up1 * lo2);
  CHECK(jing_term(a2, 1, 2, {1, 0}, 2) == fsw * lo1 * lo2);
}

TEST_CASE("the alternating sum vanishes") {
  for (const char* t : {"A2", "B2", "C2", "A3", "G2"}) {
    CartanData cd = cartan(t);
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j) {
        if (i == j || cd.C(i, j) == 0) continue;
        CAPTURE(t);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(jing_identity(cd, i, j).is_zero());
      }
  }
}

TEST_CASE("parallel and serial sums agree") {
  CartanData b2 = cartan("B2");
  CHECK(jing_identity(b2, 2, 1) == jing_identity_serial(b2, 2, 1));
  CartanData a2 = cartan("A2");
  CHECK(jing_identity(a2, 1, 2) == jing_identity_serial(a2, 1, 2));
}
