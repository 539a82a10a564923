#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artifact/repmod.hpp"

using namespace artifact;

namespace {

Scalar qs(int e) { return Scalar::q(e); }
GenSym Em(int i, int k, int m) { return GenSym::Em(i, k, m); }
Word W(const char* s) { return parse_word(s); }
Element E(int N, const char* s) { return Element::word(N, parse_word(s)); }

// Same action on every block of the module, or both leave the window somewhere.
bool same_action(const HWModule& mod, const Element& x, const Element& y) {
  for (int b = 0; b < static_cast<int>(mod.blocks().size()); ++b) {
    int dx = -1, dy = -1;
    auto mx = mod.element_action(x, b, dx), my = mod.element_action(y, b, dy);
    if (!mx || !my) continue;
    bool zx = dx < 0 || mx->is_zero(), zy = dy < 0 || my->is_zero();
    if (zx && zy) continue;
    if (zx != zy || dx != dy || !(*mx == *my)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("swaps of distinct kinds") {
  Rewriter rw(cartan("A1"), PointSet(1, {0, 2}), 5);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      CHECK(rw.swap_adjacent(GenSym::Ep(1, 0, m), Em(1, 2, n)) == Element::word(5, {Em(1, 2, n), GenSym::Ep(1, 0, m)}));
  Element r = rw.swap_adjacent(GenSym::Ep(1, 0, 1), Em(1, 0, 2));
  Element want = E(5, "E-[1,0,2] E+[1,0,1]") + E(5, "H[1,0,3]");
  CHECK(r == want);
  CHECK(rw.swap_adjacent(GenSym::Ks(1), Em(1, 2, 1)) == Element::word(5, {Em(1, 2, 1), GenSym::Ks(1)}, qs(-2)));
  CHECK(rw.swap_adjacent(GenSym::Kinvs(1), GenSym::Ep(1, 2, 1)) ==
        Element::word(5, {GenSym::Ep(1, 2, 1), GenSym::Kinvs(1)}, qs(-2)));
}

TEST_CASE("sticking pair, one exchange step") {
  // L R with b = a q^{-B}: Y_{00} drops out and X_{00} is solved for.
  struct Case { const char* type; GenSym L, R; int B; };
  for (auto c : {Case{"A1", Em(1, 0, 0), Em(1, -2, 0), 2}, Case{"A2", Em(1, 0, 0), Em(2, 1, 0), -1},
                 Case{"B2", Em(1, 0, 0), Em(2, 2, 0), -2}}) {
    CAPTURE(c.type);
    CartanData cd = cartan(c.type);
    PointSet P(cd.n, {-2, -1, 0, 1, 2});
    Rewriter rw(cd, P, 2);
    Element got = rw.solve_step(c.L, c.R);
    Scalar s = (Scalar(1) - qs(-2 * c.B)).inverse();
    Element want(2);
    want.add({c.L.with_m(1), c.R}, -s);
    want.add({c.L, c.R.with_m(1)}, s * qs(-2 * c.B));
    want.add({c.R, c.L.with_m(1)}, s * qs(-c.B));
    want.add({c.R.with_m(1), c.L}, -s * qs(-c.B));
    CHECK(got == want);
  }
}

TEST_CASE("equal letters") {
  // (1 - q^-2)^-1 (-E_1 E_0 + q^-2 E_0 E_1), and E_1 E_0 = -E_0 E_1 mod F_2
  Rewriter rw(cartan("A1"), PointSet(1, {0, 2}), 2);
  for (int k : {0, 2})
    CHECK(rw.swap_adjacent(Em(1, k, 0), Em(1, k, 0)) ==
          Element::word(2, {Em(1, k, 0), Em(1, k, 1)}, (qs(2) + Scalar(1)) / (qs(2) - Scalar(1))));
  CHECK(rw.swap_adjacent(Em(1, 2, 1), Em(1, 2, 0)) == Element::word(2, {Em(1, 2, 0), Em(1, 2, 1)}, Scalar(-1)));
}

TEST_CASE("A1 normal form examples") {
  Rewriter rw(cartan("A1"), PointSet(1, {0, 2}), 2);
  CHECK(rw.normal_form_sl2(E(2, "E-[1,0,0] E-[1,2,0]")) == E(2, "E-[1,0,0] E-[1,2,0]"));
  // E_{2,0} E_{0,0}: the sticking solve leaves (Y_01 - Y_10)/(q^2 - q^-2); its X terms are sticking again and lie in F_2.
  Element want = (E(2, "E-[1,0,0] E-[1,2,1]") - E(2, "E-[1,0,1] E-[1,2,0]")) * (qs(2) - qs(-2)).inverse();
  CHECK(rw.normal_form_sl2(E(2, "E-[1,2,0] E-[1,0,0]")) == want);
  Element r = rw.normal_form_sl2(E(2, "E-[1,2,0] E-[1,2,0] E-[1,0,0]"));
  for (const auto& [w, c] : r.terms()) CHECK(is_sl2_normal(w));
}

TEST_CASE("triangular form examples") {
  Rewriter rw(cartan("A1"), PointSet(1, {0, 2}), 2);
  CHECK(rw.triangular_form(E(2, "E+[1,0,0] E-[1,0,0]")) == E(2, "E-[1,0,0] E+[1,0,0]") + E(2, "H[1,0,0]"));
  CHECK(rw.triangular_form(E(2, "E-[1,2,0] H[1,0,0] E+[1,0,1]")) == E(2, "E-[1,2,0] H[1,0,0] E+[1,0,1]"));
  CHECK(rw.triangular_form(E(2, "K[1] Kinv[1]")) == Element::scalar(2, Scalar(1)));
  Element h = rw.triangular_form(E(2, "H[1,0,0] E-[1,2,0]"));
  for (const auto& [w, c] : h.terms()) {
    CAPTURE(word_str(w));
    CHECK((w.empty() || w.front().kind == Kind::Eminus));
    for (std::size_t t = 1; t < w.size(); ++t) CHECK(w[t].kind != Kind::Eminus);
  }
}

TEST_CASE("E E swaps never lower the filtration degree") {
  for (const char* t : {"A1", "A2"}) {
    CartanData cd = cartan(t);
    PointSet P(cd.n, {0, 1, 2, 3});
    Rewriter rw(cd, P, 3);
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j)
        for (int k : P.at(i))
          for (int l : P.at(j))
            for (int m = 0; m < 2; ++m)
              for (Kind kd : {Kind::Eminus, Kind::Eplus}) {
                GenSym a{kd, i, k, m}, b{kd, j, l, 0};
                Element r;
                try {
                  r = rw.swap_adjacent(a, b);
                } catch (const StuckPair&) {
                  continue;
                }
                for (const auto& [w, c] : r.terms()) CHECK(filtration_degree(w) >= m);
              }
  }
}

TEST_CASE("rewriting is sound on the modules") {
  const CartanData a1 = cartan("A1");
  const PointSet P(1, {0, 2});
  Rewriter rw(a1, P, 3);
  std::mt19937 rng(5);
  for (const char* hw : {"Y0^2 Y2", "Y0 Y2^2"}) {
    CAPTURE(hw);
    HWModule mod(rw, LWeight::parse(hw));
    std::vector<GenSym> letters;
    for (int k : {0, 2})
      for (int m = 0; m < 3; ++m) letters.push_back(Em(1, k, m));
    for (int trial = 0; trial < 40; ++trial) {
      Word w;
      const int len = 2 + static_cast<int>(rng() % 2);
      for (int t = 0; t < len; ++t) w.push_back(letters[rng() % letters.size()]);
      if (filtration_degree(w) >= 3) continue;
      CAPTURE(word_str(w));
      Element x = Element::word(3, w);
      CHECK(same_action(mod, x, rw.normal_form_sl2(x)));
      CHECK(same_action(mod, x, rw.triangular_form(x)));
    }
    std::vector<GenSym> mixed = letters;
    for (int k : {0, 2})
      for (int m = 0; m < 3; ++m) {
        mixed.push_back(GenSym::Ep(1, k, m));
        mixed.push_back(GenSym::Hs(1, k, m));
      }
    mixed.push_back(GenSym::Ks(1));
    mixed.push_back(GenSym::Kinvs(1));
    for (const auto& a : mixed)
      for (const auto& b : mixed) {
        if (a.is_Ktype() && b.is_Ktype()) continue;
        if (a.m + b.m >= 3) continue;
        CAPTURE(a.str() + " " + b.str());
        Element x = Element::word(3, {a, b});
        Element r;
        try {
          r = rw.swap_adjacent(a, b);
        } catch (const StuckPair&) {
          continue;
        }
        CHECK(same_action(mod, x, r));
        CHECK(same_action(mod, x, rw.triangular_form(x)));
      }
  }
}
