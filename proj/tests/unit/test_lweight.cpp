#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artifact/lweight.hpp"

using namespace artifact;

namespace {

CartanData A1 = cartan("A1");
Scalar qs(int e) { return Scalar::q(e); }
LWeight Y(const std::string& s) { return LWeight::parse(s); }

// q^p prod (1 - q^j u)^e evaluated directly.
Scalar direct(int p, std::vector<std::pair<int, int>> f, const Scalar& u) {
  Scalar x = qs(p);
  for (auto [j, e] : f) x *= (Scalar(1) - qs(j) * u).pow(e);
  return x;
}

}  // namespace

TEST_CASE("rational forms of Y-monomials") {
  RatForm y0 = Y("Y0").rational_form(A1, 1);
  CHECK(y0.qpow == 1);
  CHECK(y0.fac == std::map<int, int>{{-2, 1}, {0, -1}});
  CHECK((Y("Y[1,3]") * Y("Y[1,3]^-1")).is_one());
  RatForm w = Y("Y0 Y2^2").rational_form(A1, 1);
  CHECK(w.qpow == 3);
  CHECK(w.fac == std::map<int, int>{{-2, 1}, {0, 1}, {2, -2}});
}

TEST_CASE("simple l-roots") {
  for (int k = -3; k <= 3; ++k) {
    RatForm a = a_root_rational(A1, 1, k, 1);
    CHECK(a.qpow == 2);
    CHECK(a.fac == std::map<int, int>{{k - 2, 1}, {k + 2, -1}});
    CHECK(a_root(A1, 1, k) == Y("Y" + std::to_string(k) + " Y" + std::to_string(k + 2)));
  }
  CHECK(a_root(A1, 1, 2) == Y("Y2 Y4"));
  CartanData a2 = cartan("A2");
  RatForm x = a_root_rational(a2, 1, 0, 2);
  CHECK(x.qpow == -1);
  CHECK(x.fac == std::map<int, int>{{1, 1}, {-1, -1}});
  for (const char* t : {"A2", "A3", "B2", "C3", "G2"}) {
    CartanData cd = cartan(t);
    for (int j = 1; j <= cd.n; ++j) {
      LWeight m = a_root(cd, j, 0);
      for (int i = 1; i <= cd.n; ++i) CHECK(m.rational_form(cd, i) == a_root_rational(cd, j, 0, i));
    }
  }
}

TEST_CASE("products with inverse roots") {
  CHECK(apply_aroot_inv(A1, Y("Y0 Y2^2"), 1, 2) == Y("Y0 Y2 Y4^-1"));
  CHECK(apply_aroot_inv(A1, Y("Y0^2 Y2"), 1, 0) == Y("Y0"));
  LWeight g = Y("Y[1,0]^2 Y[2,3]^-1");
  CHECK(lweight_mul(g, g.inverse()).is_one());
}

TEST_CASE("rational form evaluation agrees with the product formula") {
  Scalar u = qs(5) + Scalar(3);
  CHECK(Y("Y0").rational_form(A1, 1).at(u) == direct(1, {{-2, 1}, {0, -1}}, u));
  CHECK(Y("Y0 Y2^2").rational_form(A1, 1).at(u) == direct(3, {{-2, 1}, {0, 1}, {2, -2}}, u));
}

TEST_CASE("partial fractions") {
  PFrac y = partial_fractions(A1, Y("Y0"), 1);
  CHECK(y.lambda == qs(1));
  CHECK(y.coef.size() == 1);
  CHECK(y.coef.at({0, 0}) == qs(1) - qs(-1));
  PFrac w = partial_fractions(A1, Y("Y0^2 Y2"), 1);
  CHECK(w.lambda == qs(3));
  CHECK(w.coef.at({0, 0}) == -(qs(1) - qs(-1)));
  CHECK(w.coef.at({2, 0}) == qs(3) + qs(1) - qs(-1) - qs(-3));
  PFrac one = partial_fractions(A1, LWeight{}, 1);
  CHECK(one.lambda == Scalar(1));
  CHECK(one.coef.empty());
}

TEST_CASE("partial fractions reproduce the rational function") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ex(-2, 3), pw(-2, 3);
  for (const char* t : {"A1", "A2", "B2"}) {
    CartanData cd = cartan(t);
    for (int trial = 0; trial < 8; ++trial) {
      LWeight w;
      for (int s = 0; s < 3; ++s) {
        int node = 1 + static_cast<int>(rng() % cd.n), k = ex(rng), e = pw(rng);
        if (e && (w.y[{node, k}] += e) == 0) w.y.erase({node, k});
      }
      for (int i = 1; i <= cd.n; ++i) {
        PFrac p = partial_fractions(cd, w, i);
        for (int e : {7, 11}) {
          Scalar u = qs(e) + Scalar(2);
          CHECK(pfrac_eval(p, u) == w.rational_form(cd, i).at(u));
        }
      }
    }
  }
}

TEST_CASE("highest weight eigenvalues") {
  HighestWeightData a = h_eigenvalues(Y("Y0^2 Y2"), A1);
  CHECK(a.k_eig[0] == qs(3));
  CHECK(a.h(1, 0, 0) == Scalar(-1));
  CHECK(a.h(1, 2, 0) == qs(2) + Scalar(2) + qs(-2));
  HighestWeightData b = h_eigenvalues(Y("Y0^3 Y2^2"), A1);
  CHECK(b.k_eig[0] == qs(5));
  CHECK(b.h(1, 0, 0) == Scalar(1));
  HighestWeightData c = h_eigenvalues(Y("Y0"), A1);
  CHECK(c.k_eig[0] == qs(1));
  CHECK(c.h(1, 0, 0) == Scalar(1));
}

TEST_CASE("sum of H_{k,0} eigenvalues is (K - K^-1)/(q - q^-1)") {
  for (const char* s : {"Y0", "Y0^2 Y2", "Y0^3 Y2^2", "Y0 Y2^2", "Y0 Y4^-1"}) {
    HighestWeightData d = h_eigenvalues(Y(s), A1);
    Scalar sum;
    for (const auto& [km, v] : d.h_eig[0])
      if (km.second == 0) sum += v;
    CHECK(sum == (d.k_eig[0] - d.k_eig[0].inverse()) / (qs(1) - qs(-1)));
  }
}

TEST_CASE("parse and print") {
  CHECK(Y("Y0^2 Y2").str(true) == "Y0^2 Y2");
  CHECK(Y("Y[1,0] Y[2,1]").str(false) == "Y[1,0] Y[2,1]");
  CHECK(Y("1").is_one());
  CHECK_THROWS(Y("Z1"));
  CHECK(Y("Y0^2 Y2").dominant());
  CHECK_FALSE(Y("Y0 Y2^-1").dominant());
}
