#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artifact/cartan.hpp"
#include "artifact/scalar.hpp"

namespace artifact {

// Finite point sets P_i on one q-orbit, stored as exponents (node i -> sorted exponents).
struct PointSet {
  std::vector<std::vector<int>> pts;

  PointSet() = default;
  PointSet(int rank, std::vector<int> common);
  explicit PointSet(std::vector<std::vector<int>> per_node);
  const std::vector<int>& at(int i) const { return pts[i - 1]; }
  bool contains(int i, int k) const;
  int rank() const { return static_cast<int>(pts.size()); }
};

// gamma(u) on one node: q^qpow * prod_j (1 - q^j u)^{fac[j]}, base a = 1.
struct RatForm {
  int qpow = 0;
  std::map<int, int> fac;

  RatForm& operator*=(const RatForm& o);
  RatForm inverse() const;
  bool is_one() const { return qpow == 0 && fac.empty(); }
  friend bool operator==(const RatForm&, const RatForm&) = default;
  Scalar at(const Scalar& u) const;
  std::string str() const;
};

// Laurent monomial in the Y_{i,q^k}.
struct LWeight {
  std::map<std::pair<int, int>, int> y;  // (node, exponent) -> power

  LWeight& operator*=(const LWeight& o);
  friend LWeight operator*(LWeight a, const LWeight& b) { return a *= b; }
  LWeight inverse() const;
  bool is_one() const { return y.empty(); }
  bool dominant() const;
  friend bool operator==(const LWeight&, const LWeight&) = default;
  friend auto operator<=>(const LWeight&, const LWeight&) = default;

  RatForm rational_form(const CartanData& cd, int node) const;
  std::string str(bool rank1) const;
  static LWeight parse(const std::string& s);
};

LWeight y_monomial(const std::vector<std::tuple<int, int, int>>& spec);
RatForm y_rational(const CartanData& cd, int i, int k, int node);
// (A_{j,q^k})_i as a rational form, straight from the defining formula.
RatForm a_root_rational(const CartanData& cd, int j, int k, int node);
// The same root written as a Y-monomial; throws if no such monomial exists.
LWeight a_root(const CartanData& cd, int j, int k);
// Y-monomial with the given rational forms on every node, if one exists.
bool lweight_from_rational(const CartanData& cd, const std::vector<RatForm>& forms, LWeight& out);

LWeight lweight_mul(const LWeight& x, const LWeight& y);
LWeight apply_aroot_inv(const CartanData& cd, const LWeight& x, int j, int k);

struct PFrac {
  Scalar lambda;
  std::map<std::pair<int, int>, Scalar> coef;  // (k, m) -> lambda_{k,m}
};

// f_{k,m}(u) = x^m/(1-x)^{m+1} for m >= 1 and x/(1-x) for m = 0, x = q^k u.
Scalar pfrac_basis(int k, int m, const Scalar& u);
PFrac partial_fractions(const CartanData& cd, const LWeight& w, int node);
Scalar pfrac_eval(const PFrac& p, const Scalar& u);

struct HighestWeightData {
  std::vector<Scalar> k_eig;                              // per node, index i-1
  std::vector<std::map<std::pair<int, int>, Scalar>> h_eig;  // per node: (k,m) -> eigenvalue
  std::vector<std::map<int, int>> poles;                  // per node: exponent -> order
  Scalar h(int node, int k, int m) const;
  int max_pole_order() const;
};

HighestWeightData h_eigenvalues(const LWeight& w, const CartanData& cd);

}  // namespace artifact
