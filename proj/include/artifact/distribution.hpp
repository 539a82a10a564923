#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artifact/algebra.hpp"
#include "artifact/mpoly.hpp"

namespace artifact {

// D_{k,m}(z) = (a^m/m!) d_a^m delta(a/z) at a = q^k; as a series sum_r binom(r,m) (a/z)^r.
// A key holds one (k, m) per formal variable; k == kNoVar means the term does not depend on it.
constexpr int kNoVar = INT_MIN;
using DeltaKey = std::vector<std::pair<int, int>>;

class DeltaDist {
 public:
  DeltaDist(int nvars, int N) : n_(nvars), N_(N) {}
  static DeltaDist constant(int nvars, const Element& c);

  int nvars() const { return n_; }
  int trunc() const { return N_; }
  const std::map<DeltaKey, Element>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const DeltaKey& key, const Element& c);
  DeltaDist& operator+=(const DeltaDist& o);
  DeltaDist& operator-=(const DeltaDist& o);
  DeltaDist& operator*=(const Scalar& c);
  friend DeltaDist operator+(DeltaDist a, const DeltaDist& b) { return a += b; }
  friend DeltaDist operator-(DeltaDist a, const DeltaDist& b) { return a -= b; }
  friend DeltaDist operator*(DeltaDist a, const Scalar& c) { return a *= c; }
  friend DeltaDist operator*(const Scalar& c, DeltaDist a) { return a *= c; }
  // Product of distributions in disjoint variables; coefficients multiply in order.
  friend DeltaDist operator*(const DeltaDist& a, const DeltaDist& b);
  friend bool operator==(const DeltaDist& a, const DeltaDist& b) { return a.N_ == b.N_ && a.t_ == b.t_; }

  std::string key_str(const DeltaKey& key, const std::vector<std::string>& names) const;

 private:
  int n_, N_;
  std::map<DeltaKey, Element> t_;
};

// (sum_t c[t] z_v^t) * d, using z D_{k,m}(z) = a (D_{k,m}(z) + D_{k,m-1}(z)).
DeltaDist mul_by_poly(const DeltaDist& d, int v, const std::vector<Scalar>& c);
// delta(u/v) * d for d independent of v: D_{k,M}(u) -> sum_{m+n=M} D_{k,m}(u) D_{k,n}(v).
DeltaDist delta_product(const DeltaDist& d, int u, int v);
// Coefficient of z_v^{-r} of a distribution in the single variable v.
Element mode_coefficient(const DeltaDist& d, int v, int r);

enum class Series { Xplus, Xminus, Phi, K, Kinv };
// theta image of x^+_i(z), x^-_i(z), Phi_i(1/z) or k_i^{+-1}, placed in variable var; m-sums stop at N-1.
DeltaDist theta_image(const CartanData& cd, const PointSet& P, int N, Series s, int node, int nvars,
                      int var);

// ---------------------------------------------------------------- relation verification

enum class UqlgId { PhiZero, PhiK, XpXm, KX, PhiX, XX, Serre };

struct UqlgRelation {
  UqlgId id = UqlgId::PhiZero;
  int i = 1, j = 1, sign = 1;
  std::string name() const;
  std::string params() const;
};

// Every (relation, node pair, sign) of the Phi-presentation for this Cartan type.
std::vector<UqlgRelation> uqlg_catalog(const CartanData& cd);

struct ResidualTerm {
  std::string delta;  // the delta-basis term whose coefficient failed
  Word word;
  Scalar coeff;
};

struct VerifyResult {
  UqlgRelation rel;
  int trunc = 0;
  bool ok = true;
  int coefficients = 0;  // delta-basis coefficients checked
  std::vector<ResidualTerm> residual;
};

// Substitutes theta images, matches delta-basis coefficients and reduces each with triangular_form.
// A nonzero residual is accepted only if it, or the unreduced coefficient, is free of K and lies in the span of the exchange,
// H-H, E+E- (distinct letters) and cyclic Serre relations framed by words of the same letters, mod F_N.
VerifyResult verify_relation(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N);
VerifyResult verify_relation_serial(const UqlgRelation& rel, const CartanData& cd, const PointSet& P, int N);

// ---------------------------------------------------------------- determinant identities

using ZPoly = MPoly<mpz_class>;

struct DetX {
  ZPoly computed, closed;
  bool equal() const { return computed == closed; }
};

// det[X(a_1) .. X(a_p)], X(a)_{n,m} = a^n binom(n+m-2, m-1), n = 1..Mp, m = 1..M.
DetX det_X(int M, int npoints);
DetX det_X_serial(int M, int npoints);
// det(binom(n+m+k-2, m-1))_{n,m=1..M}.
mpz_class det_binom(int M, int k);

}  // namespace artifact
