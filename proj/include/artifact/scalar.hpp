#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

// Laurent polynomial in q with integer coefficients: c_[t] multiplies q^(lo_ + t).
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT: constant
  static Laurent monomial(const mpz_class& c, int e);

  bool is_zero() const { return c_.empty(); }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int degree_span() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int e) const;
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  Laurent shifted(int s) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const mpz_class& s);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  mpz_class content() const;
  // Exact division by an integer dividing every coefficient.
  void divexact(const mpz_class& d);
  mpz_class eval_at_one() const;
  std::size_t hash() const;

  // Rebuild from raw coefficients; trims zeros.
  static Laurent from_coeffs(int lo, std::vector<mpz_class> c);

 private:
  int lo_ = 0;
  std::vector<mpz_class> c_;
  void trim();
};

// Exact quotient a/b of Laurent polynomials; throws if b does not divide a.
Laurent laurent_divexact(const Laurent& a, const Laurent& b);
// Primitive gcd of two polynomials (treated as ordinary polynomials after shifting).
Laurent poly_gcd(const Laurent& a, const Laurent& b);

// Element of Q(q), stored as num/den with den having constant term nonzero,
// positive leading coefficient, and no common factor with num.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Laurent& p) : num_(p), den_(1) {}  // NOLINT
  Scalar(const Laurent& n, const Laurent& d);

  static Scalar q(int e = 1) { return Scalar(Laurent::monomial(1, e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const;  // denominator constant 1

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  Scalar inverse() const;
  Scalar pow(int e) const;

  std::string str() const;
  static Scalar parse(const std::string& s);
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  Laurent num_, den_;
  void normalize();
};

Scalar scalar_div(const Scalar& x, const Scalar& y);

// q_i-number [n] with q_i = q^d.
Scalar qnum(int n, int d = 1);
Scalar qfactorial(int n, int d = 1);
Scalar qbinom(int n, int m, int d = 1);

std::string laurent_str(const Laurent& p);

// Truncated power series in h with rational coefficients, modulo h^K.
class HSeries {
 public:
  HSeries() = default;
  explicit HSeries(int order) : c_(order) {}
  HSeries(int order, const mpq_class& constant);
  static HSeries exp_h(int order, const mpq_class& scale);  // e^{scale*h}

  int order() const { return static_cast<int>(c_.size()); }
  const mpq_class& operator[](int t) const { return c_[t]; }
  mpq_class& operator[](int t) { return c_[t]; }
  bool is_zero() const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  HSeries& operator*=(const mpq_class& s);
  friend bool operator==(const HSeries& a, const HSeries& b) { return a.c_ == b.c_; }
  HSeries inverse() const;  // requires c_0 != 0
  std::string str() const;

 private:
  std::vector<mpq_class> c_;
};

// Taylor coefficients of x(e^h) through h^{K-1}; throws on a pole at q = 1.
HSeries h_expand(const Scalar& x, int order);

// x(e^h) = h^v * (series of the given order with nonzero constant term, unless x = 0).
struct HLaurent {
  int valuation = 0;
  HSeries series;
};
HLaurent h_expand_laurent(const Scalar& x, int order);

}  // namespace artifact
