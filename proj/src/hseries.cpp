#include "artifact/scalar.hpp"

#include <sstream>

namespace artifact {

HSeries::HSeries(int order, const mpq_class& constant) : c_(order) {
  if (order > 0) c_[0] = constant;
}

HSeries HSeries::exp_h(int order, const mpq_class& scale) {
  HSeries s(order);
  mpq_class term = 1;
  for (int t = 0; t < order; ++t) {
    s.c_[t] = term;
    term *= scale;
    term /= t + 1;
  }
  return s;
}

bool HSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("HSeries order mismatch");
  for (int t = 0; t < order(); ++t) c_[t] += o.c_[t];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("HSeries order mismatch");
  for (int t = 0; t < order(); ++t) c_[t] -= o.c_[t];
  return *this;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("HSeries order mismatch");
  HSeries r(a.order());
  for (int s = 0; s < a.order(); ++s) {
    if (a.c_[s] == 0) continue;
    for (int t = 0; s + t < a.order(); ++t) r.c_[s + t] += a.c_[s] * b.c_[t];
  }
  return r;
}

HSeries& HSeries::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

HSeries HSeries::inverse() const {
  if (order() == 0) return *this;
  if (c_[0] == 0) throw std::domain_error("HSeries inverse of non-unit");
  HSeries r(order());
  r.c_[0] = 1 / c_[0];
  for (int t = 1; t < order(); ++t) {
    mpq_class acc = 0;
    for (int s = 1; s <= t; ++s) acc += c_[s] * r.c_[t - s];
    r.c_[t] = -acc / c_[0];
  }
  return r;
}

std::string HSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < order(); ++t) {
    if (c_[t] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[t].get_str() << ")";
    if (t > 0) os << "*h^" << t;
  }
  return first ? "0" : os.str();
}

namespace {

// p(e^h) mod h^K.
HSeries laurent_at_exp(const Laurent& p, int order) {
  HSeries s(order);
  if (p.is_zero()) return s;
  mpz_class fact = 1;
  for (int t = 0; t < order; ++t) {
    if (t > 0) fact *= t;
    mpz_class acc = 0;
    for (int e = p.low(); e <= p.high(); ++e) {
      mpz_class c = p.coeff(e);
      if (c == 0) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(e).get_mpz_t(), static_cast<unsigned long>(t));
      if (t == 0) pw = 1;
      acc += c * pw;
    }
    s[t] = mpq_class(acc, fact);
    s[t].canonicalize();
  }
  return s;
}

int strip_root_at_one(Laurent& p) {
  static const Laurent q_minus_1 = Laurent::monomial(1, 1) - Laurent(1);
  int v = 0;
  while (!p.is_zero() && p.eval_at_one() == 0) {
    p = laurent_divexact(p, q_minus_1);
    ++v;
  }
  return v;
}

}  // namespace

HSeries h_expand(const Scalar& x, int order) {
  if (x.den().eval_at_one() == 0) throw std::domain_error("h_expand: pole at q = 1");
  return laurent_at_exp(x.num(), order) * laurent_at_exp(x.den(), order).inverse();
}

HLaurent h_expand_laurent(const Scalar& x, int order) {
  HLaurent out;
  if (x.is_zero()) {
    out.series = HSeries(order);
    return out;
  }
  Laurent n = x.num(), d = x.den();
  int v = strip_root_at_one(n) - strip_root_at_one(d);
  HSeries y = laurent_at_exp(n, order) * laurent_at_exp(d, order).inverse();
  // (q - 1) = h * g(h) with g = (e^h - 1)/h.
  HSeries g(order);
  mpz_class fact = 1;
  for (int t = 0; t < order; ++t) {
    fact *= t + 1;
    g[t] = mpq_class(1, fact);
    g[t].canonicalize();
  }
  if (v < 0) g = g.inverse();
  for (int t = 0; t < (v < 0 ? -v : v); ++t) y = y * g;
  out.valuation = v;
  out.series = y;
  return out;
}

}  // namespace artifact
