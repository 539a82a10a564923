#include "artifact/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>

namespace artifact {

namespace {

using Coeffs = std::vector<mpz_class>;

void trim_dense(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// a mod b by pseudo-division; b must be nonzero.
Coeffs prem(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t t = 0; t <= db; ++t) a[t + shift] -= la * b[t];
    trim_dense(a);
  }
  return a;
}

mpz_class dense_content(const Coeffs& c) {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Coeffs& c) {
  if (c.empty()) return;
  mpz_class g = dense_content(c);
  if (c.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) c_.emplace_back(c);
}

Laurent Laurent::monomial(const mpz_class& c, int e) {
  Laurent p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

Laurent Laurent::from_coeffs(int lo, std::vector<mpz_class> c) {
  Laurent p;
  p.lo_ = lo;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void Laurent::trim() {
  trim_dense(c_);
  std::size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
    lo_ += static_cast<int>(z);
  }
  if (c_.empty()) lo_ = 0;
}

mpz_class Laurent::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > high()) return 0;
  return c_[e - lo_];
}

Laurent Laurent::shifted(int s) const {
  Laurent p = *this;
  if (!p.c_.empty()) p.lo_ += s;
  return p;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high(), o.high());
  if (lo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), mpz_class(0));
  lo_ = lo;
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[o.lo_ - lo_ + t] += o.c_[t];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  Laurent p;
  p.lo_ = a.lo_ + b.lo_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t s = 0; s < a.c_.size(); ++s) {
    if (a.c_[s] == 0) continue;
    for (std::size_t t = 0; t < b.c_.size(); ++t)
      mpz_addmul(p.c_[s + t].get_mpz_t(), a.c_[s].get_mpz_t(), b.c_[t].get_mpz_t());
  }
  p.trim();
  return p;
}

Laurent& Laurent::operator*=(const mpz_class& s) {
  if (s == 0) return *this = Laurent();
  for (auto& x : c_) x *= s;
  return *this;
}

mpz_class Laurent::content() const { return dense_content(c_); }

void Laurent::divexact(const mpz_class& d) {
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

mpz_class Laurent::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

std::size_t Laurent::hash() const {
  std::size_t h = std::hash<int>()(lo_);
  for (const auto& x : c_) h = h * 31 + static_cast<std::size_t>(mpz_get_si(x.get_mpz_t()));
  return h;
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  Coeffs r = a.coeffs();
  const Coeffs& d = b.coeffs();
  if (r.size() < d.size()) throw std::domain_error("inexact polynomial division");
  Coeffs quo(r.size() - d.size() + 1);
  for (std::size_t t = quo.size(); t-- > 0;) {
    mpz_class& top = r[t + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    for (std::size_t s = 0; s < d.size(); ++s) r[t + s] -= f * d[s];
    quo[t] = f;
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return Laurent::from_coeffs(a.low() - b.low(), std::move(quo));
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  Coeffs x = a.coeffs(), y = b.coeffs();
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Coeffs r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return Laurent::from_coeffs(0, std::move(x));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

bool Scalar::is_laurent() const { return den_.low() == 0 && den_.degree_span() == 0 && den_.lead() == 1; }

bool Scalar::is_one() const { return is_laurent() && num_ == Laurent(1); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  int s = den_.low();
  den_ = den_.shifted(-s);
  num_ = num_.shifted(-s);
  if (den_.degree_span() > 0) {
    Laurent g = poly_gcd(num_, den_);
    if (g.degree_span() > 0) {
      num_ = laurent_divexact(num_, g);
      den_ = laurent_divexact(den_, g);
    }
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_.divexact(c);
    den_.divexact(c);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree_span() > 0 || !(den_ == Laurent(1))) normalize();
    else if (num_.is_zero()) den_ = Laurent(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  bool plain = is_laurent() && o.is_laurent();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (!plain) normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar scalar_div(const Scalar& x, const Scalar& y) { return x / y; }

std::string laurent_str(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    mpz_class c = p.coeff(e);
    if (c == 0) continue;
    bool neg = c < 0;
    mpz_class a = neg ? mpz_class(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string Scalar::str() const {
  if (is_laurent()) return laurent_str(num_);
  auto wrap = [](const Laurent& p) {
    std::string s = laurent_str(p);
    bool atom = s.find_first_of(" *") == std::string::npos && s[0] != '-';
    return atom ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

struct ScalarParser {
  const std::string& s;
  std::size_t p = 0;

  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("scalar parse: ") + what + " at " + std::to_string(p) +
                                " in \"" + s + "\"");
  }
  long integer() {
    ws();
    bool neg = false;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) neg = s[p++] == '-';
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) fail("expected integer");
    long v = std::stol(s.substr(start, p - start));
    return neg ? -v : v;
  }
  Scalar expr() {
    ws();
    Scalar acc;
    if (eat('-')) acc = -term();
    else {
      eat('+');
      acc = term();
    }
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  bool starts_primary() {
    ws();
    return p < s.size() && (s[p] == '(' || s[p] == 'q' || std::isdigit(static_cast<unsigned char>(s[p])));
  }
  Scalar term() {
    Scalar acc = factor();
    for (;;) {
      if (eat('*')) acc *= factor();
      else if (eat('/')) acc /= factor();
      else if (starts_primary()) acc *= factor();
      else return acc;
    }
  }
  Scalar factor() {
    Scalar base = primary();
    if (eat('^')) base = base.pow(static_cast<int>(integer()));
    return base;
  }
  Scalar primary() {
    ws();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (p < s.size() && s[p] == 'q') {
      ++p;
      return Scalar::q(1);
    }
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      std::size_t start = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      return Scalar(Laurent::monomial(mpz_class(s.substr(start, p - start)), 0));
    }
    fail("unexpected character");
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& s) {
  ScalarParser ps{s};
  Scalar v = ps.expr();
  ps.ws();
  if (ps.p != s.size()) ps.fail("trailing input");
  return v;
}

// ---------------------------------------------------------------- q-numbers

Scalar qnum(int n, int d) {
  if (n < 0) return -qnum(-n, d);
  Laurent p;
  for (int t = 0; t < n; ++t) p += Laurent::monomial(1, d * (n - 1 - 2 * t));
  return Scalar(p);
}

Scalar qfactorial(int n, int d) {
  Scalar r(1);
  for (int t = 2; t <= n; ++t) r *= qnum(t, d);
  return r;
}

Scalar qbinom(int n, int m, int d) {
  if (m < 0 || m > n) throw std::invalid_argument("qbinom requires 0 <= m <= n");
  Laurent top = qfactorial(n, d).num();
  Laurent bot = (qfactorial(m, d) * qfactorial(n - m, d)).num();
  return Scalar(laurent_divexact(top, bot));
}

}  // namespace artifact
