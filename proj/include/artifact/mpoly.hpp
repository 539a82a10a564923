#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "artifact/scalar.hpp"

namespace artifact {

inline bool coeff_is_zero(const Laurent& c) { return c.is_zero(); }
inline bool coeff_is_zero(const mpz_class& c) { return c == 0; }
inline std::string coeff_str(const Laurent& c) { return laurent_str(c); }
inline std::string coeff_str(const mpz_class& c) { return c.get_str(); }

// Commutative polynomial in nvars variables; exponent vector -> coefficient.
template <class C>
class MPoly {
 public:
  using Mono = std::vector<int>;
  explicit MPoly(int nvars = 0) : n_(nvars) {}
  static MPoly constant(int nvars, const C& c) {
    MPoly p(nvars);
    p.add(Mono(nvars, 0), c);
    return p;
  }
  static MPoly var(int nvars, int v, const C& c = C(1)) {
    Mono e(nvars, 0);
    e[v] = 1;
    MPoly p(nvars);
    p.add(e, c);
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, C>& terms() const { return t_; }

  void add(const Mono& e, const C& c) {
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) it->second += c;
    if (coeff_is_zero(it->second)) t_.erase(it);
  }
  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
  }
  MPoly& operator*=(const C& s) {
    if (coeff_is_zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c = c * s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Mono e(ea);
        for (int v = 0; v < a.n_; ++v) e[v] += eb[v];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  MPoly pow(int e) const {
    MPoly r = constant(n_, C(1));
    for (int t = 0; t < e; ++t) r = r * *this;
    return r;
  }

  // names[v] labels variable v; coefficients in parentheses.
  std::string str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      os << (first ? "" : " + ") << "(" << coeff_str(c) << ")";
      first = false;
      for (int v = 0; v < n_; ++v)
        if (e[v]) os << "*" << names[v] << (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    }
    return os.str();
  }

 private:
  int n_;
  std::map<Mono, C> t_;
};

}  // namespace artifact
