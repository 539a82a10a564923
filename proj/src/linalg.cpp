#include "artifact/linalg.hpp"

#include <stdexcept>

namespace artifact {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int t = 0; t < n; ++t) m(t, t) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::column(int c) const {
  Vec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int t = 0; t < x.cols; ++t) {
      const Scalar& u = x(r, t);
      if (u.is_zero()) continue;
      for (int c = 0; c < y.cols; ++c)
        if (!y(t, c).is_zero()) z(r, c) += u * y(t, c);
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Mat z = x;
  for (std::size_t t = 0; t < z.a.size(); ++t) z.a[t] += y.a[t];
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Mat z = x;
  for (std::size_t t = 0; t < z.a.size(); ++t) z.a[t] -= y.a[t];
  return z;
}

Mat operator*(const Scalar& c, const Mat& x) {
  Mat z = x;
  for (auto& e : z.a) e *= c;
  return z;
}

Vec operator*(const Mat& x, const Vec& v) {
  if (x.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix shape mismatch");
  Vec w(x.rows);
  for (int c = 0; c < x.cols; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < x.rows; ++r)
      if (!x(r, c).is_zero()) w[r] += x(r, c) * v[c];
  }
  return w;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec RowSpace::reduce(Vec v, Vec* coef) const {
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Scalar f = v[piv_[t]];
    if (f.is_zero()) continue;
    for (int c = piv_[t]; c < width_; ++c)
      if (!rows_[t][c].is_zero()) v[c] -= f * rows_[t][c];
    if (coef)
      for (std::size_t s = 0; s < how_[t].size(); ++s)
        if (!how_[t][s].is_zero()) (*coef)[s] += f * how_[t][s];
  }
  return v;
}

bool RowSpace::insert(const Vec& v) {
  if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("row width mismatch");
  const int n = rank();
  Vec coef(n + 1);
  Vec r = reduce(v, &coef);
  int p = 0;
  while (p < width_ && r[p].is_zero()) ++p;
  if (p == width_) return false;
  // r = v - sum coef*basis, so r = basis_new - sum coef_s basis_s
  Vec how(n + 1);
  for (int s = 0; s < n; ++s) how[s] = -coef[s];
  how[n] = Scalar(1);
  Scalar inv = r[p].inverse();
  for (int c = p; c < width_; ++c) r[c] *= inv;
  for (auto& x : how) x *= inv;
  for (auto& h : how_) h.resize(n + 1);
  // keep rows sorted by pivot and fully reduced
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Scalar f = rows_[t][p];
    if (f.is_zero()) continue;
    for (int c = p; c < width_; ++c)
      if (!r[c].is_zero()) rows_[t][c] -= f * r[c];
    for (int s = 0; s <= n; ++s)
      if (!how[s].is_zero()) how_[t][s] -= f * how[s];
  }
  std::size_t pos = 0;
  while (pos < piv_.size() && piv_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  piv_.insert(piv_.begin() + pos, p);
  how_.insert(how_.begin() + pos, std::move(how));
  return true;
}

std::optional<Vec> RowSpace::express(const Vec& v) const {
  if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("row width mismatch");
  Vec coef(rank());
  Vec r = reduce(v, &coef);
  if (!is_zero(r)) return std::nullopt;
  return coef;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int p = row;
    while (p < m.rows && m(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (int t = 0; t < m.cols; ++t) std::swap(m(p, t), m(row, t));
    Scalar inv = m(row, c).inverse();
    for (int t = c; t < m.cols; ++t) m(row, t) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (int t = c; t < m.cols; ++t)
        if (!m(row, t).is_zero()) m(r, t) -= f * m(row, t);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

}  // namespace

int rank(const Mat& m) {
  Mat w = m;
  return static_cast<int>(rref(w).size());
}

std::vector<Vec> kernel(const Mat& m) {
  Mat w = m;
  auto piv = rref(w);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec x(m.cols);
    x[f] = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -w(static_cast<int>(r), f);
    out.push_back(std::move(x));
  }
  return out;
}

Scalar determinant(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar det(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = c;
    while (p < m.rows && m(p, c).is_zero()) ++p;
    if (p == m.rows) return Scalar(0);
    if (p != c) {
      for (int t = 0; t < m.cols; ++t) std::swap(m(p, t), m(c, t));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int r = c + 1; r < m.rows; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) * inv;
      for (int t = c; t < m.cols; ++t) m(r, t) -= f * m(c, t);
    }
  }
  return det;
}

}  // namespace artifact
