#pragma once

#include <optional>
#include <vector>

#include "artifact/scalar.hpp"

namespace artifact {

using Vec = std::vector<Scalar>;

// Dense matrix over Q(q); maps column vectors of size cols to size rows.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Mat identity(int n);
  Scalar& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const;
  Vec column(int c) const;
  friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Scalar& c, const Mat& x);
Vec operator*(const Mat& x, const Vec& v);
bool is_zero(const Vec& v);

// Row space grown one vector at a time; remembers how each echelon row is made from the inserted vectors.
class RowSpace {
 public:
  explicit RowSpace(int width) : width_(width) {}
  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Inserts v; returns true when v was independent of the previous vectors.
  bool insert(const Vec& v);
  // Coefficients of v in terms of the independent inserted vectors, or nullopt if v is outside the span.
  std::optional<Vec> express(const Vec& v) const;
  bool contains(const Vec& v) const { return express(v).has_value(); }

 private:
  int width_;
  std::vector<Vec> rows_;   // echelon rows, pivot normalized to 1
  std::vector<int> piv_;
  std::vector<Vec> how_;    // rows_[t] = sum how_[t][s] * basis_[s]
  Vec reduce(Vec v, Vec* coef) const;
};

int rank(const Mat& m);
// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Mat& m);
Scalar determinant(Mat m);

}  // namespace artifact
