#pragma once

#include <cstddef>
#include <vector>

#include "cpcheck/rational.hpp"

namespace cpcheck {

// Dense matrix over the Gaussian rationals, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(size_t n);
  // E_{ij} scaled by c, indices 0-based.
  static Mat unit(size_t n, size_t i, size_t j, const GaussianRational& c = GaussianRational(1));

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  GaussianRational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const GaussianRational& c);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const GaussianRational& c) { return a *= c; }
  friend Mat operator*(const GaussianRational& c, Mat a) { return a *= c; }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conjugate() const;
  GaussianRational trace() const;

  // Row-major flattening, length rows*cols.
  std::vector<GaussianRational> vec() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> data_;
};

// Skips zero entries of a, so cost tracks the sparsity of the left factor.
Mat multiply(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return multiply(a, b); }

using Vec = std::vector<GaussianRational>;

// A * y for a column vector y.
Vec apply_vec(const Mat& a, const Vec& y);
// x^* A y (x conjugated entrywise), the sesquilinear pairing used by witnesses.
GaussianRational sesquilinear_form(const Vec& x, const Mat& a, const Vec& y);
// Hilbert-Schmidt inner product tr(A^* B), conjugate-linear in A.
GaussianRational hs_inner(const Mat& a, const Mat& b);

}  // namespace cpcheck
