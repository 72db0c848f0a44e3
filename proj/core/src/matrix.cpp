#include "cpcheck/matrix.hpp"

#include <stdexcept>

namespace cpcheck {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

Mat Mat::unit(size_t n, size_t i, size_t j, const GaussianRational& c) {
  Mat m(n, n);
  m(i, j) = c;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in +=");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in -=");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat& Mat::operator*=(const GaussianRational& c) {
  for (auto& z : data_) z *= c;
  return *this;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::conjugate() const {
  Mat m(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
  return m;
}

GaussianRational Mat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: trace of non-square matrix");
  GaussianRational t;
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<GaussianRational> Mat::vec() const { return data_; }

Mat multiply(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Mat: shape mismatch in multiply");
  Mat c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const GaussianRational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Vec apply_vec(const Mat& a, const Vec& y) {
  if (a.cols() != y.size()) throw std::invalid_argument("Mat: shape mismatch in apply_vec");
  Vec out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) {
      const GaussianRational& aij = a(i, j);
      if (aij.is_zero() || y[j].is_zero()) continue;
      out[i] += aij * y[j];
    }
  }
  return out;
}

GaussianRational sesquilinear_form(const Vec& x, const Mat& a, const Vec& y) {
  if (x.size() != a.rows()) throw std::invalid_argument("Mat: shape mismatch in sesquilinear_form");
  Vec ay = apply_vec(a, y);
  GaussianRational s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || ay[i].is_zero()) continue;
    s += x[i].conj() * ay[i];
  }
  return s;
}

GaussianRational hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Mat: shape mismatch in hs_inner");
  GaussianRational s;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const GaussianRational& aij = a(i, j);
      const GaussianRational& bij = b(i, j);
      if (aij.is_zero() || bij.is_zero()) continue;
      s += aij.conj() * bij;
    }
  return s;
}

}  // namespace cpcheck
