#pragma once

#include <random>

#include "cpcheck/kraus.hpp"
#include "cpcheck/matrix.hpp"

namespace cpcheck::testutil {

using Rng = std::mt19937_64;

inline GaussianRational random_gauss(Rng& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  return gauss(num(rng), den(rng), num(rng), den(rng));
}

inline Mat random_mat(Rng& rng, size_t rows, size_t cols, long span = 5) {
  Mat m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = random_gauss(rng, span);
  return m;
}

inline Mat random_hermitian(Rng& rng, size_t n) {
  Mat b = random_mat(rng, n, n);
  return b + b.adjoint();
}

inline Vec random_vec(Rng& rng, size_t n, long span = 5) {
  Vec v(n);
  for (auto& z : v) z = random_gauss(rng, span);
  return v;
}

// v v^*, always PSD.
inline Mat rank_one(const Vec& v) {
  Mat m(v.size(), v.size());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j].conj();
  return m;
}

inline GaussianRational det_upto3(const Mat& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      throw std::invalid_argument("det_upto3: size above 3");
  }
}

// All principal minors of a Hermitian matrix are real and, for PSD, nonnegative.
inline bool principal_minors_nonnegative(const Mat& m) {
  size_t n = m.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Mat sub(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    GaussianRational d = det_upto3(sub);
    if (!d.is_real() || sgn(d.re) < 0) return false;
  }
  return true;
}

inline KrausFamily swap_family() {
  return make_family(2, {{Mat::unit(2, 0, 1), Rat(1)}, {Mat::unit(2, 1, 0), Rat(1)}});
}

inline KrausFamily identity_family(size_t n) {
  return make_family(n, {{Mat::identity(n), Rat(1)}});
}

// Exact rational unitary [[3/5,4/5],[-4/5,3/5]].
inline Mat rotation35() {
  Mat u(2, 2);
  u(0, 0) = gauss(3, 5);
  u(0, 1) = gauss(4, 5);
  u(1, 0) = gauss(-4, 5);
  u(1, 1) = gauss(3, 5);
  return u;
}

inline KrausFamily conjugate_family(const KrausFamily& psi, const Mat& u) {
  std::vector<WeightedOp> ops;
  Mat ua = u.adjoint();
  for (const auto& [v, w] : psi.ops) ops.push_back({u * v * ua, w});
  return make_family(psi.n, std::move(ops));
}

}  // namespace cpcheck::testutil
