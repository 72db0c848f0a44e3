#include "cpcheck/numeric.hpp"

#include <stdexcept>

#include "cpcheck/structure.hpp"

namespace cpcheck {

namespace {

Eigen::MatrixXcd to_eigen(const Mat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) {
      const GaussianRational& e = m(r, c);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          std::complex<double>(to_double(e.re), to_double(e.im));
    }
  return out;
}

Eigen::MatrixXcd adjoint_apply(const NumericKrausFamily& fam, const Eigen::MatrixXcd& x) {
  Eigen::Index n = static_cast<Eigen::Index>(fam.n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (size_t i = 0; i < fam.ops.size(); ++i)
    out += fam.weights[i] * (fam.ops[i].adjoint() * x * fam.ops[i]);
  return out;
}

Eigen::RowVectorXcd vec_row(const Eigen::MatrixXcd& m) {
  Eigen::Index n = m.rows();
  Eigen::RowVectorXcd v(n * n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) v(r * n + c) = m(r, c);
  return v;
}

Eigen::MatrixXcd unvec_row(const Eigen::RowVectorXcd& v, Eigen::Index n) {
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  return m;
}

}  // namespace

NumericKrausFamily to_numeric(const KrausFamily& psi) {
  NumericKrausFamily fam;
  fam.n = psi.n;
  for (const auto& [op, weight] : psi.ops) {
    fam.ops.push_back(to_eigen(op));
    fam.weights.push_back(to_double(weight));
  }
  return fam;
}

double unital_residual(const NumericKrausFamily& fam) {
  Eigen::Index n = static_cast<Eigen::Index>(fam.n);
  Eigen::MatrixXcd s = -Eigen::MatrixXcd::Identity(n, n);
  for (size_t i = 0; i < fam.ops.size(); ++i)
    s += fam.weights[i] * (fam.ops[i].adjoint() * fam.ops[i]);
  return s.cwiseAbs().maxCoeff();
}

NumericKrausFamily normalize_to_kraus(const KrausFamily& psi, double tolerance) {
  if (!is_irreducible(psi))
    throw std::invalid_argument("normalize_to_kraus: family is not irreducible");

  NumericKrausFamily fam = to_numeric(psi);
  Eigen::Index n = static_cast<Eigen::Index>(fam.n);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(fam.n);
  double rho = 0;
  bool converged = false;
  for (int it = 0; it < 100000; ++it) {
    Eigen::MatrixXcd next = adjoint_apply(fam, a);
    rho = next.trace().real();
    if (!(rho > 0)) throw std::runtime_error("normalize_to_kraus: spectral radius estimate collapsed");
    next /= rho;
    double diff = (next - a).cwiseAbs().maxCoeff();
    a = std::move(next);
    if (diff < tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("normalize_to_kraus: power iteration did not converge");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((a + a.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("normalize_to_kraus: eigendecomposition failed");
  if (!(es.eigenvalues()(0) > 0))
    throw std::runtime_error("normalize_to_kraus: Perron eigenvector is not positive definite");

  Eigen::VectorXd roots = es.eigenvalues().cwiseSqrt();
  Eigen::MatrixXcd u = es.eigenvectors();
  Eigen::MatrixXcd a_half = u * roots.asDiagonal() * u.adjoint();
  Eigen::MatrixXcd a_half_inv = u * roots.cwiseInverse().asDiagonal() * u.adjoint();

  NumericKrausFamily out;
  out.n = fam.n;
  out.weights = fam.weights;
  double scale = 1.0 / std::sqrt(rho);
  for (const auto& op : fam.ops) out.ops.push_back(scale * (a_half * op * a_half_inv));
  return out;
}

std::vector<size_t> numeric_product_span_dims(const NumericKrausFamily& fam, size_t max_q,
                                              double rank_tol) {
  std::vector<size_t> dims;
  if (max_q == 0) return dims;
  Eigen::Index n = static_cast<Eigen::Index>(fam.n);
  Eigen::Index nn = n * n;
  Eigen::Index m = static_cast<Eigen::Index>(fam.ops.size());

  Eigen::MatrixXcd stack(m, nn);
  for (Eigen::Index i = 0; i < m; ++i) stack.row(i) = vec_row(fam.ops[static_cast<size_t>(i)]);

  Eigen::MatrixXcd basis;
  for (size_t q = 1; q <= max_q; ++q) {
    if (q > 1) {
      Eigen::MatrixXcd next(m * basis.rows(), nn);
      Eigen::Index idx = 0;
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index b = 0; b < basis.rows(); ++b)
          next.row(idx++) = vec_row(fam.ops[static_cast<size_t>(i)] * unvec_row(basis.row(b), n));
      stack = std::move(next);
    }
    if (stack.rows() == 0) {
      dims.push_back(0);
      continue;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cut = sv.size() > 0 ? sv(0) * rank_tol : 0.0;
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > cut && sv(r) > 0) ++r;
    dims.push_back(static_cast<size_t>(r));
    basis = svd.matrixV().leftCols(r).adjoint();
  }
  return dims;
}

}  // namespace cpcheck
