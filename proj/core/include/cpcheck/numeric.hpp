#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cpcheck/kraus.hpp"

namespace cpcheck {

// Floating-point Kraus family. Deliberately a separate type so that float
// matrices can never reach the exact deciders by accident.
struct NumericKrausFamily {
  size_t n = 0;
  std::vector<Eigen::MatrixXcd> ops;
  std::vector<double> weights;
};

NumericKrausFamily to_numeric(const KrausFamily& psi);

// Max-norm of sum_i w_i W_i^* W_i - I.
double unital_residual(const NumericKrausFamily& fam);

// Rescales an irreducible family through the Perron eigenpair of the adjoint
// map: W_i = rho^{-1/2} A^{1/2} V_i A^{-1/2} where sum_i w_i V_i^* A V_i =
// rho A. A is found by power iteration started at the identity, renormalized
// to unit trace each step, stopping when successive iterates differ by less
// than `tolerance` in max-norm (cap 10^5 steps). The result is approximately
// unital; its residual is reported by unital_residual.
NumericKrausFamily normalize_to_kraus(const KrausFamily& psi, double tolerance = 1e-12);

// dim span{W_i1 ... W_iq} for q = 1..max_q. Singular values below rank_tol
// times the largest one count as zero.
std::vector<size_t> numeric_product_span_dims(const NumericKrausFamily& fam, size_t max_q,
                                              double rank_tol = 1e-6);

}  // namespace cpcheck
