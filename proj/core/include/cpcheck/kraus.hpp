#pragma once

#include <optional>
#include <vector>

#include "cpcheck/matrix.hpp"

namespace cpcheck {

enum class TriState { unchecked, yes, no };

struct WeightedOp {
  Mat op;
  Rat weight;
};

// Completely positive map X |-> sum_i w_i V_i X V_i^*.
// A weight w stands for w identical copies of the operator.
struct KrausFamily {
  size_t n = 0;
  std::vector<WeightedOp> ops;
  TriState unital_checked = TriState::unchecked;
};

// Validates shapes and weight positivity.
KrausFamily make_family(size_t n, std::vector<WeightedOp> ops);

Mat apply(const KrausFamily& psi, const Mat& x);
Mat adjoint_apply(const KrausFamily& psi, const Mat& x);

// Tests sum_i w_i V_i^* V_i = I exactly and records the outcome on the family.
bool verify_unital(KrausFamily& psi);

// Splits integer weights into repeated unit-weight copies.
KrausFamily expand_weights(const KrausFamily& psi);

// T with vec(apply(psi, X)) = T vec(X), row-major vec.
Mat transfer_matrix(const KrausFamily& psi);

// A family is classical when every operator is a scalar multiple of a matrix
// unit E_ij. The induced matrix collects M_ij = sum of w |c|^2 over operators
// c E_ij; its support is the edge set j -> i of the underlying digraph.
struct ClassicalStructure {
  std::vector<std::vector<Rat>> induced;
};

std::optional<ClassicalStructure> classical_structure(const KrausFamily& psi);

}  // namespace cpcheck
