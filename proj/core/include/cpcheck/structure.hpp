#pragma once

#include <optional>

#include "cpcheck/kraus.hpp"
#include "cpcheck/subspace.hpp"

namespace cpcheck {

struct ClosureResult {
  MatrixSubspace algebra;
  size_t p = 0;  // first p with D_{p+1} = D_p
};

// Span of all products of the operators, grown one factor per round:
// D_1 = span{V_i}, D_{k+1} = D_k + span{V_i M : M in basis(D_k)}.
ClosureResult algebra_closure(const KrausFamily& psi);

// The map is irreducible iff the generated algebra is everything.
bool is_irreducible(const KrausFamily& psi);

// S_k = span of products of exactly k operators, via
// S_{k+1} = span{V_i M : M in basis(S_k)}.
MatrixSubspace product_span(const KrausFamily& psi, size_t k);

// (n^2 - m + 1) n^2 clamped below at n^2; m counts listed operators.
size_t wielandt_bound(size_t n, size_t m);

struct PrimitivityReport {
  bool irreducible = false;
  bool primitive = false;
  std::optional<size_t> closure_depth;
  std::optional<size_t> wielandt_q;
  size_t bound = 0;
};

// Irreducibility first; then scan S_k for k up to the bound, stopping early
// when S_k is full (primitive) or the sequence revisits a subspace (not).
PrimitivityReport is_primitive(const KrausFamily& psi);

}  // namespace cpcheck
