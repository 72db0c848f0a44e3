#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cpcheck/cnf.hpp"
#include "cpcheck/positivity.hpp"

namespace cpcheck {

// Bilinear system x^T A_i y = 0 over coordinates 0..N+2M. Coordinate 0 is
// the affine stand-in x_0, 1..N carry the Boolean variables, N+1..N+M the
// clause products, N+M+1..N+2M the clause slack values.
struct HomogeneousSystem {
  enum class Group { clause, product_link, aux_link, squares, antisymmetry };

  Cnf cnf;  // normalized source, carried for certificates
  size_t n = 0;
  std::vector<Mat> mats;
  std::vector<Group> groups;  // parallel to mats
};

struct ReducedInstance {
  Cnf cnf;
  HomogeneousSystem system;
  long scale = 0;                        // L = 2N+7M+4
  std::vector<size_t> special_indices;   // per coordinate j: n_j with A*A = 3 E_jj
  std::vector<long> multiplicities;      // l_j = L^2 - k_j
  KrausFamily family;
};

size_t coord_of_var(int var);                            // x_var
size_t coord_of_product(const Cnf& cnf, int clause);     // x_{N+i}, clause 1-based
size_t coord_of_clause_aux(const Cnf& cnf, int clause);  // x_{N+M+i}

// The five equation groups, emitted in order:
// (1) per clause, (e_0 + p e_k1 + q e_k2 + pq e_{N+i}) e_{N+M+i}^T
// (2) per clause, e_k1 e_k2^T - e_0 e_{N+i}^T
// (3) per clause and coordinate j, (e_0 + r e_k3 - e_{N+M+i}) e_j^T
// (4) per i in 1..N+M, e_i e_i^T - e_0 e_0^T
// (5) per coordinate pair i < j, e_i e_j^T - e_j e_i^T
// with p, q, r the negated literal signs.
HomogeneousSystem build_system(const Cnf& cnf);

// Number of matrices build_system emits: N + 3M + (N+2M+1)(4M+N)/2.
size_t system_size(int num_vars, int num_clauses);

// Scales to a unital family: every A_i/L at weight 1 plus, per coordinate j,
// A_{n_j}/(3L) at weight 3 l_j, where the l_j are read off the assembled
// diagonal of sum A_i^* A_i. Unitality is asserted exactly.
ReducedInstance unitalize(const HomogeneousSystem& system);

ReducedInstance reduce_cnf_to_kraus(const Cnf& cnf);

using Certificate = std::variant<std::vector<int>, BilinearWitness>;

// Coordinate vector of an arbitrary +-1 assignment: x_0 = 1, variables,
// clause products, clause slacks. Satisfying assignments zero every form;
// others leave residuals on the clause matrices.
Vec encode_coordinates(const ReducedInstance& inst, const std::vector<int>& assignment);

// Satisfying assignment -> exact witness with x = y, x_0 = 1.
BilinearWitness encode_assignment(const ReducedInstance& inst, const std::vector<int>& assignment);

struct DecideResult {
  bool feasible = false;
  std::optional<std::vector<int>> assignment;
  std::optional<BilinearWitness> witness;
};

// Exhaustive and exact for instances built by this module; not a general
// bilinear feasibility decider.
DecideResult decide_reduced_instance(const ReducedInstance& inst, int max_vars = 24);

// Verified witness -> satisfying assignment, reading signs of x_i / x_0.
std::vector<int> decode_witness(const ReducedInstance& inst, const BilinearWitness& w);

// Positivity through the reduction oracle: feasible bilinear system means a
// witness exists, infeasible means strictly positive.
PositivityVerdict check_reduced(const ReducedInstance& inst);

}  // namespace cpcheck
