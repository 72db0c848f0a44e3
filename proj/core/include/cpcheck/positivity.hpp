#pragma once

#include <optional>
#include <string>

#include "cpcheck/kraus.hpp"

namespace cpcheck {

// Disproof of strict positivity: nonzero x, y with x^* V_i y = 0 for all i.
struct BilinearWitness {
  Vec x, y;
};

enum class PosStatus { strictly_positive, not_strictly_positive, unknown };

struct PositivityVerdict {
  PosStatus status = PosStatus::unknown;
  std::optional<BilinearWitness> witness;
  std::optional<double> numeric_margin;
  std::string method;
  // n = 2 only: the decision found a common root but it is not expressible
  // over the Gaussian rationals, so no witness vector is attached.
  bool irrational_witness = false;
};

// Exact check that x and y are nonzero and x^* V_i y = 0 for every operator.
bool verify_witness(const KrausFamily& psi, const BilinearWitness& w);

// Complete exact decision for n <= 2.
// n = 2 reduces to a common projective root of the minor forms
// det[V_i y | V_j y], found through polynomial GCD over the Gaussian
// rationals.
PositivityVerdict check_exact_small(const KrausFamily& psi);

// Complete exact decision for families of scalar multiples of matrix units:
// strictly positive iff every entry position carries a nonzero operator.
PositivityVerdict check_classical(const KrausFamily& psi);

// Multi-start projected gradient descent of lambda_min(Psi(y y^*)) over the
// unit sphere. Only ever reports NOT_STRICTLY_POSITIVE (with an exactly
// verified rationalized witness) or UNKNOWN with the best margin found.
PositivityVerdict check_numeric(const KrausFamily& psi, int starts = 64, unsigned long seed = 0,
                                double tol = 1e-9);

// Dispatcher: exact methods where complete (n <= 2, classical), numeric
// search with defaults otherwise. Instances with reduction provenance are
// routed separately by callers that know it.
PositivityVerdict check(const KrausFamily& psi, int starts = 64,
                        unsigned long seed = 0, double tol = 1e-9);

}  // namespace cpcheck
