#include "cpcheck/kraus.hpp"

#include <stdexcept>

namespace cpcheck {

KrausFamily make_family(size_t n, std::vector<WeightedOp> ops) {
  for (const auto& [op, w] : ops) {
    if (op.rows() != n || op.cols() != n)
      throw std::invalid_argument("KrausFamily: operator is not n by n");
    if (sgn(w) <= 0) throw std::invalid_argument("KrausFamily: weight must be positive");
  }
  return KrausFamily{n, std::move(ops), TriState::unchecked};
}

Mat apply(const KrausFamily& psi, const Mat& x) {
  if (x.rows() != psi.n || x.cols() != psi.n)
    throw std::invalid_argument("apply: input is not n by n");
  Mat out(psi.n, psi.n);
  for (const auto& [v, w] : psi.ops) {
    Mat t = v * x * v.adjoint();
    t *= GaussianRational(w);
    out += t;
  }
  return out;
}

Mat adjoint_apply(const KrausFamily& psi, const Mat& x) {
  if (x.rows() != psi.n || x.cols() != psi.n)
    throw std::invalid_argument("adjoint_apply: input is not n by n");
  Mat out(psi.n, psi.n);
  for (const auto& [v, w] : psi.ops) {
    Mat t = v.adjoint() * x * v;
    t *= GaussianRational(w);
    out += t;
  }
  return out;
}

bool verify_unital(KrausFamily& psi) {
  Mat s(psi.n, psi.n);
  for (const auto& [v, w] : psi.ops) {
    Mat t = v.adjoint() * v;
    t *= GaussianRational(w);
    s += t;
  }
  bool ok = (s == Mat::identity(psi.n));
  psi.unital_checked = ok ? TriState::yes : TriState::no;
  return ok;
}

KrausFamily expand_weights(const KrausFamily& psi) {
  std::vector<WeightedOp> out;
  for (const auto& [v, w] : psi.ops) {
    if (w.get_den() != 1) throw std::invalid_argument("expand_weights: non-integer weight");
    unsigned long copies = mpz_get_ui(w.get_num().get_mpz_t());
    if (!w.get_num().fits_ulong_p())
      throw std::invalid_argument("expand_weights: weight too large to expand");
    for (unsigned long k = 0; k < copies; ++k) out.push_back({v, Rat(1)});
  }
  KrausFamily e{psi.n, std::move(out), psi.unital_checked};
  return e;
}

Mat transfer_matrix(const KrausFamily& psi) {
  size_t n = psi.n;
  Mat t(n * n, n * n);
  for (const auto& [v, w] : psi.ops) {
    GaussianRational gw{w};
    for (size_t a = 0; a < n; ++a)
      for (size_t c = 0; c < n; ++c) {
        const GaussianRational& vac = v(a, c);
        if (vac.is_zero()) continue;
        GaussianRational left = gw * vac;
        for (size_t b = 0; b < n; ++b)
          for (size_t d = 0; d < n; ++d) {
            const GaussianRational& vbd = v(b, d);
            if (vbd.is_zero()) continue;
            t(a * n + b, c * n + d) += left * vbd.conj();
          }
      }
  }
  return t;
}

std::optional<ClassicalStructure> classical_structure(const KrausFamily& psi) {
  size_t n = psi.n;
  ClassicalStructure cs;
  cs.induced.assign(n, std::vector<Rat>(n, Rat(0)));
  for (const auto& [v, w] : psi.ops) {
    size_t hits = 0, hi = 0, hj = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!v(i, j).is_zero()) {
          ++hits;
          hi = i;
          hj = j;
        }
    if (hits > 1) return std::nullopt;
    if (hits == 1) cs.induced[hi][hj] += w * v(hi, hj).abs2();
  }
  return cs;
}

}  // namespace cpcheck
