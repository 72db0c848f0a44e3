#include "cpcheck/positivity.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "cpcheck/subspace.hpp"

namespace cpcheck {

bool verify_witness(const KrausFamily& psi, const BilinearWitness& w) {
  if (w.x.size() != psi.n || w.y.size() != psi.n)
    throw std::invalid_argument("verify_witness: dimension mismatch");
  auto nonzero = [](const Vec& v) {
    for (const auto& z : v)
      if (!z.is_zero()) return true;
    return false;
  };
  if (!nonzero(w.x) || !nonzero(w.y)) return false;
  for (const auto& [v, weight] : psi.ops) {
    if (!sesquilinear_form(w.x, v, w.y).is_zero()) return false;
  }
  return true;
}

namespace {

// x solving x^* V_i y = 0 for all i: nullspace of the rows conj(V_i y),
// the kernel of K(y)^*.
std::optional<Vec> kernel_x(const KrausFamily& psi, const Vec& y) {
  RowSpace rs(psi.n);
  for (const auto& [v, w] : psi.ops) {
    Vec c = apply_vec(v, y);
    for (auto& z : c) z = z.conj();
    rs.insert(std::move(c));
  }
  auto null = rs.nullspace();
  if (null.empty()) return std::nullopt;
  return null.front();
}

// Univariate polynomials over the Gaussian rationals, ascending coefficients;
// the zero polynomial is the empty vector.
using Poly = std::vector<GaussianRational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    GaussianRational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussianRational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

GaussianRational det2(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

PositivityVerdict not_positive_at(const KrausFamily& psi, Vec y, const char* method) {
  auto x = kernel_x(psi, y);
  if (!x) throw std::logic_error("positivity: common root without kernel vector");
  PositivityVerdict verdict;
  verdict.status = PosStatus::not_strictly_positive;
  verdict.witness = BilinearWitness{std::move(*x), std::move(y)};
  verdict.method = method;
  return verdict;
}

}  // namespace

PositivityVerdict check_exact_small(const KrausFamily& psi) {
  if (psi.n > 2) throw std::invalid_argument("check_exact_small: only n <= 2");
  PositivityVerdict verdict;
  if (psi.n == 1) {
    verdict.method = "exact-n1";
    bool any = false;
    for (const auto& [v, w] : psi.ops) any = any || !v.is_zero();
    if (any) {
      verdict.status = PosStatus::strictly_positive;
    } else {
      verdict.status = PosStatus::not_strictly_positive;
      verdict.witness = BilinearWitness{{GaussianRational(1)}, {GaussianRational(1)}};
    }
    return verdict;
  }

  // n = 2. A failure point is a common projective root (y1, y2) of the minor
  // forms det[V_i y | V_j y] = A y1^2 + B y1 y2 + C y2^2.
  struct Form {
    GaussianRational a, b, c;
  };
  std::vector<Form> forms;
  const auto& ops = psi.ops;
  std::vector<Vec> col0, col1;
  for (const auto& [v, w] : ops) {
    col0.push_back({v(0, 0), v(1, 0)});
    col1.push_back({v(0, 1), v(1, 1)});
  }
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j) {
      Form f{det2(col0[i], col0[j]), det2(col0[i], col1[j]) + det2(col1[i], col0[j]),
             det2(col1[i], col1[j])};
      if (!f.a.is_zero() || !f.b.is_zero() || !f.c.is_zero()) forms.push_back(std::move(f));
    }

  Vec e1 = {GaussianRational(1), GaussianRational()};
  bool root_at_e1 = true;  // the point (1, 0), where each form evaluates to A
  for (const auto& f : forms) root_at_e1 = root_at_e1 && f.a.is_zero();
  if (root_at_e1) return not_positive_at(psi, e1, "exact-n2");

  // Dehomogenize at y = (t, 1); the uncovered point (1, 0) was just ruled out.
  Poly g;
  for (const auto& f : forms) {
    Poly p = {f.c, f.b, f.a};
    g = poly_gcd(std::move(g), std::move(p));  // gcd({}, p) is monic p
    if (g.size() == 1) break;
  }
  if (g.size() <= 1) {
    verdict.status = PosStatus::strictly_positive;
    verdict.method = "exact-n2";
    return verdict;
  }
  if (g.size() == 2) {
    // Monic t + c0.
    Vec y = {-g[0], GaussianRational(1)};
    return not_positive_at(psi, std::move(y), "exact-n2");
  }
  // Monic quadratic t^2 + c1 t + c0.
  GaussianRational disc = g[1] * g[1] - GaussianRational(4) * g[0];
  if (auto s = gauss_sqrt(disc)) {
    GaussianRational t0 = (-g[1] + *s) / GaussianRational(2);
    Vec y = {std::move(t0), GaussianRational(1)};
    return not_positive_at(psi, std::move(y), "exact-n2");
  }
  verdict.status = PosStatus::not_strictly_positive;
  verdict.method = "exact-n2";
  verdict.irrational_witness = true;
  return verdict;
}

PositivityVerdict check_classical(const KrausFamily& psi) {
  auto cs = classical_structure(psi);
  if (!cs) throw std::invalid_argument("check_classical: family is not classical");
  PositivityVerdict verdict;
  verdict.method = "exact-classical";
  for (size_t i = 0; i < psi.n; ++i)
    for (size_t j = 0; j < psi.n; ++j) {
      if (sgn(cs->induced[i][j]) > 0) continue;
      Vec x(psi.n), y(psi.n);
      x[i] = GaussianRational(1);
      y[j] = GaussianRational(1);
      verdict.status = PosStatus::not_strictly_positive;
      verdict.witness = BilinearWitness{std::move(x), std::move(y)};
      return verdict;
    }
  verdict.status = PosStatus::strictly_positive;
  return verdict;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Hand-rolled Box-Muller so the stream is identical across standard library
// implementations.
std::pair<double, double> normal_pair(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  double u2 = uniform01(rng);
  double r = std::sqrt(-2.0 * std::log(u1));
  constexpr double two_pi = 6.283185307179586476925286766559;
  return {r * std::cos(two_pi * u2), r * std::sin(two_pi * u2)};
}

Rat continued_fraction(double v, long max_den) {
  if (std::abs(v) < 1e-12) return Rat(0);
  bool neg = v < 0;
  double x = std::abs(v);
  long long h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(x);
    if (fa > 1e15) break;
    long long a = static_cast<long long>(fa);
    long long h = a * h1 + h2, k = a * k1 + k2;
    if (k > max_den) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    double frac = x - fa;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (k1 == 0) return Rat(0);
  Rat r(static_cast<long>(neg ? -h1 : h1), static_cast<long>(k1));
  r.canonicalize();
  return r;
}

}  // namespace

PositivityVerdict check_numeric(const KrausFamily& psi, int starts, unsigned long seed,
                                double tol) {
  if (starts < 1) throw std::invalid_argument("check_numeric: starts must be at least 1");
  const size_t n = psi.n;
  std::vector<Eigen::MatrixXcd> vs;
  std::vector<double> ws;
  for (const auto& [v, w] : psi.ops) {
    Eigen::MatrixXcd m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m(i, j) = std::complex<double>(to_double(v(i, j).re), to_double(v(i, j).im));
    vs.push_back(std::move(m));
    ws.push_back(to_double(w));
  }

  auto min_eig = [&](const Eigen::VectorXcd& y) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (size_t k = 0; k < vs.size(); ++k) {
      Eigen::VectorXcd c = vs[k] * y;
      a += ws[k] * c * c.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    return std::make_pair(es.eigenvalues()(0), Eigen::VectorXcd(es.eigenvectors().col(0)));
  };

  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_y = Eigen::VectorXcd::Zero(n);
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXcd y(n);
    for (size_t i = 0; i < n; ++i) {
      auto [re, im] = normal_pair(rng);
      y(i) = std::complex<double>(re, im);
    }
    y.normalize();
    for (int t = 0; t < 200; ++t) {
      Eigen::VectorXcd u = min_eig(y).second;
      // Descent direction for y^* M(u) y with M(u) = sum w V^* u u^* V.
      Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
      for (size_t k = 0; k < vs.size(); ++k) {
        std::complex<double> inner = u.dot(vs[k] * y);
        d += ws[k] * inner * (vs[k].adjoint() * u);
      }
      double step = 0.5 / (1.0 + 0.05 * t);
      y = (y - step * d).eval();
      double norm = y.norm();
      if (norm < 1e-12) break;
      y /= norm;
    }
    double final_val = min_eig(y).first;
    if (final_val < best) {
      best = final_val;
      best_y = y;
    }
  }

  PositivityVerdict verdict;
  verdict.method = "numeric";
  verdict.numeric_margin = best;
  if (best <= tol) {
    for (long cap : {100L, 10000L, 1000000L}) {
      Vec yr(n);
      bool nonzero = false;
      for (size_t i = 0; i < n; ++i) {
        yr[i] = GaussianRational{continued_fraction(best_y(i).real(), cap),
                                 continued_fraction(best_y(i).imag(), cap)};
        nonzero = nonzero || !yr[i].is_zero();
      }
      if (!nonzero) continue;
      auto x = kernel_x(psi, yr);
      if (!x) continue;
      BilinearWitness w{std::move(*x), std::move(yr)};
      if (verify_witness(psi, w)) {
        verdict.status = PosStatus::not_strictly_positive;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  verdict.status = PosStatus::unknown;
  return verdict;
}

PositivityVerdict check(const KrausFamily& psi, int starts, unsigned long seed, double tol) {
  if (psi.n <= 2) return check_exact_small(psi);
  if (classical_structure(psi)) return check_classical(psi);
  return check_numeric(psi, starts, seed, tol);
}

}  // namespace cpcheck
