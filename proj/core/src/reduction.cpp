#include "cpcheck/reduction.hpp"

#include <stdexcept>

#include "cpcheck/oracles.hpp"

namespace cpcheck {

size_t coord_of_var(int var) { return static_cast<size_t>(var); }

size_t coord_of_product(const Cnf& cnf, int clause) {
  return static_cast<size_t>(cnf.num_vars + clause);
}

size_t coord_of_clause_aux(const Cnf& cnf, int clause) {
  return static_cast<size_t>(cnf.num_vars) + cnf.clauses.size() + static_cast<size_t>(clause);
}

size_t system_size(int num_vars, int num_clauses) {
  size_t n = static_cast<size_t>(num_vars), m = static_cast<size_t>(num_clauses);
  return n + 3 * m + (n + 2 * m + 1) * (4 * m + n) / 2;
}

HomogeneousSystem build_system(const Cnf& cnf) {
  const int big_n = cnf.num_vars;
  const int big_m = static_cast<int>(cnf.clauses.size());
  for (const auto& c : cnf.clauses) {
    if (c[0].var == c[1].var) throw std::invalid_argument("build_system: cnf not normalized");
    for (const auto& l : c)
      if (l.var < 1 || l.var > big_n)
        throw std::invalid_argument("build_system: variable index out of range");
  }

  HomogeneousSystem sys;
  sys.cnf = cnf;
  sys.n = static_cast<size_t>(big_n + 2 * big_m + 1);
  const size_t n = sys.n;
  const GaussianRational one(1);

  auto push = [&](Mat m, HomogeneousSystem::Group g) {
    sys.mats.push_back(std::move(m));
    sys.groups.push_back(g);
  };

  // (1) clause equations
  for (int i = 1; i <= big_m; ++i) {
    const Clause& c = cnf.clauses[static_cast<size_t>(i) - 1];
    long p = -c[0].sign, q = -c[1].sign;
    Mat a(n, n);
    size_t col = coord_of_clause_aux(cnf, i);
    a(0, col) = one;
    a(coord_of_var(c[0].var), col) = GaussianRational(p);
    a(coord_of_var(c[1].var), col) = GaussianRational(q);
    a(coord_of_product(cnf, i), col) = GaussianRational(p * q);
    push(std::move(a), HomogeneousSystem::Group::clause);
  }
  // (2) product links x_k1 x_k2 = x_0 x_{N+i}
  for (int i = 1; i <= big_m; ++i) {
    const Clause& c = cnf.clauses[static_cast<size_t>(i) - 1];
    Mat a(n, n);
    a(coord_of_var(c[0].var), coord_of_var(c[1].var)) = one;
    a(0, coord_of_product(cnf, i)) = GaussianRational(-1);
    push(std::move(a), HomogeneousSystem::Group::product_link);
  }
  // (3) slack links (x_0 + r x_k3 - x_{N+M+i}) x_j = 0, all coordinates j
  for (int i = 1; i <= big_m; ++i) {
    const Clause& c = cnf.clauses[static_cast<size_t>(i) - 1];
    long r = -c[2].sign;
    for (size_t j = 0; j < n; ++j) {
      Mat a(n, n);
      a(0, j) += one;
      a(coord_of_var(c[2].var), j) += GaussianRational(r);
      a(coord_of_clause_aux(cnf, i), j) += GaussianRational(-1);
      push(std::move(a), HomogeneousSystem::Group::aux_link);
    }
  }
  // (4) squares x_i^2 = x_0^2 for i = 1..N+M
  for (int i = 1; i <= big_n + big_m; ++i) {
    Mat a(n, n);
    a(static_cast<size_t>(i), static_cast<size_t>(i)) = one;
    a(0, 0) = GaussianRational(-1);
    push(std::move(a), HomogeneousSystem::Group::squares);
  }
  // (5) antisymmetry x_i y_j = x_j y_i
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Mat a(n, n);
      a(i, j) = one;
      a(j, i) = GaussianRational(-1);
      push(std::move(a), HomogeneousSystem::Group::antisymmetry);
    }

  if (sys.mats.size() != system_size(big_n, big_m))
    throw std::logic_error("build_system: emitted count does not match the closed form");
  return sys;
}

namespace {

Mat gram_sum(const std::vector<Mat>& mats, size_t n) {
  Mat s(n, n);
  for (const auto& a : mats) s += a.adjoint() * a;
  return s;
}

}  // namespace

ReducedInstance unitalize(const HomogeneousSystem& system) {
  const size_t n = system.n;
  const int big_n = system.cnf.num_vars;
  const int big_m = static_cast<int>(system.cnf.clauses.size());
  const long scale = 2L * big_n + 7L * big_m + 4;

  Mat s = gram_sum(system.mats, n);
  std::vector<long> k(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const GaussianRational& z = s(i, j);
      if (i != j) {
        if (!z.is_zero()) throw std::logic_error("unitalize: gram sum is not diagonal");
        continue;
      }
      if (!z.is_real() || z.re.get_den() != 1 || !z.re.get_num().fits_slong_p())
        throw std::logic_error("unitalize: diagonal entry is not a small integer");
      k[i] = z.re.get_num().get_si();
      if (k[i] <= 0 || k[i] > scale * scale)
        throw std::logic_error("unitalize: diagonal entry out of range");
    }

  // First group-(3) matrix with right factor e_j^T; its gram matrix is
  // 3 e_j e_j^T.
  std::vector<size_t> special(n);
  Mat three_ejj(n, n);
  for (size_t j = 0; j < n; ++j) {
    size_t idx = 2 * static_cast<size_t>(big_m) + j;
    if (idx >= system.mats.size() ||
        system.groups[idx] != HomogeneousSystem::Group::aux_link)
      throw std::invalid_argument("unitalize: no slack-link matrix for coordinate");
    const Mat& a = system.mats[idx];
    Mat gram = a.adjoint() * a;
    Mat expect(n, n);
    expect(j, j) = GaussianRational(3);
    if (gram != expect) throw std::invalid_argument("unitalize: slack-link gram mismatch");
    special[j] = idx;
  }

  GaussianRational inv_l{rat(1, scale)};
  GaussianRational inv_3l{rat(1, 3 * scale)};
  std::vector<WeightedOp> ops;
  ops.reserve(system.mats.size() + n);
  for (const auto& a : system.mats) ops.push_back({a * inv_l, Rat(1)});
  std::vector<long> mult(n);
  for (size_t j = 0; j < n; ++j) {
    mult[j] = scale * scale - k[j];
    ops.push_back({system.mats[special[j]] * inv_3l, Rat(3 * mult[j])});
  }

  ReducedInstance inst;
  inst.cnf = system.cnf;
  inst.system = system;
  inst.scale = scale;
  inst.special_indices = std::move(special);
  inst.multiplicities = std::move(mult);
  inst.family = make_family(n, std::move(ops));

  const Rat allowed[3] = {Rat(0), rat(1, scale), rat(1, 3 * scale)};
  for (const auto& [v, w] : inst.family.ops)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const GaussianRational& z = v(i, j);
        Rat mag = abs(z.re);
        if (!z.is_real() || (mag != allowed[0] && mag != allowed[1] && mag != allowed[2]))
          throw std::logic_error("unitalize: entry outside the scaled alphabet");
      }
  if (!verify_unital(inst.family)) throw std::logic_error("unitalize: family is not unital");
  return inst;
}

ReducedInstance reduce_cnf_to_kraus(const Cnf& cnf) {
  Cnf norm = normalize_cnf(cnf);
  if (norm.clauses.empty())
    throw std::invalid_argument("reduce_cnf_to_kraus: need at least one clause after normalization");
  return unitalize(build_system(norm));
}

Vec encode_coordinates(const ReducedInstance& inst, const std::vector<int>& assignment) {
  const Cnf& cnf = inst.cnf;
  if (assignment.size() != static_cast<size_t>(cnf.num_vars))
    throw std::invalid_argument("encode_coordinates: assignment length mismatch");
  for (int a : assignment)
    if (a != 1 && a != -1) throw std::invalid_argument("encode_coordinates: values must be +-1");
  Vec x(inst.system.n);
  x[0] = GaussianRational(1);
  for (int v = 1; v <= cnf.num_vars; ++v)
    x[coord_of_var(v)] = GaussianRational(assignment[static_cast<size_t>(v) - 1]);
  for (int i = 1; i <= static_cast<int>(cnf.clauses.size()); ++i) {
    const Clause& c = cnf.clauses[static_cast<size_t>(i) - 1];
    long a1 = assignment[static_cast<size_t>(c[0].var) - 1];
    long a2 = assignment[static_cast<size_t>(c[1].var) - 1];
    long a3 = assignment[static_cast<size_t>(c[2].var) - 1];
    long r = -c[2].sign;
    x[coord_of_product(cnf, i)] = GaussianRational(a1 * a2);
    x[coord_of_clause_aux(cnf, i)] = GaussianRational(1 + r * a3);
  }
  return x;
}

BilinearWitness encode_assignment(const ReducedInstance& inst, const std::vector<int>& assignment) {
  if (!cnf_satisfied(inst.cnf, assignment))
    throw std::invalid_argument("encode_assignment: assignment does not satisfy the formula");
  Vec x = encode_coordinates(inst, assignment);
  return BilinearWitness{x, x};
}

DecideResult decide_reduced_instance(const ReducedInstance& inst, int max_vars) {
  SatResult sat = sat_brute_force(inst.cnf, max_vars);
  DecideResult out;
  out.feasible = sat.sat;
  if (sat.sat) {
    out.assignment = sat.assignment;
    out.witness = encode_assignment(inst, *sat.assignment);
  }
  return out;
}

std::vector<int> decode_witness(const ReducedInstance& inst, const BilinearWitness& w) {
  if (!verify_witness(inst.family, w))
    throw std::invalid_argument("decode_witness: witness fails exact verification");
  const GaussianRational& x0 = w.x[0];
  if (x0.is_zero())
    throw std::invalid_argument("decode_witness: x_0 vanishes, not a valid reduced witness");
  std::vector<int> assignment(static_cast<size_t>(inst.cnf.num_vars));
  for (int v = 1; v <= inst.cnf.num_vars; ++v) {
    GaussianRational u = w.x[coord_of_var(v)] / x0;
    if (u == GaussianRational(1)) {
      assignment[static_cast<size_t>(v) - 1] = 1;
    } else if (u == GaussianRational(-1)) {
      assignment[static_cast<size_t>(v) - 1] = -1;
    } else {
      throw std::logic_error("decode_witness: coordinate ratio is not a sign");
    }
  }
  if (!cnf_satisfied(inst.cnf, assignment))
    throw std::logic_error("decode_witness: decoded assignment fails the formula");
  return assignment;
}

PositivityVerdict check_reduced(const ReducedInstance& inst) {
  DecideResult d = decide_reduced_instance(inst);
  PositivityVerdict verdict;
  verdict.method = "oracle-reduced";
  if (d.feasible) {
    verdict.status = PosStatus::not_strictly_positive;
    verdict.witness = std::move(d.witness);
  } else {
    verdict.status = PosStatus::strictly_positive;
  }
  return verdict;
}

}  // namespace cpcheck
