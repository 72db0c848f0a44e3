#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cpcheck/oracles.hpp"
#include "cpcheck/positivity.hpp"
#include "cpcheck/structure.hpp"
#include "test_util.hpp"

using namespace cpcheck;
using namespace cpcheck::testutil;

namespace {

Clause cl(int a, int b, int c) {
  auto lit = [](int v) { return Literal{v < 0 ? -v : v, v < 0 ? -1 : 1}; };
  return {lit(a), lit(b), lit(c)};
}

StochasticMatrix random_sparse_stochastic(Rng& rng, size_t n) {
  std::uniform_int_distribution<int> value(1, 3);
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(0)));
  for (size_t j = 0; j < n; ++j) {
    std::vector<long> w(n, 0);
    long sum = 0;
    for (size_t i = 0; i < n; ++i)
      if (coin(rng) < 35) {
        w[i] = value(rng);
        sum += w[i];
      }
    if (sum == 0) {
      w[pick(rng)] = 1;
      sum = 1;
    }
    for (size_t i = 0; i < n; ++i)
      if (w[i] != 0) p[i][j] = rat(w[i], sum);
  }
  return make_stochastic(std::move(p));
}

StochasticMatrix random_permutation(Rng& rng, size_t n) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(0)));
  for (size_t j = 0; j < n; ++j) p[perm[j]][j] = 1;
  return make_stochastic(std::move(p));
}

StochasticMatrix cycle_maybe_loop(Rng& rng, size_t n) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(0)));
  for (size_t j = 0; j < n; ++j) p[(j + 1) % n][j] = 1;
  if (coin(rng) == 1 && n > 1) {
    p[1][0] = rat(1, 2);
    p[0][0] = rat(1, 2);
  }
  return make_stochastic(std::move(p));
}

bool entrywise_positive(const StochasticMatrix& p) {
  for (const auto& row : p.p)
    for (const auto& v : row)
      if (sgn(v) <= 0) return false;
  return true;
}

}  // namespace

TEST_CASE("sat_brute_force on the empty clause list") {
  Cnf cnf;
  cnf.num_vars = 3;
  SatResult r = sat_brute_force(cnf);
  REQUIRE(r.sat);
  CHECK(*r.assignment == std::vector<int>{1, 1, 1});
}

TEST_CASE("sat_brute_force finds a contradiction") {
  Cnf cnf;
  cnf.num_vars = 1;
  cnf.clauses = {cl(1, 1, 1), cl(-1, -1, -1)};
  CHECK_FALSE(sat_brute_force(cnf).sat);
}

TEST_CASE("sat_brute_force returns the lexicographically first model") {
  Cnf cnf;
  cnf.num_vars = 2;
  cnf.clauses = {cl(-2, -2, -2)};
  SatResult r = sat_brute_force(cnf);
  REQUIRE(r.sat);
  CHECK(*r.assignment == std::vector<int>{1, -1});

  cnf.clauses = {cl(-1, 2, 2), cl(-1, -2, -2)};
  r = sat_brute_force(cnf);
  REQUIRE(r.sat);
  CHECK(*r.assignment == std::vector<int>{-1, 1});
}

TEST_CASE("sat_brute_force enforces the variable cap") {
  Cnf cnf;
  cnf.num_vars = 25;
  CHECK_THROWS_AS(sat_brute_force(cnf), std::invalid_argument);
  CHECK_THROWS_AS(sat_brute_force(cnf, 10), std::invalid_argument);
  cnf.num_vars = 5;
  CHECK(sat_brute_force(cnf, 5).sat);
}

TEST_CASE("make_stochastic validates") {
  CHECK_THROWS_AS(make_stochastic({{Rat(1)}, {Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_stochastic({{rat(1, 2), Rat(0)}, {rat(1, 2), rat(2, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_stochastic({{rat(3, 2), Rat(1)}, {rat(-1, 2), Rat(0)}}),
                  std::invalid_argument);
  StochasticMatrix p = make_stochastic({{rat(1, 2), Rat(1)}, {rat(1, 2), Rat(0)}});
  CHECK(p.n == 2);
}

TEST_CASE("stochastic_embed of a permutation is the matrix-unit family") {
  std::vector<std::vector<Rat>> id(3, std::vector<Rat>(3, Rat(0)));
  for (size_t i = 0; i < 3; ++i) id[i][i] = 1;
  KrausFamily f = stochastic_embed(make_stochastic(id));
  REQUIRE(f.ops.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(f.ops[i].op == Mat::unit(3, i, i));
    CHECK(f.ops[i].weight == 1);
  }
  CHECK(verify_unital(f));
}

TEST_CASE("stochastic_embed acts as the matrix on diagonals") {
  StochasticMatrix p = make_stochastic({{rat(1, 3), Rat(1)}, {rat(2, 3), Rat(0)}});
  KrausFamily f = stochastic_embed(p);
  CHECK(verify_unital(f));

  Mat d(2, 2);
  d(0, 0) = GaussianRational(1);
  Mat out = apply(f, d);
  Mat expect(2, 2);
  expect(0, 0) = GaussianRational(rat(1, 3));
  expect(1, 1) = GaussianRational(rat(2, 3));
  CHECK(out == expect);
}

TEST_CASE("stochastic_embed is unital for random matrices") {
  Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    size_t n = 1 + static_cast<size_t>(t) % 5;
    KrausFamily f = stochastic_embed(random_sparse_stochastic(rng, n));
    CHECK(verify_unital(f));
  }
}

TEST_CASE("strong connectivity on hand graphs") {
  Digraph two_cycle{2, {{1}, {0}}};
  CHECK(strongly_connected(two_cycle));

  Digraph one_way{2, {{0, 1}, {}}};
  CHECK_FALSE(strongly_connected(one_way));

  Digraph loner{1, {{}}};
  CHECK(strongly_connected(loner));
}

TEST_CASE("period on hand graphs") {
  Digraph two_cycle{2, {{1}, {0}}};
  CHECK(period(two_cycle) == 2);

  Digraph with_loop{2, {{1, 0}, {0}}};
  CHECK(period(with_loop) == 1);

  Digraph three_cycle{3, {{1}, {2}, {0}}};
  CHECK(period(three_cycle) == 3);

  Digraph one_way{2, {{0, 1}, {}}};
  CHECK_THROWS_AS(period(one_way), std::invalid_argument);
}

TEST_CASE("classical power positivity on hand matrices") {
  StochasticMatrix half = make_stochastic({{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}});
  CHECK(classical_power_positivity(half));

  StochasticMatrix swap2 = make_stochastic({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK_FALSE(classical_power_positivity(swap2));

  StochasticMatrix lazy = make_stochastic({{rat(1, 2), Rat(1)}, {rat(1, 2), Rat(0)}});
  CHECK(classical_power_positivity(lazy));
}

TEST_CASE("period oracle agrees with power positivity on 500 random matrices") {
  Rng rng(99);
  for (int t = 0; t < 500; ++t) {
    size_t n = 1 + static_cast<size_t>(t) % 5;
    StochasticMatrix p;
    switch (t % 3) {
      case 0: p = random_sparse_stochastic(rng, n); break;
      case 1: p = random_permutation(rng, n); break;
      default: p = cycle_maybe_loop(rng, n); break;
    }
    Digraph g = digraph_of(p);
    bool primitive_by_graph = strongly_connected(g) && period(g) == 1;
    CHECK(classical_power_positivity(p) == primitive_by_graph);
  }
}

TEST_CASE("graph oracles agree with the span-based deciders") {
  Rng rng(123);
  for (int t = 0; t < 60; ++t) {
    size_t n = 1 + static_cast<size_t>(t) % 4;
    StochasticMatrix p;
    switch (t % 3) {
      case 0: p = random_sparse_stochastic(rng, n); break;
      case 1: p = random_permutation(rng, n); break;
      default: p = cycle_maybe_loop(rng, n); break;
    }
    KrausFamily f = stochastic_embed(p);
    Digraph g = digraph_of(p);
    bool sc = strongly_connected(g);
    CHECK(is_irreducible(f) == sc);
    bool primitive_by_graph = sc && period(g) == 1;
    CHECK(is_primitive(f).primitive == primitive_by_graph);
  }
}

TEST_CASE("classical strict positivity matches entrywise positivity") {
  Rng rng(7);
  StochasticMatrix half = make_stochastic({{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}});
  CHECK(check(stochastic_embed(half)).status == PosStatus::strictly_positive);

  std::vector<std::vector<Rat>> id(2, std::vector<Rat>(2, Rat(0)));
  id[0][0] = id[1][1] = 1;
  PositivityVerdict v = check(stochastic_embed(make_stochastic(id)));
  CHECK(v.status == PosStatus::not_strictly_positive);
  REQUIRE(v.witness.has_value());
  CHECK(verify_witness(stochastic_embed(make_stochastic(id)), *v.witness));

  for (int t = 0; t < 40; ++t) {
    size_t n = 2 + static_cast<size_t>(t) % 3;
    StochasticMatrix p = random_sparse_stochastic(rng, n);
    PositivityVerdict r = check(stochastic_embed(p));
    if (entrywise_positive(p)) {
      CHECK(r.status == PosStatus::strictly_positive);
    } else {
      CHECK(r.status == PosStatus::not_strictly_positive);
      REQUIRE(r.witness.has_value());
      CHECK(verify_witness(stochastic_embed(p), *r.witness));
    }
  }
}

TEST_CASE("lazy cycle is primitive with q = 2") {
  StochasticMatrix lazy = make_stochastic({{rat(1, 2), Rat(1)}, {rat(1, 2), Rat(0)}});
  PrimitivityReport rep = is_primitive(stochastic_embed(lazy));
  CHECK(rep.irreducible);
  CHECK(rep.primitive);
  CHECK(rep.wielandt_q == 2);
}
