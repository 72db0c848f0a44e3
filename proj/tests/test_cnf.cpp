#include <doctest.h>

#include <stdexcept>

#include "cpcheck/cnf.hpp"
#include "cpcheck/oracles.hpp"

using namespace cpcheck;

namespace {

Clause cl(int a, int b, int c) {
  auto lit = [](int v) { return Literal{v < 0 ? -v : v, v < 0 ? -1 : 1}; };
  return {lit(a), lit(b), lit(c)};
}

}  // namespace

TEST_CASE("parse_dimacs basic instance") {
  Cnf cnf = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
  REQUIRE(cnf.num_vars == 3);
  REQUIRE(cnf.clauses.size() == 1);
  for (int k = 0; k < 3; ++k) {
    CHECK(cnf.clauses[0][static_cast<size_t>(k)].var == k + 1);
    CHECK(cnf.clauses[0][static_cast<size_t>(k)].sign == 1);
  }
}

TEST_CASE("parse_dimacs accepts comments, blank lines, and split clauses") {
  Cnf cnf = parse_dimacs("c header comment\n\np cnf 4 2\n1 -2\n3 0\nc middle\n-3 4 1 0\n");
  CHECK(cnf.num_vars == 4);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[0][0].var == 1);
  CHECK(cnf.clauses[0][1].var == 2);
  CHECK(cnf.clauses[0][1].sign == -1);
  CHECK(cnf.clauses[1][0].sign == -1);
}

TEST_CASE("normalization reorders a repeated leading variable") {
  Cnf cnf = parse_dimacs("p cnf 2 1\n1 -1 2 0\n");
  REQUIRE(cnf.clauses.size() == 1);
  const Clause& c = cnf.clauses[0];
  CHECK(c[0].var != c[1].var);
  CHECK(c[0].var == 1);
  CHECK(c[0].sign == 1);
  CHECK(c[1].var == 2);
  CHECK(c[2].var == 1);
  CHECK(c[2].sign == -1);
}

TEST_CASE("uniform clause expands over one fresh variable") {
  Cnf cnf = parse_dimacs("p cnf 1 1\n1 1 1 0\n");
  CHECK(cnf.num_vars == 2);
  REQUIRE(cnf.clauses.size() == 2);
  for (const auto& c : cnf.clauses) {
    CHECK(c[0].var == 1);
    CHECK(c[0].sign == 1);
    CHECK(c[1].var == 2);
    CHECK(c[2].var == 2);
    CHECK(c[1].sign == c[2].sign);
  }
  CHECK(cnf.clauses[0][1].sign != cnf.clauses[1][1].sign);

  // The rewrite forces the original literal: X1 = -1 falsifies one branch.
  CHECK(cnf_satisfied(cnf, {1, 1}));
  CHECK(cnf_satisfied(cnf, {1, -1}));
  CHECK_FALSE(cnf_satisfied(cnf, {-1, 1}));
  CHECK_FALSE(cnf_satisfied(cnf, {-1, -1}));
}

TEST_CASE("uniform clause rewrites share a single fresh variable") {
  Cnf in;
  in.num_vars = 2;
  in.clauses = {cl(1, 1, 1), cl(2, 2, 2)};
  Cnf out = normalize_cnf(in);
  CHECK(out.num_vars == 3);
  CHECK(out.clauses.size() == 4);
  for (const auto& c : out.clauses) CHECK(c[1].var == 3);
}

TEST_CASE("contradictory uniform clauses become unsatisfiable 3-clauses") {
  Cnf cnf = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  CHECK(cnf.num_vars == 2);
  CHECK(cnf.clauses.size() == 4);
  SatResult r = sat_brute_force(cnf);
  CHECK_FALSE(r.sat);
}

TEST_CASE("single-variable tautologies are dropped") {
  Cnf cnf = parse_dimacs("p cnf 1 1\n1 -1 1 0\n");
  CHECK(cnf.num_vars == 1);
  CHECK(cnf.clauses.empty());
}

TEST_CASE("normalization is equisatisfiable on all small instances") {
  // Every one-clause cnf over 2 variables, including the degenerate shapes.
  for (int a = -2; a <= 2; ++a) {
    if (a == 0) continue;
    for (int b = -2; b <= 2; ++b) {
      if (b == 0) continue;
      for (int c = -2; c <= 2; ++c) {
        if (c == 0) continue;
        Cnf in;
        in.num_vars = 2;
        in.clauses = {cl(a, b, c)};
        Cnf out = normalize_cnf(in);
        CHECK(sat_brute_force(in).sat == sat_brute_force(out).sat);
        for (const auto& cls : out.clauses) CHECK(cls[0].var != cls[1].var);
      }
    }
  }
}

TEST_CASE("parse_dimacs rejects malformed input") {
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 4 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 x 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p sat 2 1\n1 2 2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs(""), std::invalid_argument);
}

TEST_CASE("clause and cnf evaluation") {
  Clause c = cl(1, -2, 3);
  CHECK(clause_satisfied(c, {1, 1, -1}));
  CHECK(clause_satisfied(c, {-1, -1, -1}));
  CHECK_FALSE(clause_satisfied(c, {-1, 1, -1}));

  Cnf cnf;
  cnf.num_vars = 3;
  cnf.clauses = {cl(1, -2, 3), cl(-1, 2, 2)};
  CHECK(cnf_satisfied(cnf, {1, 1, 1}));
  CHECK_FALSE(cnf_satisfied(cnf, {1, -1, -1}));
  CHECK_THROWS_AS(cnf_satisfied(cnf, {1, 1}), std::invalid_argument);
}

TEST_CASE("to_dimacs round-trips through the parser") {
  Cnf cnf;
  cnf.num_vars = 4;
  cnf.clauses = {cl(1, -2, 4), cl(3, 4, -3), cl(-1, 2, 1)};
  cnf = normalize_cnf(cnf);
  Cnf back = parse_dimacs(to_dimacs(cnf));
  REQUIRE(back.num_vars == cnf.num_vars);
  REQUIRE(back.clauses.size() == cnf.clauses.size());
  for (size_t i = 0; i < cnf.clauses.size(); ++i)
    for (size_t k = 0; k < 3; ++k) {
      CHECK(back.clauses[i][k].var == cnf.clauses[i][k].var);
      CHECK(back.clauses[i][k].sign == cnf.clauses[i][k].sign);
    }
}

TEST_CASE("normalize_cnf validates literal ranges") {
  Cnf bad;
  bad.num_vars = 2;
  bad.clauses = {cl(1, 3, 2)};
  CHECK_THROWS_AS(normalize_cnf(bad), std::invalid_argument);
  bad.clauses = {{Literal{1, 1}, Literal{2, 0}, Literal{2, 1}}};
  CHECK_THROWS_AS(normalize_cnf(bad), std::invalid_argument);
}
