#pragma once

#include <array>
#include <string>
#include <vector>

namespace cpcheck {

struct Literal {
  int var = 0;   // 1-based
  int sign = 1;  // +1 plain, -1 negated
};

using Clause = std::array<Literal, 3>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// Enforces the clause shape downstream construction relies on: the first two
// literals of every clause use distinct variables. Clauses on a single
// variable are rewritten: tautologies are dropped, and a uniform clause
// (l v l v l) becomes (l v Y v Y) and (l v -Y v -Y) over one fresh variable Y
// shared by all such rewrites, which forces l and keeps satisfiability
// unchanged.
Cnf normalize_cnf(const Cnf& cnf);

// DIMACS text with exactly 3 literals per clause; the result is normalized.
Cnf parse_dimacs(const std::string& text);

bool clause_satisfied(const Clause& c, const std::vector<int>& assignment);
bool cnf_satisfied(const Cnf& cnf, const std::vector<int>& assignment);

std::string to_dimacs(const Cnf& cnf);

}  // namespace cpcheck
