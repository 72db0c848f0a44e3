#pragma once

#include <optional>
#include <vector>

#include "cpcheck/cnf.hpp"
#include "cpcheck/kraus.hpp"

namespace cpcheck {

// Exhaustive SAT check; returns the lexicographically first satisfying
// assignment with +1 ordered before -1, so the all-true assignment comes
// first.
struct SatResult {
  bool sat = false;
  std::optional<std::vector<int>> assignment;
};

SatResult sat_brute_force(const Cnf& cnf, int max_vars = 24);

struct StochasticMatrix {
  size_t n = 0;
  std::vector<std::vector<Rat>> p;  // p[i][j], columns sum to 1
};

StochasticMatrix make_stochastic(std::vector<std::vector<Rat>> p);

struct Digraph {
  size_t n = 0;
  std::vector<std::vector<size_t>> out;  // out[j] = targets of edges from j
};

// Edge j -> i wherever P_ij > 0; a column describes departures from a node.
Digraph digraph_of(const StochasticMatrix& p);

// Weighted matrix-unit family {(E_ij, P_ij) : P_ij > 0}, unital by column
// stochasticity with no square roots involved.
KrausFamily stochastic_embed(const StochasticMatrix& p);

bool strongly_connected(const Digraph& g);

// gcd of directed cycle lengths via BFS level differences.
size_t period(const Digraph& g);

// Classical primitivity: P^(n^2 - 2n + 2) entrywise positive, exactly.
bool classical_power_positivity(const StochasticMatrix& p);

}  // namespace cpcheck
