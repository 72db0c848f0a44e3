#include "cpcheck/oracles.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace cpcheck {

SatResult sat_brute_force(const Cnf& cnf, int max_vars) {
  if (cnf.num_vars > max_vars) throw std::invalid_argument("sat_brute_force: too many variables");
  int n = cnf.num_vars;
  std::vector<int> assignment(static_cast<size_t>(n));
  for (unsigned long c = 0; c < (1ul << n); ++c) {
    // Bit (n - v) drives variable v, so the last variable varies fastest and
    // assignments appear in lexicographic order starting from all-true.
    for (int v = 1; v <= n; ++v)
      assignment[static_cast<size_t>(v) - 1] = (c >> (n - v)) & 1ul ? -1 : 1;
    if (cnf_satisfied(cnf, assignment)) return {true, assignment};
  }
  return {false, std::nullopt};
}

StochasticMatrix make_stochastic(std::vector<std::vector<Rat>> p) {
  size_t n = p.size();
  for (const auto& row : p)
    if (row.size() != n) throw std::invalid_argument("stochastic: matrix must be square");
  for (size_t j = 0; j < n; ++j) {
    Rat sum(0);
    for (size_t i = 0; i < n; ++i) {
      if (sgn(p[i][j]) < 0) throw std::invalid_argument("stochastic: negative entry");
      sum += p[i][j];
    }
    if (sum != 1) throw std::invalid_argument("stochastic: column does not sum to 1");
  }
  return StochasticMatrix{n, std::move(p)};
}

Digraph digraph_of(const StochasticMatrix& p) {
  Digraph g{p.n, std::vector<std::vector<size_t>>(p.n)};
  for (size_t j = 0; j < p.n; ++j)
    for (size_t i = 0; i < p.n; ++i)
      if (sgn(p.p[i][j]) > 0) g.out[j].push_back(i);
  return g;
}

KrausFamily stochastic_embed(const StochasticMatrix& p) {
  std::vector<WeightedOp> ops;
  for (size_t i = 0; i < p.n; ++i)
    for (size_t j = 0; j < p.n; ++j)
      if (sgn(p.p[i][j]) > 0) ops.push_back({Mat::unit(p.n, i, j), p.p[i][j]});
  return make_family(p.n, std::move(ops));
}

namespace {

std::vector<bool> reachable(const Digraph& g, size_t start, bool reversed) {
  std::vector<std::vector<size_t>> adj;
  const std::vector<std::vector<size_t>>* edges = &g.out;
  if (reversed) {
    adj.assign(g.n, {});
    for (size_t u = 0; u < g.n; ++u)
      for (size_t v : g.out[u]) adj[v].push_back(u);
    edges = &adj;
  }
  std::vector<bool> seen(g.n, false);
  std::deque<size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t v : (*edges)[u])
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
  }
  return seen;
}

}  // namespace

bool strongly_connected(const Digraph& g) {
  if (g.n == 0) return true;
  for (bool reversed : {false, true}) {
    auto seen = reachable(g, 0, reversed);
    for (bool s : seen)
      if (!s) return false;
  }
  return true;
}

size_t period(const Digraph& g) {
  if (!strongly_connected(g)) throw std::invalid_argument("period: graph not strongly connected");
  std::vector<long> level(g.n, -1);
  std::deque<size_t> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t v : g.out[u])
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
  }
  size_t d = 0;
  for (size_t u = 0; u < g.n; ++u)
    for (size_t v : g.out[u]) {
      long diff = level[u] + 1 - level[v];
      d = std::gcd(d, static_cast<size_t>(diff < 0 ? -diff : diff));
    }
  return d;
}

bool classical_power_positivity(const StochasticMatrix& p) {
  size_t n = p.n;
  if (n == 0) return true;
  size_t e = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<Rat>> pow(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) pow[i][i] = 1;
  for (size_t step = 0; step < e; ++step) {
    std::vector<std::vector<Rat>> next(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (sgn(pow[i][k]) == 0) continue;
        for (size_t j = 0; j < n; ++j) next[i][j] += pow[i][k] * p.p[k][j];
      }
    pow = std::move(next);
  }
  for (const auto& row : pow)
    for (const auto& v : row)
      if (sgn(v) <= 0) return false;
  return true;
}

}  // namespace cpcheck
