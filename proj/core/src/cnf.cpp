#include "cpcheck/cnf.hpp"

#include <sstream>
#include <stdexcept>

namespace cpcheck {

namespace {

void validate_literal(const Literal& l, int num_vars) {
  if (l.var < 1 || l.var > num_vars) throw std::invalid_argument("cnf: variable index out of range");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("cnf: literal sign must be +1 or -1");
}

}  // namespace

Cnf normalize_cnf(const Cnf& cnf) {
  for (const auto& c : cnf.clauses)
    for (const auto& l : c) validate_literal(l, cnf.num_vars);

  Cnf out;
  out.num_vars = cnf.num_vars;
  int fresh = 0;  // allocated on first single-variable non-tautological clause
  for (const auto& c : cnf.clauses) {
    bool one_var = c[0].var == c[1].var && c[1].var == c[2].var;
    if (one_var) {
      bool pos = false, neg = false;
      for (const auto& l : c) (l.sign > 0 ? pos : neg) = true;
      if (pos && neg) continue;  // always true, drop
      if (fresh == 0) fresh = ++out.num_vars;
      Literal l = c[0];
      out.clauses.push_back({l, Literal{fresh, 1}, Literal{fresh, 1}});
      out.clauses.push_back({l, Literal{fresh, -1}, Literal{fresh, -1}});
      continue;
    }
    Clause r = c;
    if (r[0].var == r[1].var) std::swap(r[1], r[2]);
    out.clauses.push_back(r);
  }
  return out;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int declared_vars = -1, declared_clauses = -1;
  std::vector<int> pending;
  Cnf cnf;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf")
        throw std::invalid_argument("dimacs: bad problem line");
      if (declared_vars < 0 || declared_clauses < 0)
        throw std::invalid_argument("dimacs: negative counts");
      cnf.num_vars = declared_vars;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (declared_vars < 0) throw std::invalid_argument("dimacs: clause before problem line");
      if (lit == 0) {
        if (pending.size() != 3) throw std::invalid_argument("dimacs: clause must have 3 literals");
        Clause c;
        for (size_t k = 0; k < 3; ++k) {
          c[k].var = std::abs(pending[k]);
          c[k].sign = pending[k] > 0 ? 1 : -1;
          validate_literal(c[k], declared_vars);
        }
        cnf.clauses.push_back(c);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!ls.eof()) throw std::invalid_argument("dimacs: non-integer token in clause");
  }
  if (declared_vars < 0) throw std::invalid_argument("dimacs: missing problem line");
  if (!pending.empty()) throw std::invalid_argument("dimacs: unterminated clause");
  if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
    throw std::invalid_argument("dimacs: clause count does not match header");
  return normalize_cnf(cnf);
}

bool clause_satisfied(const Clause& c, const std::vector<int>& assignment) {
  for (const auto& l : c) {
    if (assignment[static_cast<size_t>(l.var) - 1] == l.sign) return true;
  }
  return false;
}

bool cnf_satisfied(const Cnf& cnf, const std::vector<int>& assignment) {
  if (assignment.size() != static_cast<size_t>(cnf.num_vars))
    throw std::invalid_argument("cnf: assignment length mismatch");
  for (const auto& c : cnf.clauses)
    if (!clause_satisfied(c, assignment)) return false;
  return true;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c) out << l.sign * l.var << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace cpcheck
