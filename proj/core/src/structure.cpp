#include "cpcheck/structure.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace cpcheck {

ClosureResult algebra_closure(const KrausFamily& psi) {
  if (psi.ops.empty()) throw std::invalid_argument("algebra_closure: empty family");
  size_t n = psi.n;
  MatrixSubspace span(n);
  // Products whose insertion enlarged the span last round; multiplying only
  // these is enough, since V D_k = V D_{k-1} + V new and V D_{k-1} is already
  // inside D_k.
  std::vector<Mat> fresh;
  for (const auto& [v, w] : psi.ops) {
    if (span.insert(v)) fresh.push_back(v);
  }
  size_t p = 1;
  while (!fresh.empty()) {
    // A full span cannot grow, so it has already stabilized.
    if (span.full()) break;
    std::vector<Mat> next;
    for (const auto& [v, w] : psi.ops) {
      for (const auto& m : fresh) {
        Mat prod = v * m;
        if (span.insert(prod)) next.push_back(std::move(prod));
      }
    }
    if (next.empty()) break;
    fresh = std::move(next);
    ++p;
  }
  return ClosureResult{std::move(span), p};
}

bool is_irreducible(const KrausFamily& psi) {
  ClosureResult c = algebra_closure(psi);
  return c.algebra.full();
}

namespace {

MatrixSubspace span_of_ops(const KrausFamily& psi) {
  MatrixSubspace s(psi.n);
  for (const auto& [v, w] : psi.ops) s.insert(v);
  return s;
}

MatrixSubspace next_product_span(const KrausFamily& psi, const MatrixSubspace& s) {
  MatrixSubspace out(psi.n);
  for (const auto& m : s.basis()) {
    for (const auto& [v, w] : psi.ops) out.insert(v * m);
  }
  return out;
}

}  // namespace

MatrixSubspace product_span(const KrausFamily& psi, size_t k) {
  if (k < 1) throw std::invalid_argument("product_span: k must be at least 1");
  if (psi.ops.empty()) throw std::invalid_argument("product_span: empty family");
  MatrixSubspace s = span_of_ops(psi);
  for (size_t step = 1; step < k; ++step) s = next_product_span(psi, s);
  return s;
}

size_t wielandt_bound(size_t n, size_t m) {
  long long n2 = static_cast<long long>(n) * static_cast<long long>(n);
  long long raw = (n2 - static_cast<long long>(m) + 1) * n2;
  if (raw < n2) raw = n2;
  return static_cast<size_t>(raw);
}

PrimitivityReport is_primitive(const KrausFamily& psi) {
  PrimitivityReport rep;
  rep.bound = wielandt_bound(psi.n, psi.ops.size());
  ClosureResult c = algebra_closure(psi);
  rep.closure_depth = c.p;
  rep.irreducible = c.algebra.full();
  if (!rep.irreducible) return rep;

  size_t n2 = psi.n * psi.n;
  MatrixSubspace s = span_of_ops(psi);
  std::map<std::string, size_t> seen;
  for (size_t k = 1; k <= rep.bound; ++k) {
    if (s.dim() == n2) {
      rep.primitive = true;
      rep.wielandt_q = k;
      return rep;
    }
    // S_{k+1} depends only on S_k, so a repeated subspace closes a cycle
    // that can never reach full dimension.
    auto [it, inserted] = seen.emplace(s.key(), k);
    if (!inserted) return rep;
    s = next_product_span(psi, s);
  }
  return rep;
}

}  // namespace cpcheck
