#pragma once

#include <string>
#include <vector>

#include "cpcheck/matrix.hpp"

namespace cpcheck {

// Incremental reduced row echelon form over the Gaussian rationals.
// Rows are kept fully reduced (pivots 1, pivot columns cleared elsewhere,
// rows ordered by pivot), so two equal subspaces have identical row lists.
class RowSpace {
 public:
  explicit RowSpace(size_t ambient) : ambient_(ambient) {}

  // Returns true if the row enlarged the span.
  bool insert(Vec row);
  bool contains(Vec row) const;

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Canonical serialization; equal spans give equal keys.
  std::string key() const;

  // Basis of {v : r . v = 0 for every basis row r}, plain (unconjugated) dot.
  std::vector<Vec> nullspace() const;

 private:
  // Reduces row against the current basis in place.
  void reduce(Vec& row) const;

  size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

// Span of n-by-n matrices, flattened row-major into a RowSpace.
class MatrixSubspace {
 public:
  explicit MatrixSubspace(size_t n) : n_(n), rs_(n * n) {}

  bool insert(const Mat& m) { return rs_.insert(m.vec()); }
  bool contains(const Mat& m) const { return rs_.contains(m.vec()); }

  size_t side() const { return n_; }
  size_t dim() const { return rs_.dim(); }
  bool full() const { return rs_.full(); }
  std::string key() const { return rs_.key(); }

  // Canonical reduced basis, one matrix per RREF row.
  std::vector<Mat> basis() const;

 private:
  size_t n_;
  RowSpace rs_;
};

// Basis of the Hilbert-Schmidt orthogonal complement of span(gens) inside
// the n-by-n matrices: all A with tr(B^* A) = 0 for every generator B.
std::vector<Mat> hs_orthocomplement(const std::vector<Mat>& gens, size_t n);

}  // namespace cpcheck
