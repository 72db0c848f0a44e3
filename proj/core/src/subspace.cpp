#include "cpcheck/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpcheck {

void RowSpace::reduce(Vec& row) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational& c = row[pivots_[r]];
    if (c.is_zero()) continue;
    GaussianRational f = c;  // row[pivot] changes during the loop below
    const Vec& basis_row = rows_[r];
    for (size_t j = pivots_[r]; j < ambient_; ++j) {
      if (basis_row[j].is_zero()) continue;
      row[j] -= f * basis_row[j];
    }
  }
}

bool RowSpace::insert(Vec row) {
  if (row.size() != ambient_) throw std::invalid_argument("RowSpace: bad row length");
  reduce(row);
  size_t pivot = ambient_;
  for (size_t j = 0; j < ambient_; ++j) {
    if (!row[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  GaussianRational inv = row[pivot];
  for (size_t j = pivot; j < ambient_; ++j) {
    if (row[j].is_zero()) continue;
    row[j] /= inv;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational& c = rows_[r][pivot];
    if (c.is_zero()) continue;
    GaussianRational f = c;
    for (size_t j = pivot; j < ambient_; ++j) {
      if (row[j].is_zero()) continue;
      rows_[r][j] -= f * row[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool RowSpace::contains(Vec row) const {
  if (row.size() != ambient_) throw std::invalid_argument("RowSpace: bad row length");
  reduce(row);
  for (const auto& z : row)
    if (!z.is_zero()) return false;
  return true;
}

std::string RowSpace::key() const {
  std::string k = std::to_string(ambient_) + ";" + std::to_string(rows_.size());
  for (const auto& row : rows_) {
    k += ";";
    for (const auto& z : row) {
      k += entry_to_string(z);
      k += ",";
    }
  }
  return k;
}

std::vector<Vec> RowSpace::nullspace() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < ambient_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ambient_);
    v[f] = GaussianRational(1);
    for (size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Mat> MatrixSubspace::basis() const {
  std::vector<Mat> out;
  out.reserve(rs_.dim());
  for (const auto& row : rs_.rows()) {
    Mat m(n_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) m(i, j) = row[i * n_ + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> hs_orthocomplement(const std::vector<Mat>& gens, size_t n) {
  RowSpace rs(n * n);
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("hs_orthocomplement: generator shape mismatch");
    Vec row = g.vec();
    for (auto& z : row) z = z.conj();
    rs.insert(std::move(row));
  }
  std::vector<Vec> null = rs.nullspace();
  std::vector<Mat> out;
  out.reserve(null.size());
  for (const auto& v : null) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace cpcheck
