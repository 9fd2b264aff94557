#include "invsemi/linalg.hpp"

#include <algorithm>

#include "invsemi/errors.hpp"
#include "invsemi/kernels.hpp"

namespace invsemi {

DenseVector zero_vector(FieldSpec f, std::size_t dim) { return DenseVector(dim, Scalar::zero(f)); }

bool is_zero(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

EchelonBasis::EchelonBasis(FieldSpec f, std::size_t ambient_dim) : field_(f), dim_(ambient_dim) {}

DenseVector EchelonBasis::reduce(DenseVector v) const {
  if (v.size() != dim_) throw InvalidArgument("vector has wrong dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < dim_; ++j) {
      if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
  }
  return v;
}

bool EchelonBasis::contains(const DenseVector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(DenseVector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t j = p; j < dim_; ++j) {
      if (!v[j].is_zero()) row[j] -= c * v[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBasis::is_subspace_of(const EchelonBasis& other) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const DenseVector& r) { return other.contains(r); });
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

EchelonBasis span(FieldSpec f, std::vector<DenseVector> rows, std::size_t cols, bool parallel) {
  if (parallel) kernels::rref_parallel(rows, cols);
  else kernels::rref_serial(rows, cols);
  EchelonBasis out(f, cols);
  for (auto& r : rows) out.insert(std::move(r));
  return out;
}

EchelonBasis nullspace(FieldSpec f, std::vector<DenseVector> rows, std::size_t cols,
                       bool parallel) {
  auto pivots = parallel ? kernels::rref_parallel(rows, cols) : kernels::rref_serial(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  EchelonBasis out(f, cols);
  // One vector per free column: x_free = 1, x_pivot = -row[free].
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    DenseVector v = zero_vector(f, cols);
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace invsemi
