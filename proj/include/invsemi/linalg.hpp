#pragma once

#include <cstddef>
#include <vector>

#include "invsemi/field.hpp"

namespace invsemi {

using DenseVector = std::vector<Scalar>;

DenseVector zero_vector(FieldSpec f, std::size_t dim);
bool is_zero(const DenseVector& v);

/// A subspace kept in reduced row echelon form: each row has a leading 1 in
/// its pivot column, the pivot columns are increasing, and every other row is
/// zero there. The form is unique, so two bases span the same subspace iff
/// they compare equal.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec f, std::size_t ambient_dim);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<DenseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(DenseVector v);
  /// v minus its projection along the pivot columns; zero iff v is in the span.
  DenseVector reduce(DenseVector v) const;
  bool contains(const DenseVector& v) const;
  bool is_subspace_of(const EchelonBasis& other) const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<DenseVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : Ax = 0} of the matrix with the given rows, in echelon form.
EchelonBasis nullspace(FieldSpec f, std::vector<DenseVector> rows, std::size_t cols,
                       bool parallel = true);

/// Span of the given vectors, via one batch row reduction.
EchelonBasis span(FieldSpec f, std::vector<DenseVector> rows, std::size_t cols,
                  bool parallel = true);

}  // namespace invsemi
