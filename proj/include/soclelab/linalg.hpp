#pragma once

#include <optional>
#include <vector>

#include "soclelab/field.hpp"

namespace soclelab {

using Vec = std::vector<Coeff>;

// Dense matrix over an exact field, row-major.
class DenseMatrix {
 public:
  DenseMatrix(Field f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, field_.zero()) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Coeff& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Coeff& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Vec apply(const Vec& x) const;  // matrix * column vector

  int rank() const;
  int nullity() const { return cols_ - rank(); }
  // Basis of {x : A x = 0}.
  std::vector<Vec> nullspace_basis() const;

  // Stacks blocks vertically; all must share column count and field.
  static DenseMatrix vstack(const std::vector<DenseMatrix>& blocks);

  bool commutes_with(const DenseMatrix& other) const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Coeff> a_;
};

// Incremental echelon basis of a row space, with enough bookkeeping to
// express members as combinations of the successfully inserted rows.
class RowSpace {
 public:
  RowSpace(Field f, int cols) : field_(std::move(f)), cols_(cols) {}

  // Inserts vec if independent of the current span; returns whether it was.
  bool insert(const Vec& vec);
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool contains(const Vec& vec) const;
  // Coordinates of vec with respect to the inserted independent rows, or
  // nullopt if vec is outside the span.
  std::optional<Vec> express(const Vec& vec) const;

 private:
  struct EchelonRow {
    Vec v;       // echelon vector, pivot entry 1
    Vec combo;   // expression of v in the inserted rows
    int pivot;
  };

  // Reduces vec in place; accumulates the multipliers used per echelon row.
  // Rows are applied in pivot-ascending order (each row is zero before its
  // pivot, so no earlier pivot can be repopulated).
  void reduce(Vec& vec, Vec* used) const;

  Field field_;
  int cols_;
  std::vector<EchelonRow> rows_;
  std::vector<int> by_pivot_;  // row indices sorted by pivot column
};

// dim(U + V) via stacked rank; dim(U ∩ V) = dim U + dim V - dim(U + V).
int subspace_intersection_dim(const Field& f, const std::vector<Vec>& u,
                              const std::vector<Vec>& v, int cols);

}  // namespace soclelab
