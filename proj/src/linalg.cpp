#include "soclelab/linalg.hpp"

#include <stdexcept>

namespace soclelab {

Vec DenseMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("matrix/vector size mismatch");
  Vec y(rows_, field_.zero());
  for (int i = 0; i < rows_; ++i) {
    Coeff acc = field_.zero();
    for (int j = 0; j < cols_; ++j) {
      if (!field_.is_zero(at(i, j)) && !field_.is_zero(x[j]))
        acc = field_.add(acc, field_.mul(at(i, j), x[j]));
    }
    y[i] = acc;
  }
  return y;
}

int DenseMatrix::rank() const {
  RowSpace space(field_, cols_);
  Vec row(cols_, field_.zero());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) row[j] = at(i, j);
    space.insert(row);
  }
  return space.dim();
}

std::vector<Vec> DenseMatrix::nullspace_basis() const {
  // Gauss-Jordan to reduced row echelon form, sweeping columns left to right.
  std::vector<Vec> work;
  work.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    Vec row(cols_);
    for (int j = 0; j < cols_; ++j) row[j] = at(i, j);
    work.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int col = 0; col < cols_ && r < work.size(); ++col) {
    size_t sel = r;
    while (sel < work.size() && field_.is_zero(work[sel][col])) ++sel;
    if (sel == work.size()) continue;
    std::swap(work[r], work[sel]);
    Coeff inv = field_.inv(work[r][col]);
    for (int j = col; j < cols_; ++j)
      work[r][j] = field_.mul(work[r][j], inv);
    for (size_t i = 0; i < work.size(); ++i) {
      if (i == r || field_.is_zero(work[i][col])) continue;
      Coeff c = work[i][col];
      for (int j = col; j < cols_; ++j)
        work[i][j] = field_.sub(work[i][j], field_.mul(c, work[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivot_col) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols_, field_.zero());
    x[free] = field_.one();
    for (size_t k = 0; k < pivot_col.size(); ++k)
      x[pivot_col[k]] = field_.neg(work[k][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

DenseMatrix DenseMatrix::vstack(const std::vector<DenseMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  int total = 0;
  for (const DenseMatrix& b : blocks) {
    if (b.cols() != blocks[0].cols())
      throw std::invalid_argument("vstack column mismatch");
    total += b.rows();
  }
  DenseMatrix out(blocks[0].field(), total, blocks[0].cols());
  int r = 0;
  for (const DenseMatrix& b : blocks)
    for (int i = 0; i < b.rows(); ++i, ++r)
      for (int j = 0; j < b.cols(); ++j) out.at(r, j) = b.at(i, j);
  return out;
}

bool DenseMatrix::commutes_with(const DenseMatrix& other) const {
  if (rows_ != cols_ || other.rows_ != other.cols_ || cols_ != other.cols_)
    throw std::invalid_argument("commutator needs equal square matrices");
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      Coeff ab = field_.zero(), ba = field_.zero();
      for (int k = 0; k < cols_; ++k) {
        ab = field_.add(ab, field_.mul(at(i, k), other.at(k, j)));
        ba = field_.add(ba, field_.mul(other.at(i, k), at(k, j)));
      }
      if (ab != ba) return false;
    }
  return true;
}

void RowSpace::reduce(Vec& vec, Vec* used) const {
  for (int k : by_pivot_) {
    const Coeff& c = vec[rows_[k].pivot];
    if (field_.is_zero(c)) continue;
    if (used) (*used)[k] = c;
    for (int j = rows_[k].pivot; j < cols_; ++j)
      vec[j] = field_.sub(vec[j], field_.mul(c, rows_[k].v[j]));
  }
}

bool RowSpace::insert(const Vec& vec) {
  if (static_cast<int>(vec.size()) != cols_)
    throw std::invalid_argument("row length mismatch");
  Vec w = vec;
  Vec used(rows_.size(), field_.zero());
  reduce(w, &used);
  int p = -1;
  for (int j = 0; j < cols_; ++j)
    if (!field_.is_zero(w[j])) {
      p = j;
      break;
    }
  if (p < 0) return false;
  // combo tracks w = inserted_new - sum used_k * rows_k in original terms.
  int n_inserted = static_cast<int>(rows_.size());
  Vec combo(n_inserted + 1, field_.zero());
  combo[n_inserted] = field_.one();
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (field_.is_zero(used[k])) continue;
    for (size_t t = 0; t < rows_[k].combo.size(); ++t)
      combo[t] = field_.sub(combo[t], field_.mul(used[k], rows_[k].combo[t]));
  }
  Coeff inv = field_.inv(w[p]);
  for (int j = p; j < cols_; ++j) w[j] = field_.mul(w[j], inv);
  for (Coeff& c : combo) c = field_.mul(c, inv);
  // Pad earlier combos so every row's combo has the same length.
  for (EchelonRow& r : rows_) r.combo.resize(n_inserted + 1, field_.zero());
  rows_.push_back(EchelonRow{std::move(w), std::move(combo), p});
  auto it = by_pivot_.begin();
  while (it != by_pivot_.end() && rows_[*it].pivot < p) ++it;
  by_pivot_.insert(it, n_inserted);
  return true;
}

bool RowSpace::contains(const Vec& vec) const {
  Vec w = vec;
  reduce(w, nullptr);
  for (const Coeff& c : w)
    if (!field_.is_zero(c)) return false;
  return true;
}

std::optional<Vec> RowSpace::express(const Vec& vec) const {
  Vec w = vec;
  Vec used(rows_.size(), field_.zero());
  reduce(w, &used);
  for (const Coeff& c : w)
    if (!field_.is_zero(c)) return std::nullopt;
  Vec coords(dim(), field_.zero());
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (field_.is_zero(used[k])) continue;
    for (size_t t = 0; t < rows_[k].combo.size(); ++t)
      coords[t] = field_.add(coords[t], field_.mul(used[k], rows_[k].combo[t]));
  }
  return coords;
}

int subspace_intersection_dim(const Field& f, const std::vector<Vec>& u,
                              const std::vector<Vec>& v, int cols) {
  RowSpace su(f, cols), sv(f, cols), sum(f, cols);
  for (const Vec& x : u) {
    su.insert(x);
    sum.insert(x);
  }
  for (const Vec& x : v) {
    sv.insert(x);
    sum.insert(x);
  }
  return su.dim() + sv.dim() - sum.dim();
}

}  // namespace soclelab
