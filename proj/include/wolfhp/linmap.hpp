#pragma once

#include <utility>
#include <vector>

#include "wolfhp/rational.hpp"

namespace wolfhp {

/// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b);  // a + s*b
SparseVec sparse_scale(const SparseVec& a, const Rational& s);

/// Exact linear map between coordinate spaces, stored row-sparse.
/// Columns index the domain, rows the codomain (column-vector convention).
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<std::size_t>(rows)) {}
  static LinearMap identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long nnz() const;

  /// Accumulates (duplicate adds combine; zeros dropped lazily by normalize).
  void add_entry(int i, int j, const Rational& v);
  Rational entry(int i, int j) const;
  const SparseVec& row(int i) const { return row_[static_cast<std::size_t>(i)]; }
  void set_row(int i, SparseVec r) { row_[static_cast<std::size_t>(i)] = std::move(r); }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  SparseVec apply_sparse(const SparseVec& x) const;

  friend LinearMap mul(const LinearMap& a, const LinearMap& b);
  friend LinearMap kron(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b);

  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> row_;
};

/// Basis of a subspace of a coordinate space, stored as sparse columns.
/// Bases produced by kernel() are canonical (reduced row echelon form with
/// unit free coordinates), hence deterministic.
struct SubspaceBasis {
  int ambient = 0;
  std::vector<SparseVec> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
  /// ambient x dim matrix whose columns are the basis vectors.
  LinearMap inclusion() const;
};

/// Row echelon data for M. Pivoting is deterministic: for each column in
/// increasing order, the first surviving row (in original row order) that
/// leads there becomes the pivot.
struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;          // increasing
  std::vector<SparseVec> pivot_rows;    // RREF rows, leading 1, one per pivot col
  std::vector<SparseVec> pivot_hist;    // matching rows of the transform E (EM = R)
};

Echelon row_echelon(const LinearMap& m, bool with_transform = false);

int rank(const LinearMap& m);
SubspaceBasis kernel(const LinearMap& m);

/// S with M*S*M = M: maps each image vector of the pivot columns back to
/// that column, zero on a complement of the image.
LinearMap partial_inverse(const LinearMap& m);

}  // namespace wolfhp
