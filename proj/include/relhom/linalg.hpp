#pragma once

#include <map>
#include <optional>
#include <vector>

#include "relhom/scalar.hpp"

namespace relhom {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, Field f);
Vec unit_vec(int n, int i, Field f);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

/// Dense matrix over an exact field, row-major. All operations are exact and
/// deterministic (leftmost pivot, topmost row).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, Field f);

  static Matrix identity(int n, Field f);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols, Field f);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return f_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;

  /// [this | o] side by side (equal row counts).
  Matrix hstack(const Matrix& o) const;
  /// this on top of o (equal column counts).
  Matrix vstack(const Matrix& o) const;

 private:
  int rows_, cols_;
  Field f_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix r;
  std::vector<int> pivots;
};

/// Unique reduced row-echelon form with its pivot columns.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/// Canonical basis (rref rows) of the right kernel {x : m x = 0}.
Matrix kernel_basis_matrix(const Matrix& m);

/// Some x with m x = b, free variables set to zero, or nullopt if inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);
/// Columnwise solve m X = b; nullopt if any column is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of K^n in canonical form: basis rows are the rref of any
/// spanning set, so equal subspaces compare equal as matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(int ambient, Field f);
  static Subspace full(int ambient, Field f);
  static Subspace span_rows(const Matrix& rows);
  static Subspace span(const std::vector<Vec>& vectors, int ambient, Field f);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residue of v after eliminating pivot coordinates against the basis.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the basis rows, when v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

 private:
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// Quotient K^n / killed with a fixed projection/section pair. The quotient
/// coordinates are the non-pivot coordinates of the killed subspace.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(int ambient, Subspace killed);

  int ambient_dim() const { return ambient_; }
  int dim() const { return proj_.rows(); }
  const Subspace& killed() const { return killed_; }
  const Matrix& projection() const { return proj_; }
  const Matrix& section() const { return sect_; }

  Vec project(const Vec& v) const { return proj_ * v; }
  Vec lift(const Vec& q) const { return sect_ * q; }

 private:
  int ambient_ = 0;
  Subspace killed_;
  Matrix proj_, sect_;
};

// ---------------------------------------------------------------------------
// Sparse vectors and column-sparse linear maps. Used where bar-resolution
// terms grow to thousands of dimensions and dense storage is not an option.

struct SpEntry {
  int idx;
  Scalar c;
};
/// Entries sorted by strictly increasing idx, all coefficients nonzero.
using SparseVec = std::vector<SpEntry>;

namespace sp {
SparseVec from_dense(const Vec& v);
Vec to_dense(const SparseVec& v, int dim, Field f);
SparseVec unit(int i, Field f);
SparseVec scaled(const SparseVec& v, const Scalar& c);
SparseVec add(const SparseVec& a, const SparseVec& b);
/// acc += c * v
void axpy(SparseVec& acc, const Scalar& c, const SparseVec& v);
bool is_zero(const SparseVec& v);
}  // namespace sp

/// Column-sparse linear map K^cols -> K^rows.
class LinMap {
 public:
  LinMap() : rows_(0), cols_(0) {}
  LinMap(int rows, int cols, Field f) : rows_(rows), cols_(cols), f_(f), col_(cols) {}

  static LinMap identity(int n, Field f);
  static LinMap from_matrix(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return f_; }

  void set_col(int j, SparseVec v) { col_[j] = std::move(v); }
  const SparseVec& column(int j) const { return col_[j]; }

  SparseVec apply(const SparseVec& v) const;
  Vec apply_dense(const Vec& v) const;
  /// this ∘ o
  LinMap compose(const LinMap& o) const;
  LinMap plus(const LinMap& o) const;
  LinMap scaled(const Scalar& c) const;

  bool is_zero() const;
  bool is_identity() const;
  Matrix to_matrix() const;
  size_t nnz() const;

 private:
  int rows_, cols_;
  Field f_;
  std::vector<SparseVec> col_;
};

/// Incremental row-echelon structure over sparse vectors: supports rank
/// growth queries and reduction without materialising dense matrices.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(int ambient, Field f) : ambient_(ambient), f_(f) {}

  /// Reduces v against the current rows; if a nonzero residue remains it is
  /// added as a new row. Returns true when the rank grew.
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return sp::is_zero(reduce(v)); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }

  /// Canonical subspace (performs full back-elimination; dense in ambient).
  Subspace to_subspace() const;
  /// Pivot columns in increasing order.
  std::vector<int> pivot_columns() const;

 private:
  int ambient_;
  Field f_;
  std::map<int, SparseVec> rows_;  // pivot index -> row with leading 1 there
};

}  // namespace relhom
