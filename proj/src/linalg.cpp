#include "relhom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace relhom {

Vec zero_vec(int n, Field f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(int n, int i, Field f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), f_(f),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, Field f) {
  Matrix m(static_cast<int>(rows.size()), cols, f);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows, Field f) {
  Matrix m(rows, static_cast<int>(cols.size()), f);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_, Scalar::zero(f_));
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_, Scalar::zero(f_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, f_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(rows_, Scalar::zero(f_));
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& x = at(i, j);
      if (!x.is_zero()) r[i] += x * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, f_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix r(rows_, cols_ + o.cols_, f_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix r(rows_ + o.rows_, cols_, f_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

RrefResult rref(const Matrix& m) {
  Matrix r(m);
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Scalar inv = r.at(lead, col).inverse();
    for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      Scalar factor = r.at(i, col);
      for (int j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel_basis_matrix(const Matrix& m) {
  auto [r, pivots] = rref(m);
  Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(m.cols(), f);
    v[j] = Scalar::one(f);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), j);
    basis.push_back(std::move(v));
  }
  // Canonicalize so equal kernels always produce identical matrices.
  Matrix b = Matrix::from_rows(basis, m.cols(), f);
  return rref(b).r;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  Matrix aug = m.hstack(Matrix::from_cols({b}, m.rows(), m.field()));
  auto [r, pivots] = rref(aug);
  for (int p : pivots)
    if (p == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols(), m.field());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(static_cast<int>(i), m.cols());
  return x;
}

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
  Matrix aug = m.hstack(b);
  auto [r, pivots] = rref(aug);
  for (int p : pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), b.cols(), m.field());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(static_cast<int>(i), m.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_linear(m, Matrix::identity(m.rows(), m.field()));
  if (!x) return std::nullopt;
  if (!((m * *x).is_identity())) return std::nullopt;
  return x;
}

Subspace Subspace::zero(int ambient, Field f) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient, f);
  return s;
}

Subspace Subspace::full(int ambient, Field f) {
  return span_rows(Matrix::identity(ambient, f));
}

Subspace Subspace::span_rows(const Matrix& rows) {
  auto [r, pivots] = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.pivots_ = pivots;
  Matrix b(static_cast<int>(pivots.size()), rows.cols(), rows.field());
  for (size_t i = 0; i < pivots.size(); ++i) b.set_row(static_cast<int>(i), r.row(static_cast<int>(i)));
  s.basis_ = std::move(b);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient, Field f) {
  return span_rows(Matrix::from_rows(vectors, ambient, f));
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r(v);
  for (int i = 0; i < basis_.rows(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar factor = c;  // basis pivot entries are 1
    for (int j = 0; j < ambient_; ++j) r[j] -= factor * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec coords(basis_.rows(), Scalar::zero(basis_.field()));
  Vec r(v);
  for (int i = 0; i < basis_.rows(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    coords[i] = c;
    for (int j = 0; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("subspace ambient mismatch");
  return span_rows(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("subspace ambient mismatch");
  // x in both spans: x = a^T basis = b^T o.basis; kernel of [basis^T | -o.basis^T].
  if (dim() == 0 || o.dim() == 0) return zero(ambient_, basis_.field());
  Matrix stacked = basis_.transpose().hstack(o.basis_.transpose().scaled(-Scalar::one(basis_.field())));
  Matrix ker = kernel_basis_matrix(stacked);
  std::vector<Vec> vecs;
  for (int i = 0; i < ker.rows(); ++i) {
    Vec a(dim(), Scalar::zero(basis_.field()));
    for (int j = 0; j < dim(); ++j) a[j] = ker.at(i, j);
    Vec x = zero_vec(ambient_, basis_.field());
    for (int j = 0; j < dim(); ++j)
      if (!a[j].is_zero())
        for (int k = 0; k < ambient_; ++k) x[k] += a[j] * basis_.at(j, k);
    vecs.push_back(std::move(x));
  }
  return span(vecs, ambient_, basis_.field());
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

QuotientSpace::QuotientSpace(int ambient, Subspace killed)
    : ambient_(ambient), killed_(std::move(killed)) {
  if (killed_.ambient_dim() != ambient ) throw std::invalid_argument("quotient: ambient mismatch");
  Field f = killed_.field();
  std::vector<bool> is_pivot(ambient, false);
  for (int p : killed_.pivots()) is_pivot[p] = true;
  std::vector<int> complement;
  for (int j = 0; j < ambient; ++j)
    if (!is_pivot[j]) complement.push_back(j);
  int q = static_cast<int>(complement.size());
  sect_ = Matrix(ambient, q, f);
  for (int k = 0; k < q; ++k) sect_.at(complement[k], k) = Scalar::one(f);
  proj_ = Matrix(q, ambient, f);
  for (int j = 0; j < ambient; ++j) {
    Vec res = killed_.reduce(unit_vec(ambient, j, f));
    for (int k = 0; k < q; ++k) proj_.at(k, j) = res[complement[k]];
  }
}

// --- sparse ----------------------------------------------------------------

namespace sp {

SparseVec from_dense(const Vec& v) {
  SparseVec r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({static_cast<int>(i), v[i]});
  return r;
}

Vec to_dense(const SparseVec& v, int dim, Field f) {
  Vec r = zero_vec(dim, f);
  for (const auto& e : v) r[e.idx] = e.c;
  return r;
}

SparseVec unit(int i, Field f) { return {{i, Scalar::one(f)}}; }

SparseVec scaled(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec r(v);
  for (auto& e : r) e.c *= c;
  return r;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].idx < a[i].idx) {
      r.push_back(b[j++]);
    } else {
      Scalar c = a[i].c + b[j].c;
      if (!c.is_zero()) r.push_back({a[i].idx, c});
      ++i;
      ++j;
    }
  }
  return r;
}

void axpy(SparseVec& acc, const Scalar& c, const SparseVec& v) {
  if (c.is_zero() || v.empty()) return;
  acc = add(acc, scaled(v, c));
}

bool is_zero(const SparseVec& v) { return v.empty(); }

}  // namespace sp

// --- LinMap ----------------------------------------------------------------

LinMap LinMap::identity(int n, Field f) {
  LinMap m(n, n, f);
  for (int j = 0; j < n; ++j) m.col_[j] = sp::unit(j, f);
  return m;
}

LinMap LinMap::from_matrix(const Matrix& m) {
  LinMap r(m.rows(), m.cols(), m.field());
  for (int j = 0; j < m.cols(); ++j) r.col_[j] = sp::from_dense(m.col(j));
  return r;
}

SparseVec LinMap::apply(const SparseVec& v) const {
  SparseVec r;
  for (const auto& e : v) sp::axpy(r, e.c, col_[e.idx]);
  return r;
}

Vec LinMap::apply_dense(const Vec& v) const {
  Vec r = zero_vec(rows_, f_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& e : col_[j]) r[e.idx] += e.c * v[j];
  }
  return r;
}

LinMap LinMap::compose(const LinMap& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("LinMap compose shape mismatch");
  LinMap r(rows_, o.cols_, f_);
  for (int j = 0; j < o.cols_; ++j) r.col_[j] = apply(o.col_[j]);
  return r;
}

LinMap LinMap::plus(const LinMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("LinMap add shape mismatch");
  LinMap r(rows_, cols_, f_);
  for (int j = 0; j < cols_; ++j) r.col_[j] = sp::add(col_[j], o.col_[j]);
  return r;
}

LinMap LinMap::scaled(const Scalar& c) const {
  LinMap r(rows_, cols_, f_);
  for (int j = 0; j < cols_; ++j) r.col_[j] = sp::scaled(col_[j], c);
  return r;
}

bool LinMap::is_zero() const {
  for (const auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

bool LinMap::is_identity() const {
  if (rows_ != cols_) return false;
  for (int j = 0; j < cols_; ++j) {
    if (col_[j].size() != 1) return false;
    if (col_[j][0].idx != j || !col_[j][0].c.is_one()) return false;
  }
  return true;
}

Matrix LinMap::to_matrix() const {
  Matrix m(rows_, cols_, f_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& e : col_[j]) m.at(e.idx, j) = e.c;
  return m;
}

size_t LinMap::nnz() const {
  size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

// --- EchelonBuilder ---------------------------------------------------------

SparseVec EchelonBuilder::reduce(SparseVec v) const {
  // Repeatedly eliminate the leading entry while a matching pivot row exists.
  while (!v.empty()) {
    auto it = rows_.find(v.front().idx);
    if (it == rows_.end()) break;
    Scalar c = v.front().c;
    sp::axpy(v, -c, it->second);
  }
  if (v.empty()) return v;
  // Leading coefficient survives; eliminate deeper entries too.
  SparseVec out;
  out.push_back(v.front());
  SparseVec rest(v.begin() + 1, v.end());
  while (!rest.empty()) {
    auto it = rows_.find(rest.front().idx);
    if (it == rows_.end()) {
      out.push_back(rest.front());
      rest.erase(rest.begin());
    } else {
      Scalar c = rest.front().c;
      sp::axpy(rest, -c, it->second);
    }
  }
  return out;
}

bool EchelonBuilder::insert(SparseVec v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().idx);
    if (it == rows_.end()) {
      Scalar inv = v.front().c.inverse();
      rows_[v.front().idx] = sp::scaled(v, inv);
      return true;
    }
    Scalar c = v.front().c;
    sp::axpy(v, -c, it->second);
  }
  return false;
}

std::vector<int> EchelonBuilder::pivot_columns() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) p.push_back(piv);
  return p;
}

Subspace EchelonBuilder::to_subspace() const {
  std::vector<Vec> rows;
  for (const auto& [piv, row] : rows_) rows.push_back(sp::to_dense(row, ambient_, f_));
  return Subspace::span(rows, ambient_, f_);
}

}  // namespace relhom
