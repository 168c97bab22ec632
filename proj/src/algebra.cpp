#include "relhom/algebra.hpp"

#include <stdexcept>

namespace relhom {

Algebra::Algebra(Field f, std::vector<std::string> basis_names,
                 std::vector<Scalar> mult, Vec unit)
    : field_(f), dim_(static_cast<int>(basis_names.size())),
      names_(std::move(basis_names)), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
    throw std::invalid_argument("structure constant tensor has wrong size");
  if (unit_.size() != static_cast<size_t>(dim_))
    throw std::invalid_argument("unit vector has wrong size");
}

Algebra Algebra::field_as_algebra(Field f) {
  return Algebra(f, {"1"}, {Scalar::one(f)}, {Scalar::one(f)});
}

Algebra Algebra::truncated_polynomial(Field f, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<Scalar> mult(static_cast<size_t>(n) * n * n, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) mult[(static_cast<size_t>(i) * n + j) * n + (i + j)] = Scalar::one(f);
  return Algebra(f, std::move(names), std::move(mult), unit_vec(n, 0, f));
}

Algebra Algebra::matrix_algebra(Field f, int n) {
  int d = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Scalar> mult(static_cast<size_t>(d) * d * d, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k)
            mult[(static_cast<size_t>(idx(i, j)) * d + idx(k, l)) * d + idx(i, l)] =
                Scalar::one(f);
  Vec unit = zero_vec(d, f);
  for (int i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  return Algebra(f, std::move(names), std::move(mult), std::move(unit));
}

Algebra Algebra::upper_triangular_algebra(Field f, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  int d = static_cast<int>(cells.size());
  auto idx = [&cells](int i, int j) {
    for (size_t t = 0; t < cells.size(); ++t)
      if (cells[t].first == i && cells[t].second == j) return static_cast<int>(t);
    return -1;
  };
  std::vector<std::string> names;
  for (auto [i, j] : cells)
    names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Scalar> mult(static_cast<size_t>(d) * d * d, Scalar::zero(f));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto [i, j] = cells[a];
      auto [k, l] = cells[b];
      if (j == k) mult[(static_cast<size_t>(a) * d + b) * d + idx(i, l)] = Scalar::one(f);
    }
  Vec unit = zero_vec(d, f);
  for (int i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  return Algebra(f, std::move(names), std::move(mult), std::move(unit));
}

SparseVec Algebra::multiply_basis(int i, int j) const {
  SparseVec r;
  for (int k = 0; k < dim_; ++k) {
    const Scalar& x = c(i, j, k);
    if (!x.is_zero()) r.push_back({k, x});
  }
  return r;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim_, field_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& cc = c(i, j, k);
        if (!cc.is_zero()) r[k] += xy * cc;
      }
    }
  }
  return r;
}

SparseVec Algebra::multiply_sparse(const SparseVec& x, const SparseVec& y) const {
  SparseVec r;
  for (const auto& ex : x)
    for (const auto& ey : y) sp::axpy(r, ex.c * ey.c, multiply_basis(ex.idx, ey.idx));
  return r;
}

Matrix Algebra::left_mult_matrix(const Vec& x) const {
  Matrix m(dim_, dim_, field_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int k = 0; k < dim_; ++k) {
        const Scalar& cc = c(i, j, k);
        if (!cc.is_zero()) m.at(k, j) += x[i] * cc;
      }
    }
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const Vec& x) const {
  Matrix m(dim_, dim_, field_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int k = 0; k < dim_; ++k) {
        const Scalar& cc = c(j, i, k);
        if (!cc.is_zero()) m.at(k, j) += x[i] * cc;
      }
    }
  }
  return m;
}

std::vector<LinMap> Algebra::left_regular_action() const {
  std::vector<LinMap> acts;
  for (int i = 0; i < dim_; ++i) {
    LinMap m(dim_, dim_, field_);
    for (int j = 0; j < dim_; ++j) m.set_col(j, multiply_basis(i, j));
    acts.push_back(std::move(m));
  }
  return acts;
}

std::vector<LinMap> Algebra::right_regular_action() const {
  std::vector<LinMap> acts;
  for (int i = 0; i < dim_; ++i) {
    LinMap m(dim_, dim_, field_);
    for (int j = 0; j < dim_; ++j) m.set_col(j, multiply_basis(j, i));
    acts.push_back(std::move(m));
  }
  return acts;
}

Element operator*(const Element& x, const Element& y) {
  if (x.algebra != y.algebra) throw std::invalid_argument("elements of different algebras");
  return {x.algebra, x.algebra->multiply(x.coeffs, y.coeffs)};
}

ValidationReport check_algebra(const Algebra& a) {
  ValidationReport rep;
  int d = a.dim();
  for (int i = 0; i < d; ++i) {
    Vec bi = unit_vec(d, i, a.field());
    if (a.multiply(a.unit(), bi) != bi)
      rep.fail("unit law fails on the left at basis " + a.basis_names()[i]);
    if (a.multiply(bi, a.unit()) != bi)
      rep.fail("unit law fails on the right at basis " + a.basis_names()[i]);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseVec ij = a.multiply_basis(i, j);
      for (int k = 0; k < d; ++k) {
        // (b_i b_j) b_k vs b_i (b_j b_k)
        SparseVec lhs, rhs;
        for (const auto& e : ij) sp::axpy(lhs, e.c, a.multiply_basis(e.idx, k));
        SparseVec jk = a.multiply_basis(j, k);
        for (const auto& e : jk) sp::axpy(rhs, e.c, a.multiply_basis(i, e.idx));
        if (lhs != rhs)
          rep.fail("associativity fails at triple (" + a.basis_names()[i] + ", " +
                   a.basis_names()[j] + ", " + a.basis_names()[k] + ")");
      }
    }
  return rep;
}

std::optional<Vec> SubalgebraEmbedding::pull_back(const Vec& ambient_coords) const {
  return relhom::solve_linear(incl, ambient_coords);
}

Subspace SubalgebraEmbedding::image() const {
  std::vector<Vec> cols;
  for (int j = 0; j < incl.cols(); ++j) cols.push_back(incl.col(j));
  return Subspace::span(cols, ambient->dim(), ambient->field());
}

SubalgebraEmbedding subalgebra_from_span(AlgebraPtr ambient,
                                         const std::vector<Vec>& span_elements,
                                         std::vector<std::string> names) {
  Field f = ambient->field();
  Subspace img = Subspace::span(span_elements, ambient->dim(), f);
  int k = img.dim();
  if (!img.contains(ambient->unit()))
    throw std::invalid_argument("subalgebra span does not contain the unit");
  Matrix incl = img.basis().transpose();
  // Induced structure constants; closure failures surface as unsolvable systems.
  std::vector<Scalar> mult(static_cast<size_t>(k) * k * k, Scalar::zero(f));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec prod = ambient->multiply(img.basis().row(i), img.basis().row(j));
      auto coords = img.coordinates(prod);
      if (!coords)
        throw std::invalid_argument("span is not closed under multiplication");
      for (int t = 0; t < k; ++t) mult[(static_cast<size_t>(i) * k + j) * k + t] = (*coords)[t];
    }
  auto unit_coords = img.coordinates(ambient->unit());
  if (names.empty())
    for (int i = 0; i < k; ++i) names.push_back("s" + std::to_string(i));
  if (static_cast<int>(names.size()) != k)
    throw std::invalid_argument("subalgebra basis name count mismatch");
  auto sub = std::make_shared<Algebra>(f, std::move(names), std::move(mult), *unit_coords);
  return SubalgebraEmbedding{std::move(sub), std::move(ambient), std::move(incl)};
}

SubalgebraEmbedding scalar_subalgebra(AlgebraPtr ambient) {
  return subalgebra_from_span(ambient, {ambient->unit()}, {"1"});
}

SubalgebraEmbedding identity_subalgebra(AlgebraPtr ambient) {
  std::vector<Vec> all;
  for (int i = 0; i < ambient->dim(); ++i)
    all.push_back(unit_vec(ambient->dim(), i, ambient->field()));
  return subalgebra_from_span(ambient, all, ambient->basis_names());
}

ValidationReport check_subalgebra(const SubalgebraEmbedding& emb) {
  ValidationReport rep;
  const Algebra& sub = *emb.sub;
  const Algebra& amb = *emb.ambient;
  if (emb.incl.rows() != amb.dim() || emb.incl.cols() != sub.dim()) {
    rep.fail("inclusion matrix shape mismatch");
    return rep;
  }
  if (rank(emb.incl) != sub.dim()) rep.fail("inclusion is not injective");
  if (emb.embed(sub.unit()) != amb.unit()) rep.fail("unit is not mapped to the ambient unit");
  Subspace img = emb.image();
  for (int i = 0; i < sub.dim(); ++i)
    for (int j = 0; j < sub.dim(); ++j) {
      Vec prod = amb.multiply(emb.incl.col(i), emb.incl.col(j));
      if (!img.contains(prod)) {
        rep.fail("image not closed under multiplication at pair (" + sub.basis_names()[i] +
                 ", " + sub.basis_names()[j] + ")");
        continue;
      }
      Vec sub_prod = sub.multiply(unit_vec(sub.dim(), i, sub.field()),
                                  unit_vec(sub.dim(), j, sub.field()));
      if (emb.embed(sub_prod) != prod)
        rep.fail("inclusion is not multiplicative at pair (" + sub.basis_names()[i] + ", " +
                 sub.basis_names()[j] + ")");
    }
  return rep;
}

IdempotentPair make_idempotent_pair(const Algebra& a, const Vec& e) {
  IdempotentPair p{e, sub(a.unit(), e)};
  auto rep = check_idempotent_pair(a, p);
  if (!rep.ok()) throw std::invalid_argument("not an idempotent: " + rep.failures.front());
  return p;
}

ValidationReport check_idempotent_pair(const Algebra& a, const IdempotentPair& p) {
  ValidationReport rep;
  if (a.multiply(p.e, p.e) != p.e) rep.fail("e^2 != e");
  if (add(p.e, p.ebar) != a.unit()) rep.fail("e + ebar != 1");
  if (a.multiply(p.ebar, p.ebar) != p.ebar) rep.fail("ebar^2 != ebar");
  if (!is_zero_vec(a.multiply(p.e, p.ebar)) || !is_zero_vec(a.multiply(p.ebar, p.e)))
    rep.fail("e ebar != 0 or ebar e != 0");
  return rep;
}

namespace {
Subspace corner(const Algebra& a, const std::vector<Vec>& gens, const Vec& l, const Vec& r) {
  std::vector<Vec> vecs;
  for (const auto& g : gens) vecs.push_back(a.multiply(l, a.multiply(g, r)));
  return Subspace::span(vecs, a.dim(), a.field());
}
}  // namespace

PeirceDecomposition peirce(const Algebra& a, const IdempotentPair& p) {
  std::vector<Vec> basis;
  for (int i = 0; i < a.dim(); ++i) basis.push_back(unit_vec(a.dim(), i, a.field()));
  return {corner(a, basis, p.e, p.e), corner(a, basis, p.e, p.ebar),
          corner(a, basis, p.ebar, p.e), corner(a, basis, p.ebar, p.ebar)};
}

PeirceDecomposition peirce(const SubalgebraEmbedding& emb, const IdempotentPair& p) {
  std::vector<Vec> gens;
  for (int j = 0; j < emb.incl.cols(); ++j) gens.push_back(emb.incl.col(j));
  const Algebra& a = *emb.ambient;
  return {corner(a, gens, p.e, p.e), corner(a, gens, p.e, p.ebar),
          corner(a, gens, p.ebar, p.e), corner(a, gens, p.ebar, p.ebar)};
}

bool is_upper_triangular(const Algebra& a, const IdempotentPair& p) {
  return peirce(a, p).ebar_e.dim() == 0;
}
bool is_lower_triangular(const Algebra& a, const IdempotentPair& p) {
  return peirce(a, p).e_ebar.dim() == 0;
}
bool is_diagonal(const Algebra& a, const IdempotentPair& p) {
  auto d = peirce(a, p);
  return d.ebar_e.dim() == 0 && d.e_ebar.dim() == 0;
}
bool is_upper_triangular(const SubalgebraEmbedding& emb, const IdempotentPair& p) {
  return peirce(emb, p).ebar_e.dim() == 0;
}
bool is_lower_triangular(const SubalgebraEmbedding& emb, const IdempotentPair& p) {
  return peirce(emb, p).e_ebar.dim() == 0;
}
bool is_diagonal(const SubalgebraEmbedding& emb, const IdempotentPair& p) {
  auto d = peirce(emb, p);
  return d.ebar_e.dim() == 0 && d.e_ebar.dim() == 0;
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  std::vector<Vec> vecs;
  for (const auto& g : gens)
    for (int i = 0; i < a.dim(); ++i) {
      Vec gi = a.multiply(unit_vec(a.dim(), i, a.field()), g);
      for (int j = 0; j < a.dim(); ++j)
        vecs.push_back(a.multiply(gi, unit_vec(a.dim(), j, a.field())));
    }
  Subspace s = Subspace::span(vecs, a.dim(), a.field());
  if (!is_two_sided_ideal(a, s))
    throw std::logic_error("generated span failed the two-sided closure check");
  return s;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (int r = 0; r < s.dim(); ++r) {
    Vec v = s.basis().row(r);
    for (int i = 0; i < a.dim(); ++i) {
      Vec bi = unit_vec(a.dim(), i, a.field());
      if (!s.contains(a.multiply(bi, v)) || !s.contains(a.multiply(v, bi))) return false;
    }
  }
  return true;
}

QuotientAlgebra quotient_algebra(AlgebraPtr a, const Subspace& ideal) {
  if (!is_two_sided_ideal(*a, ideal))
    throw std::invalid_argument("quotient_algebra: subspace is not a two-sided ideal");
  QuotientSpace q(a->dim(), ideal);
  int k = q.dim();
  Field f = a->field();
  std::vector<Scalar> mult(static_cast<size_t>(k) * k * k, Scalar::zero(f));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec prod = q.project(a->multiply(q.lift(unit_vec(k, i, f)), q.lift(unit_vec(k, j, f))));
      for (int t = 0; t < k; ++t) mult[(static_cast<size_t>(i) * k + j) * k + t] = prod[t];
    }
  std::vector<int> pivots = ideal.pivots();
  std::vector<bool> is_pivot(a->dim(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::string> names;
  for (int j = 0; j < a->dim(); ++j)
    if (!is_pivot[j]) names.push_back("[" + a->basis_names()[j] + "]");
  auto alg = std::make_shared<Algebra>(f, std::move(names), std::move(mult),
                                       q.project(a->unit()));
  return {std::move(alg), std::move(q)};
}

AlgebraPtr opposite_algebra(const Algebra& a) {
  int d = a.dim();
  std::vector<Scalar> mult(static_cast<size_t>(d) * d * d, Scalar::zero(a.field()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        mult[(static_cast<size_t>(i) * d + j) * d + k] = a.c(j, i, k);
  return std::make_shared<Algebra>(a.field(), a.basis_names(), std::move(mult), a.unit());
}

ValidationReport check_group_table(const std::vector<std::vector<int>>& table) {
  ValidationReport rep;
  int n = static_cast<int>(table.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) {
      rep.fail("table is not square");
      return rep;
    }
  for (const auto& row : table)
    for (int x : row)
      if (x < 0 || x >= n) {
        rep.fail("table entry out of range");
        return rep;
      }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (table[e][i] != i || table[i][e] != i) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) {
    rep.fail("no identity element");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n; ++j)
      if (table[i][j] == id && table[j][i] == id) has_inverse = true;
    if (!has_inverse) rep.fail("element " + std::to_string(i) + " has no inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          rep.fail("table is not associative at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
          return rep;
        }
  return rep;
}

AlgebraPtr group_algebra(const std::vector<std::vector<int>>& table, Field f,
                         std::vector<std::string> names) {
  auto rep = check_group_table(table);
  if (!rep.ok())
    throw std::invalid_argument("multiplication table is not a group: " + rep.failures.front());
  int n = static_cast<int>(table.size());
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<Scalar> mult(static_cast<size_t>(n) * n * n, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mult[(static_cast<size_t>(i) * n + j) * n + table[i][j]] = Scalar::one(f);
  int id = 0;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (table[e][i] != i || table[i][e] != i) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  return std::make_shared<Algebra>(f, std::move(names), std::move(mult), unit_vec(n, id, f));
}

}  // namespace relhom
