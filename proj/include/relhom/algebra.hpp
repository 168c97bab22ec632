#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relhom/linalg.hpp"

namespace relhom {

/// Outcome of a structural verification: passes iff `failures` is empty.
struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

/// Finite-dimensional associative unital algebra given by structure constants
/// on a chosen basis: b_i b_j = sum_k c[i][j][k] b_k.
class Algebra {
 public:
  Algebra(Field f, std::vector<std::string> basis_names,
          std::vector<Scalar> mult, Vec unit);

  static Algebra field_as_algebra(Field f);
  /// K[x]/(x^n) on basis {1, x, ..., x^{n-1}}.
  static Algebra truncated_polynomial(Field f, int n);
  /// Full n-by-n matrix algebra on the basis E_ij, row-major order.
  static Algebra matrix_algebra(Field f, int n);
  /// Upper-triangular n-by-n matrices, basis E_ij for i <= j (row-major).
  static Algebra upper_triangular_algebra(Field f, int n);

  int dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& unit() const { return unit_; }

  const Scalar& c(int i, int j, int k) const {
    return mult_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  SparseVec multiply_basis(int i, int j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  SparseVec multiply_sparse(const SparseVec& x, const SparseVec& y) const;

  /// y -> x y as a matrix.
  Matrix left_mult_matrix(const Vec& x) const;
  /// y -> y x as a matrix.
  Matrix right_mult_matrix(const Vec& x) const;

  /// Left multiplication by every basis vector, as sparse maps.
  std::vector<LinMap> left_regular_action() const;
  std::vector<LinMap> right_regular_action() const;

 private:
  Field field_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> mult_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of an algebra: coefficient vector on the chosen basis.
struct Element {
  AlgebraPtr algebra;
  Vec coeffs;
};

Element operator*(const Element& x, const Element& y);

/// Checks associativity on all basis triples and the two unit laws.
ValidationReport check_algebra(const Algebra& a);

/// Injective unital ring embedding of `sub` into `ambient`; `incl` has one
/// column per sub basis vector, in ambient coordinates.
struct SubalgebraEmbedding {
  AlgebraPtr sub;
  AlgebraPtr ambient;
  Matrix incl;

  Vec embed(const Vec& sub_coords) const { return incl * sub_coords; }
  std::optional<Vec> pull_back(const Vec& ambient_coords) const;
  Subspace image() const;
};

/// Builds the embedding whose image is the span of the given ambient
/// elements, deriving the subalgebra structure constants. Throws if the span
/// is not closed under multiplication or misses the unit.
SubalgebraEmbedding subalgebra_from_span(AlgebraPtr ambient,
                                         const std::vector<Vec>& span_elements,
                                         std::vector<std::string> names = {});

/// The trivial pair: K·1 inside `ambient`.
SubalgebraEmbedding scalar_subalgebra(AlgebraPtr ambient);
/// The identity pair (A, A).
SubalgebraEmbedding identity_subalgebra(AlgebraPtr ambient);

ValidationReport check_subalgebra(const SubalgebraEmbedding& emb);

/// Complementary idempotents e, ebar = 1 - e, in ambient coordinates.
struct IdempotentPair {
  Vec e;
  Vec ebar;
};

IdempotentPair make_idempotent_pair(const Algebra& a, const Vec& e);
ValidationReport check_idempotent_pair(const Algebra& a, const IdempotentPair& p);

/// The four Peirce corner subspaces eBe, eBebar, ebarBe, ebarBebar.
struct PeirceDecomposition {
  Subspace ee, e_ebar, ebar_e, ebar_ebar;
};

PeirceDecomposition peirce(const Algebra& a, const IdempotentPair& p);
/// Peirce corners of a subalgebra's image inside the ambient algebra.
PeirceDecomposition peirce(const SubalgebraEmbedding& emb, const IdempotentPair& p);

bool is_upper_triangular(const Algebra& a, const IdempotentPair& p);
bool is_lower_triangular(const Algebra& a, const IdempotentPair& p);
bool is_diagonal(const Algebra& a, const IdempotentPair& p);
bool is_upper_triangular(const SubalgebraEmbedding& emb, const IdempotentPair& p);
bool is_lower_triangular(const SubalgebraEmbedding& emb, const IdempotentPair& p);
bool is_diagonal(const SubalgebraEmbedding& emb, const IdempotentPair& p);

/// Span of b_i g b_j over all basis pairs and generators; closure under both
/// multiplications is verified on the result.
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

/// Quotient algebra on the canonical complement coordinates together with the
/// projection matrix (a surjective ring homomorphism with kernel = ideal).
struct QuotientAlgebra {
  AlgebraPtr algebra;
  QuotientSpace space;
};

QuotientAlgebra quotient_algebra(AlgebraPtr a, const Subspace& ideal);

AlgebraPtr opposite_algebra(const Algebra& a);

/// Group algebra from a Cayley table: table[i][j] = index of g_i g_j.
/// Verifies the table is a group before building.
AlgebraPtr group_algebra(const std::vector<std::vector<int>>& table, Field f,
                         std::vector<std::string> names = {});
ValidationReport check_group_table(const std::vector<std::vector<int>>& table);

}  // namespace relhom
