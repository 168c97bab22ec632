#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "relhom/algebra.hpp"

namespace relhom {

enum class Side { Left, Right, Bimodule };

/// Module given by one action matrix per algebra basis vector. A bimodule may
/// have different algebras acting on the two sides (e.g. left A, right S).
struct ModuleRep {
  Side side = Side::Left;
  int dim = 0;
  Field field;
  AlgebraPtr left_alg;   // null iff side == Right
  AlgebraPtr right_alg;  // null iff side == Left
  std::vector<Matrix> left_act;   // x -> b_i · x
  std::vector<Matrix> right_act;  // x -> x · b_i

  bool has_left() const { return side != Side::Right; }
  bool has_right() const { return side != Side::Left; }
  /// Action of an arbitrary element (coefficients over the acting algebra).
  Matrix act_left(const Vec& a) const;
  Matrix act_right(const Vec& a) const;
};

ModuleRep regular_left_module(AlgebraPtr a);
ModuleRep regular_right_module(AlgebraPtr a);
ModuleRep regular_bimodule(AlgebraPtr a);

/// Induced actions on a quotient of a module by an invariant subspace.
ModuleRep quotient_module(const ModuleRep& m, const QuotientSpace& q);

/// Action matrices composed with the inclusion: the module seen over the
/// subalgebra on the chosen side(s).
ModuleRep restrict_left(const ModuleRep& m, const SubalgebraEmbedding& emb);
ModuleRep restrict_right(const ModuleRep& m, const SubalgebraEmbedding& emb);

ValidationReport check_module(const ModuleRep& m);

/// Linear map between modules; check verifies the intertwining laws for the
/// sides present in both source and target.
struct ModuleHom {
  Matrix mat;
};
ValidationReport check_module_hom(const ModuleRep& src, const ModuleRep& dst,
                                  const Matrix& mat);

/// Canonical basis of the space of intertwiners src -> dst.
std::vector<Matrix> hom_space(const ModuleRep& src, const ModuleRep& dst);

// ---------------------------------------------------------------------------
// Tensor product over a subring.

/// X ⊗_R Y for a right R-module X and left R-module Y. Exposes, for each pair
/// of factor basis vectors, the coordinates of their class (`pure`), and for
/// each class basis vector a representative in the plain K-tensor grid
/// (`rep`). Everything downstream is transported through these two maps.
class TensorProduct {
 public:
  struct RepTerm {
    int i, j;
    Scalar c;
  };

  /// Generic path: quotient of X ⊗_K Y by the balancing relations
  /// (x·r) ⊗ y - x ⊗ (r·y), one bundle per R basis vector.
  static TensorProduct balanced(int xdim, const std::vector<LinMap>& x_right,
                                int ydim, const std::vector<LinMap>& y_left, Field f);

  /// Split path for subrings spanned by orthogonal idempotents f_t: requires
  /// homogeneous factor bases (x_block[i] = t iff x_i f_t = x_i) and produces
  /// the product basis of the matching blocks with no linear algebra.
  static TensorProduct split(const std::vector<int>& x_block,
                             const std::vector<int>& y_block, Field f);

  int dim() const { return dim_; }
  int xdim() const { return xdim_; }
  int ydim() const { return ydim_; }
  Field field() const { return f_; }
  bool is_split() const { return split_; }

  const SparseVec& pure(int i, int j) const { return pure_[static_cast<size_t>(i) * ydim_ + j]; }
  const std::vector<RepTerm>& rep(int t) const { return rep_[t]; }
  /// Bilinear extension of `pure` to sparse factor vectors.
  SparseVec pure_of(const SparseVec& x, const SparseVec& y) const;

  /// Underlying quotient of the K-tensor grid (row-major (i,j) indexing);
  /// available on the generic path only.
  const QuotientSpace& quotient_space() const;

 private:
  int xdim_ = 0, ydim_ = 0, dim_ = 0;
  bool split_ = false;
  Field f_;
  std::vector<SparseVec> pure_;
  std::vector<std::vector<RepTerm>> rep_;
  std::optional<QuotientSpace> quotient_;
};

using TensorPtr = std::shared_ptr<const TensorProduct>;

/// Split structure of a subalgebra: its basis consists of orthogonal
/// idempotents summing to 1 (a product of one-dimensional field blocks).
struct SplitStructure {
  std::vector<Vec> idempotents_ambient;  // images of the sub basis vectors
};
std::optional<SplitStructure> detect_split(const SubalgebraEmbedding& emb);

/// Block label per basis vector of a right module: x_i · f_t = x_i for
/// exactly one t (and 0 for the others); nullopt when the basis is not
/// homogeneous. Actions must already be over the subalgebra.
std::optional<std::vector<int>> right_block_labels(const ModuleRep& m_over_sub);
std::optional<std::vector<int>> left_block_labels(const ModuleRep& m_over_sub);

std::vector<LinMap> right_action_maps(const ModuleRep& m);
std::vector<LinMap> left_action_maps(const ModuleRep& m);

/// Materialised tensor of two modules over the subalgebra, with the outer
/// actions carried along (left action of X's left algebra, right action of
/// Y's right algebra, when present; absent when neither factor has one).
struct TensorOverS {
  TensorPtr core;
  std::optional<ModuleRep> module;
};

/// Pre: X has a right action over emb.sub and Y a left action over emb.sub
/// (use restrict_right / restrict_left for modules over the ambient).
/// Picks the split fast path when the subring and both bases allow it.
TensorOverS tensor_over(const SubalgebraEmbedding& emb, const ModuleRep& x,
                        const ModuleRep& y);

/// (A,S)-free module A ⊗_S V with the left A-action on the first factor.
struct FreeRelativeModule {
  ModuleRep module;  // left A-module (also right S when V is an S-bimodule)
  TensorPtr core;    // A ⊗_S V
};
FreeRelativeModule free_relative_module(const SubalgebraEmbedding& emb,
                                        const ModuleRep& v);

/// Result of a splitting test: when the module is (relatively) projective,
/// `section` is an exact witness with mu ∘ section = id, verified A-linear.
struct SplittingCertificate {
  bool projective = false;
  std::optional<Matrix> section;
};

/// Decides whether the action epimorphism A ⊗_S m -> m admits an A-linear
/// section, by solving the intertwiner constraints exactly.
SplittingCertificate is_relative_projective(const SubalgebraEmbedding& emb,
                                            const ModuleRep& m);

/// Ordinary projectivity: section of A ⊗_K m -> m. Solved through the
/// free-forget adjunction Hom_A(m, A ⊗ W) = Hom_A(m, A) ⊗ W, which keeps the
/// system small.
SplittingCertificate is_projective(const ModuleRep& m);

/// Unital ring homomorphism between algebras.
struct RingHom {
  AlgebraPtr source, target;
  Matrix mat;  // target-dim x source-dim
  Vec apply(const Vec& x) const { return mat * x; }
};
ValidationReport check_ring_hom(const RingHom& h);

/// R ⊗_A p for a ring map phi: A -> R, with the left R-action on the first
/// factor.
TensorOverS base_change(const RingHom& phi, const ModuleRep& p);

}  // namespace relhom
