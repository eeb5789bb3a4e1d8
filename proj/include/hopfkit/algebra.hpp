#pragma once

// Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras given
// by structure constants, with exhaustive axiom verification.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

struct Term {
  std::size_t index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

struct PairTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
  friend bool operator==(const PairTerm&, const PairTerm&) = default;
};

/// Sorted by index, zero coefficients dropped.
using SparseVec = std::vector<Term>;

SparseVec sparsify(const Vec& v);
Vec densify(const SparseVec& s, std::size_t n);

/// Associative unital algebra: m(e_i, e_j) = mult[i*n + j].
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }

  Vec basis_element(std::size_t i) const { return unit_vec(dim(), i); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec multiply_basis(std::size_t i, std::size_t j) const { return densify(product(i, j), dim()); }
  /// Leg-wise product in the tensor power A⊗...⊗A (every leg of size dim()).
  Tensor multiply_legwise(const Tensor& x, const Tensor& y) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.basis_ == b.basis_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<SparseVec> mult_;
  Vec unit_;
};

/// Coassociative counital coalgebra: Δ(e_i) = Σ coeff e_left ⊗ e_right.
class Coalgebra {
 public:
  Coalgebra(std::string name, std::vector<std::string> basis, std::vector<std::vector<PairTerm>> comult,
            Vec counit);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<PairTerm>& coproduct(std::size_t i) const { return comult_[i]; }
  const Vec& counit_vector() const { return counit_; }

  Tensor comultiply(const Vec& a) const;  // shape {n, n}
  Scalar counit(const Vec& a) const;
  /// Applies Δ to one leg of a tensor whose legs all have size dim().
  Tensor comultiply_leg(const Tensor& t, std::size_t leg) const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.basis_ == b.basis_ && a.comult_ == b.comult_ && a.counit_ == b.counit_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::vector<PairTerm>> comult_;
  Vec counit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

enum class HopfKind { bialgebra, hopf, hopf_bijective };

/// Bialgebra with optional antipode. The inverse antipode is computed by
/// exact inversion at construction; a singular antipode classifies the
/// structure as Hopf without bijective antipode.
class Bialgebra {
 public:
  Bialgebra(std::string name, AlgebraPtr algebra, CoalgebraPtr coalgebra, std::optional<Matrix> antipode = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return algebra_->dim(); }
  const std::vector<std::string>& basis() const { return algebra_->basis(); }
  const Algebra& algebra() const { return *algebra_; }
  const Coalgebra& coalgebra() const { return *coalgebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const CoalgebraPtr& coalgebra_ptr() const { return coalgebra_; }

  HopfKind kind() const;
  bool has_antipode() const { return antipode_.has_value(); }
  bool has_bijective_antipode() const { return antipode_inverse_.has_value(); }
  /// Throws RefusedError when absent.
  const Matrix& antipode_matrix() const;
  const Matrix& antipode_inverse_matrix() const;
  const std::optional<Matrix>& antipode() const { return antipode_; }

  Vec multiply(const Vec& a, const Vec& b) const { return algebra_->multiply(a, b); }
  Tensor comultiply(const Vec& a) const { return coalgebra_->comultiply(a); }
  Scalar counit(const Vec& a) const { return coalgebra_->counit(a); }
  Vec apply_antipode(const Vec& a) const { return antipode_matrix().apply(a); }
  Vec apply_antipode_inverse(const Vec& a) const { return antipode_inverse_matrix().apply(a); }

  friend bool operator==(const Bialgebra& a, const Bialgebra& b) {
    return *a.algebra_ == *b.algebra_ && *a.coalgebra_ == *b.coalgebra_ && a.antipode_ == b.antipode_;
  }

 private:
  std::string name_;
  AlgebraPtr algebra_;
  CoalgebraPtr coalgebra_;
  std::optional<Matrix> antipode_;
  std::optional<Matrix> antipode_inverse_;
};

using BialgebraPtr = std::shared_ptr<const Bialgebra>;

enum class Level { algebra, coalgebra, bialgebra, hopf };

VerificationReport verify(const Algebra& a);
VerificationReport verify(const Coalgebra& c);
VerificationReport verify(const Bialgebra& b, Level level = Level::hopf);

BialgebraPtr opposite(const BialgebraPtr& b);
BialgebraPtr co_opposite(const BialgebraPtr& b);
BialgebraPtr op_cop(const BialgebraPtr& b);

/// Δ applied legs-1 times. Both bracketings are computed and compared;
/// a mismatch (non-coassociative input) throws StructuralError.
Tensor iterated_comultiply(const Coalgebra& c, const Vec& element, std::size_t legs);

/// S(ab) = S(b)S(a), Δ∘S = (S⊗S)∘Δ^cop, S(1) = 1, ε∘S = ε.
VerificationReport antipode_as_anti_morphisms(const Bialgebra& h);

/// Smallest k in [1, limit] with S^k = id.
std::optional<unsigned> antipode_order(const Bialgebra& h, unsigned limit = 64);

enum class MapKind { morphism, anti_morphism };

/// Linear map between structures, tagged as a (anti)morphism. The tag is
/// never inferred; it is verified before the map is used.
struct LinearMap {
  std::string name;
  Matrix matrix;  // target_dim x source_dim, column j = image of e_j
  MapKind kind = MapKind::morphism;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

LinearMap identity_map(std::size_t n);
/// outer ∘ inner; two anti-morphisms compose to a morphism.
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
LinearMap antipode_map(const Bialgebra& h);
LinearMap antipode_inverse_map(const Bialgebra& h);
/// a ↦ ε(a)1, an algebra and coalgebra morphism B → B.
LinearMap counit_unit_map(const Bialgebra& b);

VerificationReport verify_algebra_map(const LinearMap& t, const Algebra& source, const Algebra& target);
VerificationReport verify_coalgebra_map(const LinearMap& t, const Coalgebra& source, const Coalgebra& target);

}  // namespace hopfkit
