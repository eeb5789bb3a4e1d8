#pragma once

// Yetter-Drinfeld modules in the four corners (left/right action x
// left/right coaction), the antipode-induced transforms between them, the
// transpose duality, and the induced braiding.

#include <cstddef>
#include <string>
#include <variant>

#include "hopfkit/rep.hpp"

namespace hopfkit {

/// First letter: side of the action; second letter: side of the coaction.
enum class Corner { LL, RR, LR, RL };

std::string to_string(Corner c);

struct YDModule {
  BialgebraPtr bialgebra;
  Corner corner = Corner::LL;
  std::variant<LeftModule, RightModule> action;
  std::variant<LeftComodule, RightComodule> coaction;

  static YDModule left_left(BialgebraPtr b, LeftModule action, LeftComodule coaction);
  static YDModule right_right(BialgebraPtr b, RightModule action, RightComodule coaction);
  static YDModule left_right(BialgebraPtr b, LeftModule action, RightComodule coaction);
  static YDModule right_left(BialgebraPtr b, RightModule action, LeftComodule coaction);

  std::size_t dim() const;
  /// Action matrices and coaction coefficient matrix, regardless of side.
  const std::vector<Matrix>& action_matrices() const;
  const CoMatrix& coaction_matrix() const;

  /// Same corner and identical tensors (the bialgebra is not compared).
  bool same_tensors(const YDModule& other) const;
};

/// The compatibility condition of the module's corner, expanded for every
/// basis element a and carrier index pair (i, k). The mixed corners are
/// checked by reinterpreting the module as a left-left module over B^cop
/// (LR) or B^op (RL). Throws StructuralError when the corner tag does not
/// match the sidedness of the action/coaction.
VerificationReport check_yd(const YDModule& m);

/// (V, λ, L) ↦ (V, λ∘S⁻¹, S(L)); needs a bijective antipode.
YDModule yd_ll_to_rr(const YDModule& m);
/// Inverse of yd_ll_to_rr: (V, ρ, R) ↦ (V, ρ∘S, S⁻¹(R)).
YDModule yd_rr_to_ll(const YDModule& m);
/// (V, λ, R) ↦ (V, λ, S(R)).
YDModule yd_lr_to_ll(const YDModule& m);
/// Inverse of yd_lr_to_ll: (V, λ, L) ↦ (V, λ, S⁻¹(L)).
YDModule yd_ll_to_lr(const YDModule& m);
/// One-step identification (V, λ, R) ↦ (V, λ∘S⁻¹, S²(R)).
YDModule yd_lr_to_rr(const YDModule& m);
/// Left-left (resp. right-right) module over B to the same corner over
/// B^cop, with the coaction replaced by S⁻¹ applied to its entries.
/// Applying it twice returns the original tensors over B^cop cop = B.
YDModule yd_to_cop(const YDModule& m);
/// Transpose action and coaction on the dual carrier: LL ↦ RR and RR ↦ LL.
YDModule yd_dual(const YDModule& m);
/// A left-left module over B read as a right-right module over B^op cop.
YDModule reinterpret_op_cop(const YDModule& m);

struct YangBaxterOperator {
  std::size_t dim = 0;
  Matrix matrix;  // on V⊗V, basis index (i, k) ↦ i * dim + k

  VerificationReport verify() const;
};

/// 𝓡(e_i⊗e_k) = ρ^j_i(R^m_k) e_m⊗e_j for a right-right module that passes
/// its compatibility check. The braid relation and invertibility are
/// verified; failure raises RefusedError.
YangBaxterOperator yang_baxter(const YDModule& m);

/// P∘𝓡 with P the flip; satisfies R12 R13 R23 = R23 R13 R12 iff 𝓡 is braided.
Matrix braid_to_qybe(const YangBaxterOperator& r);
Matrix flip_matrix(std::size_t dim);
VerificationReport check_qybe(const Matrix& r, std::size_t dim);

}  // namespace hopfkit
