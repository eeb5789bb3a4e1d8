#pragma once

// Dual bimodules of free modules: the canonical A-valued pairing between
// A⊗Ṽ and V⊗A, the transposed commutation rule, covariance of the dual, and
// the antipode pairing identity for right comodules.

#include "hopfkit/bimodule.hpp"

namespace hopfkit {

/// ≪Σ X^k⊗e^k, Σ e_i⊗x^i≫ = Σ_k X^k x^k. X has shape {n, d}, x has shape {d, n}.
Vec pair(const Bialgebra& b, const Tensor& dual_element, const Tensor& element);

struct DualFreeBimodule {
  FreeBimodule source;  // V⊗A with Λ
  FreeBimodule dual;    // A⊗Ṽ with Φ^i_k = Λ^k_i
};

/// V⊗A ↦ A⊗Ṽ with the transpose rule; A⊗Ṽ ↦ V⊗A for the inverse direction.
/// Refuses when the input rule fails its product or unit law.
FreeBimodule dual_bimodule(const FreeBimodule& m);
DualFreeBimodule dualize(const FreeBimodule& source);

/// Adjointness ≪(1⊗e^k).a, e_i⊗1≫ = ≪1⊗e^k, a.(e_i⊗1)≫ = Λ^k_i(a), and
/// A-bilinearity of the pairing on basis elements.
VerificationReport check_pairing(const DualFreeBimodule& d);

/// For a source built as Λ(a) = λ(a_(1))a_(2):
///  - (1⊗α).a = a_(2)⊗λ̃(a_(1))α reproduces the dual right action,
///  - the source is right covariant under id⊗Δ,
///  - the dual is left covariant for Δ⊗id over `over` (B^cop passes; B in
///    general does not).
VerificationReport check_dual_covariance(const DualFreeBimodule& d, const BialgebraPtr& over);

/// R^k_j S(R^j_i) = δ^k_i 1, directly and through the transpose coaction on
/// Ṽ paired with the S-push-forward of R.
VerificationReport pairing_identity(const BialgebraPtr& h, const RightComodule& r);

}  // namespace hopfkit
