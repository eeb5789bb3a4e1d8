#pragma once

// First-order differential calculi df = e_i⊗∂^i(f) valued in the free
// bimodule V⊗B, vector fields acting through the pairing, the functionals
// χ^i = ε∘∂^i, convolution, and the braided bracket of the χ^i.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/catalog.hpp"
#include "hopfkit/duality.hpp"

namespace hopfkit {

struct FODC {
  BialgebraPtr bialgebra;
  LeftModule action;                  // λ on V
  std::vector<Matrix> partials;       // ∂^i as n×n matrices, column a = ∂^i(e_a)
  std::optional<LeftComodule> coaction;  // L on V when the calculus is bicovariant
  std::vector<std::string> labels;    // generator names

  std::size_t dim() const { return partials.size(); }
};

/// df as a tensor of shape {d, n}.
Tensor differential(const FODC& c, const Vec& f);
/// Twisted Leibniz ∂^i(fg) = ∂^i(f)g + λ^i_k(f_(1))f_(2)∂^k(g) and the
/// global rule d(fg) = df.g + f.dg in V⊗B with left action Λ(a) = λ(a_(1))a_(2).
VerificationReport check_fodc(const FODC& c);
/// Δ∘∂^i = (∂^i⊗id)∘Δ for every i, and Δ∘X^∂ = (X^∂⊗id)∘Δ for X = 1⊗e^i.
VerificationReport check_right_covariance(const FODC& c);

/// X^∂(f) = ≪X, df≫ for X in B⊗Ṽ (shape {n, d}).
Vec cartan_action(const FODC& c, const Tensor& x, const Vec& f);
/// (a.X)^∂(f) = a X^∂(f) on basis a, X, f.
VerificationReport check_cartan_linearity(const FODC& c);

/// χ^i = ε∘∂^i as coefficient vectors over the basis of B.
std::vector<Vec> woronowicz_functionals(const FODC& c);
/// (φ⋆ψ)(f) = φ(f_(1))ψ(f_(2)).
Vec convolution(const Bialgebra& b, const Vec& phi, const Vec& psi);

struct BracketTable {
  std::size_t dim = 0;
  Matrix braiding;                           // 𝓡̃ on Ṽ⊗Ṽ
  std::vector<Vec> functionals;              // χ^i
  std::vector<Vec> brackets;                 // [χ_i, χ_j] at i * dim + j
  std::vector<std::optional<Vec>> constants; // coordinates in span{χ_k}, when inside

  bool closed() const;
  bool zero() const;
};

/// [χ_i, χ_j] = χ_i⋆χ_j − 𝓡̃^{mn}_{ij} χ_m⋆χ_n with 𝓡̃ the braiding of the
/// right-right module over B^cop obtained from the dual of (V, λ, L).
/// Refuses without a bijective antipode or a compatible coaction.
BracketTable quantum_lie_bracket(const FODC& c);

/// B = 𝕜(G), V = span{e_g : g ∈ T}, λ^g_h(f) = δ^g_h f(g), ∂^g = L_g − id
/// with (L_g f)(x) = f(gx). The coaction is attached when T is closed under
/// conjugation. Refuses e ∈ T and empty T.
FODC finite_group_calculus(const Group& g, const std::vector<std::size_t>& subset);

}  // namespace hopfkit
