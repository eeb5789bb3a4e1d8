#pragma once

// Built-in examples: small groups, group and function algebras, Sweedler's
// four-dimensional Hopf algebra, and module/comodule/YD instances over them.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/yd.hpp"

namespace hopfkit {

/// Finite group by multiplication table; element 0 is the identity.
struct Group {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::size_t> table;  // a*b at a * order + b

  std::size_t order() const { return labels.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order() + b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t conjugate(std::size_t g, std::size_t c) const { return mul(mul(g, c), inverse(g)); }
  /// Index of the element with the given label; throws std::invalid_argument.
  std::size_t find(const std::string& label) const;
};

Group cyclic_group(std::size_t n);
/// S3 with elements e, (12), (13), (23), (123), (132).
Group symmetric_group_3();
/// "Z<n>" or "S3".
Group group_by_name(const std::string& name);
/// Checks closure, associativity, identity and inverses.
VerificationReport verify(const Group& g);

std::vector<std::size_t> transpositions(const Group& s3);

BialgebraPtr ground_field();
/// 𝕜[G]: basis G, Δg = g⊗g, S(g) = g⁻¹.
BialgebraPtr group_algebra(const Group& g);
/// 𝕜(G): basis δ_g, pointwise product, Δδ_a = Σ_{bc=a} δ_b⊗δ_c, S(δ_a) = δ_{a⁻¹}.
BialgebraPtr function_algebra(const Group& g);
/// Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x.
BialgebraPtr sweedler_h4();

/// k, kZ2, kZ3, kZ2-fun, kZ3-fun, kS3, kS3-fun, sweedler-H4, and the
/// parameterized forms group-algebra(G), function-algebra(G) with G = Z<n> or S3.
BialgebraPtr catalog_bialgebra(const std::string& name);
std::vector<std::string> catalog_names();

// Modules and comodules.

/// g acts by −1 on a line.
LeftModule sign_module(const BialgebraPtr& kz2);
/// Generator of Z3 acts by [[0, −1], [1, −1]].
LeftModule rotation_module(const BialgebraPtr& kz3);
/// λ(g) = diag(1, −1), λ(x) = [[0, 0], [q, 0]].
LeftModule h4_two_dim_module(const BialgebraPtr& h4);
/// Left multiplication on 𝕜[G] by conjugation: g.e_c = e_{gcg⁻¹} on the span of a subset.
LeftModule conjugation_module(const BialgebraPtr& kg, const Group& g, const std::vector<std::size_t>& subset);
/// e_c ↦ c⊗e_c on the span of a subset of G.
LeftComodule grading_comodule(const BialgebraPtr& kg, const std::vector<std::size_t>& subset);
/// Δ itself as a left coaction on the algebra.
LeftComodule regular_comodule(const BialgebraPtr& b);
/// λ(a)v = a_(1) v S(a_(2)).
LeftModule adjoint_module(const BialgebraPtr& h);
/// On 𝕜(G) and the span of T: λ^g_h(δ_a) = δ^g_h [a = g].
LeftModule evaluation_module(const BialgebraPtr& fun, const std::vector<std::size_t>& subset);
/// On 𝕜(G) and the span of a conjugation-closed T: L^i_k = Σ_x [i = x⁻¹kx] δ_x.
LeftComodule conjugation_comodule(const BialgebraPtr& fun, const Group& g, const std::vector<std::size_t>& subset);

/// Left modules that seed the free bimodules V⊗B of the catalog.
struct NamedModule {
  std::string name;
  BialgebraPtr bialgebra;
  LeftModule module;
};

/// kZ2-bimodule, kZ3-bimodule, H4-bimodule, H4-regular-bimodule,
/// kZ3-fun-bimodule, and kS3-bimodule (over 𝕜(S3), the transposition span).
std::vector<NamedModule> catalog_modules();
NamedModule catalog_module(const std::string& name);

// Named Yetter-Drinfeld instances.

struct NamedYD {
  std::string name;
  YDModule module;
  bool expected_pass = true;
};

YDModule trivial_yd(const BialgebraPtr& b, std::size_t dim);
/// Transposition class of S3 over 𝕜[S3], conjugation action and grading coaction.
YDModule s3_transposition_yd();
/// Adjoint action with regular coaction; left-left over any Hopf algebra.
YDModule adjoint_regular_yd(const BialgebraPtr& h);
/// Evaluation action and conjugation coaction over 𝕜(G).
YDModule function_algebra_yd(const Group& g, const std::vector<std::size_t>& subset);

/// All left-left instances used by the test and acceptance suites, passing and broken.
std::vector<NamedYD> catalog_yd();
/// Look up by name in catalog_yd(); throws std::invalid_argument.
NamedYD catalog_yd(const std::string& name);

}  // namespace hopfkit
