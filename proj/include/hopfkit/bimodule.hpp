#pragma once

// Free bimodules presented by commutation rules, their twists, covariance
// conditions for the free Hopf bimodule B⊗V, and assembly of bicovariant
// bimodules from right-right Yetter-Drinfeld data.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/yd.hpp"

namespace hopfkit {

/// right_free: V⊗A, right action by multiplication, left action through
/// a.(e_k⊗1) = e_i⊗Λ^i_k(a). left_free: A⊗V, left action by multiplication,
/// right action through (1⊗e_k).a = Φ^i_k(a)⊗e_i.
enum class Presentation { right_free, left_free };

std::string to_string(Presentation p);

/// Λ (right_free) or Φ (left_free). Entry (j, i, k) is the rule applied to
/// basis element e_j with output index i and generator index k.
struct CommutationRule {
  BialgebraPtr bialgebra;
  std::size_t dim = 0;
  Presentation presentation = Presentation::right_free;
  std::vector<Vec> entries;  // (j * dim + i) * dim + k

  const Vec& operator()(std::size_t j, std::size_t i, std::size_t k) const {
    return entries[(j * dim + i) * dim + k];
  }
  Vec& operator()(std::size_t j, std::size_t i, std::size_t k) { return entries[(j * dim + i) * dim + k]; }
  /// Rule applied to an arbitrary algebra element.
  Vec apply(const Vec& a, std::size_t i, std::size_t k) const;
  /// Unit and (anti)multiplicativity: Λ(ab) = Λ(a)Λ(b) resp. Φ^i_k(ab) = Φ^m_k(a)Φ^i_m(b).
  VerificationReport verify() const;

  friend bool operator==(const CommutationRule& a, const CommutationRule& b) {
    return a.dim == b.dim && a.presentation == b.presentation && a.entries == b.entries;
  }
};

/// Λ^i_k(a) = λ^i_k(a_(1)) a_(2), or λ^i_k(a_(2)) a_(1) for the co-opposite form.
CommutationRule rule_from_left_module(const BialgebraPtr& b, const LeftModule& lambda);
CommutationRule rule_from_left_module_cop(const BialgebraPtr& b, const LeftModule& lambda);
/// Φ^i_k(b) = b_(1) ρ^i_k(b_(2)), or b_(2) ρ^i_k(b_(1)) for the co-opposite form.
CommutationRule rule_from_right_module(const BialgebraPtr& b, const RightModule& rho);
CommutationRule rule_from_right_module_cop(const BialgebraPtr& b, const RightModule& rho);
/// ε applied to the rule entries: λ from Λ, ρ from Φ.
LeftModule left_module_from_rule(const CommutationRule& rule);
RightModule right_module_from_rule(const CommutationRule& rule);

/// Λ̂ : A⊗V → V⊗A, a⊗e_k ↦ e_i⊗Λ^i_k(a) (right_free), or
/// Φ̂ : V⊗A → A⊗V, e_k⊗a ↦ Φ^i_k(a)⊗e_i (left_free).
struct TwistMap {
  BialgebraPtr bialgebra;
  std::size_t dim = 0;
  Presentation presentation = Presentation::right_free;
  Matrix matrix;
};

TwistMap twist_from_rule(const CommutationRule& rule);
CommutationRule rule_from_twist(const TwistMap& twist);
/// Unit condition and the hexagon Λ̂∘(m⊗id) = (id⊗m)∘(Λ̂⊗id)∘(id⊗Λ̂), evaluated
/// through the explicit linear maps on every basis triple.
VerificationReport check_twist(const TwistMap& twist);

/// Free bimodule. Elements are tensors of shape {dim, n} (V⊗A) or {n, dim} (A⊗V).
class FreeBimodule {
 public:
  explicit FreeBimodule(CommutationRule rule);

  const CommutationRule& rule() const { return rule_; }
  const Bialgebra& bialgebra() const { return *rule_.bialgebra; }
  const BialgebraPtr& bialgebra_ptr() const { return rule_.bialgebra; }
  Presentation presentation() const { return rule_.presentation; }
  std::size_t dim() const { return rule_.dim; }
  std::vector<std::size_t> shape() const;
  std::vector<std::vector<std::string>> leg_labels() const;

  /// Basis element e_k⊗e_a (V⊗A) or e_a⊗e_k (A⊗V).
  Tensor element(std::size_t a, std::size_t k) const;
  Tensor left_act(const Vec& a, const Tensor& x) const;
  Tensor right_act(const Tensor& x, const Vec& b) const;

  /// Rule checks plus (a.x).b = a.(x.b) on basis elements.
  VerificationReport verify() const;

 private:
  CommutationRule rule_;
};

/// ε_V(x^i⊗e_i) = ε(x^i) e_i on B⊗V.
Vec epsilon_projection(const FreeBimodule& m, const Tensor& x);
/// ε_V(a.x) = ε(a)ε_V(x) and (id⊗ε_V)∘(Δ⊗id) = id on B⊗V.
VerificationReport check_epsilon_projection(const FreeBimodule& m);

/// ρ(a)v = ε_V((1⊗v).a) for a left-covariant bimodule on B⊗V.
RightModule right_action_on_generators(const FreeBimodule& m);
/// Reconstruction of the right action from ρ: (a⊗v).b = ab_(1)⊗ρ(b_(2))v,
/// or ab_(2)⊗ρ(b_(1))v when cop is set.
VerificationReport check_reconstruction(const FreeBimodule& m, bool cop = false);

/// B⊗V with left coaction Δ⊗id over the given bialgebra (B or B^cop sharing
/// the algebra), and optionally a right coaction a⊗e_k ↦ a_(1)⊗e_m⊗a_(2)R^m_k.
struct CovariantBimodule {
  FreeBimodule module;
  BialgebraPtr over;
  std::optional<RightComodule> right_coaction;
};

struct Sides {
  bool left_hopf = false;     // Δ_M(a.x) = Δ(a)Δ_M(x)
  bool left = false;          // Δ_M(x.a) = Δ_M(x)Δ(a)
  bool right = false;         // _MΔ(a.x.b) = Δ(a) _MΔ(x) Δ(b), plus right coassociativity
  bool bicomodule = false;    // (Δ_M⊗id)∘_MΔ = (id⊗_MΔ)∘Δ_M

  static Sides all() { return {true, true, true, true}; }
  /// Comma-separated subset of left-hopf, left, right, bicomodule, all.
  static Sides parse(const std::string& text);
};

VerificationReport check_covariance(const CovariantBimodule& m, Sides sides);

/// Right action from ρ, right coaction from R, both on B⊗V; refuses when the
/// input fails its compatibility check or any covariance identity fails.
CovariantBimodule bicovariant_from_yd(const YDModule& rr);

/// (Λ^cop)^i_m(a) L^m_k = L^i_m Λ^m_k(a), checked for every (a, i, k).
VerificationReport check_commutation_coaction(const CommutationRule& lambda, const CommutationRule& lambda_cop,
                                              const LeftComodule& l);

}  // namespace hopfkit
