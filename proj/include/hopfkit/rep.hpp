#pragma once

// Modules and comodules in matrix form over a fixed carrier basis, their
// transposes on the dual carrier, and transport along (anti)morphisms.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

/// Left A-module: λ(e_j) = action[j], with λ(a)e_k = λ^i_k(a) e_i, so the
/// entry (i, k) of action[j] is λ^i_k(e_j).
struct LeftModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  Matrix act(const Vec& a) const;
  VerificationReport verify() const;
  friend bool operator==(const LeftModule& a, const LeftModule& b) {
    return a.dim == b.dim && a.action == b.action;
  }
};

/// Right A-module: e_k.a = ρ^m_k(a) e_m, entry (m, k) of action[j].
struct RightModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  Matrix act(const Vec& a) const;
  VerificationReport verify() const;
  friend bool operator==(const RightModule& a, const RightModule& b) {
    return a.dim == b.dim && a.action == b.action;
  }
};

/// Matrix of coalgebra elements; entry (i, k) stored at i * dim + k.
struct CoMatrix {
  std::size_t dim = 0;
  std::vector<Vec> entries;

  const Vec& operator()(std::size_t i, std::size_t k) const { return entries[i * dim + k]; }
  Vec& operator()(std::size_t i, std::size_t k) { return entries[i * dim + k]; }
  CoMatrix transpose() const;
  friend bool operator==(const CoMatrix&, const CoMatrix&) = default;
};

/// Left C-comodule: Δ_V(e_k) = L^m_k ⊗ e_m, with Δ(L^i_k) = L^m_k ⊗ L^i_m.
struct LeftComodule {
  CoalgebraPtr coalgebra;
  CoMatrix coaction;  // L^i_k at (i, k)

  std::size_t dim() const { return coaction.dim; }
  VerificationReport verify() const;
  friend bool operator==(const LeftComodule& a, const LeftComodule& b) { return a.coaction == b.coaction; }
};

/// Right C-comodule: Δ_V(e_k) = e_m ⊗ R^m_k, with Δ(R^m_k) = R^m_j ⊗ R^j_k.
struct RightComodule {
  CoalgebraPtr coalgebra;
  CoMatrix coaction;  // R^m_k at (m, k)

  std::size_t dim() const { return coaction.dim; }
  VerificationReport verify() const;
  friend bool operator==(const RightComodule& a, const RightComodule& b) { return a.coaction == b.coaction; }
};

/// λ(a) = ε(a) id.
LeftModule trivial_left_module(const Bialgebra& b, std::size_t dim);
RightModule trivial_right_module(const Bialgebra& b, std::size_t dim);
/// L^i_k = δ^i_k 1.
LeftComodule trivial_left_comodule(const Bialgebra& b, std::size_t dim);
RightComodule trivial_right_comodule(const Bialgebra& b, std::size_t dim);
/// Left multiplication matrices on A itself.
LeftModule left_regular_module(const AlgebraPtr& a);

/// Dual carrier with the transposed matrices; ρ(ab) = ρ(b)ρ(a).
RightModule transpose_module(const LeftModule& m);
LeftModule transpose_module(const RightModule& m);
/// e^k ↦ e^m ⊗ L^k_m: the coefficient matrix is transposed.
RightComodule transpose_comodule(const LeftComodule& c);
LeftComodule transpose_comodule(const RightComodule& c);

/// Pull-back along T: domain → m.algebra. A morphism keeps the side; an
/// anti-morphism flips it. Returns the module of the resulting side.
struct PulledBack {
  std::optional<LeftModule> left;
  std::optional<RightModule> right;
};
PulledBack pull_back(const LinearMap& t, const AlgebraPtr& domain, const LeftModule& m);
PulledBack pull_back(const LinearMap& t, const AlgebraPtr& domain, const RightModule& m);

/// Push-forward along T: c.coalgebra → target, entrywise L' = T(L).
struct PushedForward {
  std::optional<LeftComodule> left;
  std::optional<RightComodule> right;
};
PushedForward push_forward(const LinearMap& t, const CoalgebraPtr& target, const LeftComodule& c);
PushedForward push_forward(const LinearMap& t, const CoalgebraPtr& target, const RightComodule& c);

}  // namespace hopfkit
