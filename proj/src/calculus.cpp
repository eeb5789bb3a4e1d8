#include "hopfkit/calculus.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "hopfkit/parallel.hpp"

namespace hopfkit {

namespace {

Tensor as_tensor(const Vec& v) { return Tensor({v.size()}, v); }

void check_shapes(const FODC& c) {
  if (!c.bialgebra) throw StructuralError("calculus without bialgebra");
  const std::size_t n = c.bialgebra->dim();
  for (const auto& p : c.partials)
    if (p.rows() != n || p.cols() != n) throw StructuralError("partial derivative matrix has wrong shape");
  if (c.action.dim != c.dim()) throw StructuralError("generator action and partials disagree on dim V");
  if (c.action.action.size() != n) throw StructuralError("generator action does not match the algebra");
  if (c.coaction && c.coaction->dim() != c.dim()) throw StructuralError("coaction carrier dimension differs");
}

std::vector<std::string> generator_labels(const FODC& c) {
  if (c.labels.size() == c.dim()) return c.labels;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.dim(); ++i) out.push_back("e" + std::to_string(i));
  return out;
}

Tensor coproduct_of(const Bialgebra& b, const Vec& f) { return b.comultiply(f); }

}  // namespace

Tensor differential(const FODC& c, const Vec& f) {
  check_shapes(c);
  const std::size_t n = c.bialgebra->dim(), d = c.dim();
  Tensor out({d, n});
  for (std::size_t i = 0; i < d; ++i) {
    Vec di = c.partials[i].apply(f);
    for (std::size_t a = 0; a < n; ++a) out.at({i, a}) = di[a];
  }
  return out;
}

VerificationReport check_fodc(const FODC& c) {
  check_shapes(c);
  const Bialgebra& b = *c.bialgebra;
  const Algebra& alg = b.algebra();
  const std::size_t d = c.dim();
  const auto gens = generator_labels(c);
  VerificationReport report("first-order calculus over " + b.name());
  report.merge(c.action.verify(), "action: ");
  if (!report.passed()) return report;

  Axis f{"f", b.basis()}, g{"g", b.basis()}, i{"i", gens};
  report.add(verify_identity(
      {"twisted leibniz", "∂^i(fg) = ∂^i(f)g + λ^i_k(f_(1))f_(2)∂^k(g)", {f, g, i}, {b.basis()},
       [&](const std::vector<std::size_t>& t) {
         Vec ef = alg.basis_element(t[0]), eg = alg.basis_element(t[1]);
         Vec lhs = c.partials[t[2]].apply(alg.multiply_basis(t[0], t[1]));
         Vec rhs = alg.multiply(c.partials[t[2]].apply(ef), eg);
         for (const auto& term : b.coalgebra().coproduct(t[0]))
           for (std::size_t k = 0; k < d; ++k) {
             const Scalar& l = c.action.action[term.left](t[2], k);
             if (l.is_zero()) continue;
             axpy(rhs, l * term.coeff, alg.multiply(alg.basis_element(term.right), c.partials[k].apply(eg)));
           }
         return std::pair{as_tensor(lhs), as_tensor(rhs)};
       }}));

  FreeBimodule gamma(rule_from_left_module(c.bialgebra, c.action));
  report.add(verify_identity({"leibniz", "d(fg) = df.g + f.dg", {f, g}, {gens, b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec ef = alg.basis_element(t[0]), eg = alg.basis_element(t[1]);
                                Tensor rhs = gamma.right_act(differential(c, ef), eg);
                                rhs += gamma.left_act(ef, differential(c, eg));
                                return std::pair{differential(c, alg.multiply_basis(t[0], t[1])), rhs};
                              }}));
  return report;
}

VerificationReport check_right_covariance(const FODC& c) {
  check_shapes(c);
  const Bialgebra& b = *c.bialgebra;
  const Algebra& alg = b.algebra();
  const std::size_t n = b.dim(), d = c.dim();
  const auto gens = generator_labels(c);
  Axis i{"i", gens}, f{"f", b.basis()};
  VerificationReport report("right covariance of the calculus over " + b.name());
  auto apply_first_leg = [&](const std::function<Vec(const Vec&)>& op, const Tensor& t) {
    Tensor out({n, n});
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& x = t.at({p, q});
        if (x.is_zero()) continue;
        Vec image = op(alg.basis_element(p));
        for (std::size_t s = 0; s < n; ++s)
          if (!image[s].is_zero()) out.at({s, q}) += x * image[s];
      }
    return out;
  };
  report.add(verify_identity({"derivation right comodule map", "Δ∘∂^i = (∂^i⊗id)∘Δ", {i, f}, {b.basis(), b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                const Matrix& p = c.partials[t[0]];
                                Vec ef = alg.basis_element(t[1]);
                                return std::pair{coproduct_of(b, p.apply(ef)),
                                                 apply_first_leg([&](const Vec& v) { return p.apply(v); },
                                                                 coproduct_of(b, ef))};
                              }}));
  report.add(verify_identity({"vector field right covariance", "Δ∘(1⊗α)^∂ = ((1⊗α)^∂⊗id)∘Δ", {i, f},
                              {b.basis(), b.basis()}, [&](const std::vector<std::size_t>& t) {
                                Tensor x({n, d});
                                for (std::size_t a = 0; a < n; ++a) x.at({a, t[0]}) = alg.unit()[a];
                                auto field = [&](const Vec& v) { return cartan_action(c, x, v); };
                                Vec ef = alg.basis_element(t[1]);
                                return std::pair{coproduct_of(b, field(ef)),
                                                 apply_first_leg(field, coproduct_of(b, ef))};
                              }}));
  return report;
}

Vec cartan_action(const FODC& c, const Tensor& x, const Vec& f) { return pair(*c.bialgebra, x, differential(c, f)); }

VerificationReport check_cartan_linearity(const FODC& c) {
  check_shapes(c);
  const Bialgebra& b = *c.bialgebra;
  const Algebra& alg = b.algebra();
  const std::size_t n = b.dim(), d = c.dim();
  std::vector<std::string> duals;
  for (const auto& l : generator_labels(c)) duals.push_back(l + "^");
  Axis a{"a", b.basis()}, cc{"c", b.basis()}, i{"i", duals}, f{"f", b.basis()};
  VerificationReport report("vector fields over " + b.name());
  report.add(verify_identity({"vector field left linear", "(a.X)^∂(f) = a X^∂(f)", {a, cc, i, f}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Tensor x({n, d}), ax({n, d});
                                x.at({t[1], t[2]}) = Scalar(1);
                                Vec prod = alg.multiply_basis(t[0], t[1]);
                                for (std::size_t s = 0; s < n; ++s) ax.at({s, t[2]}) = prod[s];
                                Vec ef = alg.basis_element(t[3]);
                                return std::pair{as_tensor(cartan_action(c, ax, ef)),
                                                 as_tensor(alg.multiply(alg.basis_element(t[0]),
                                                                        cartan_action(c, x, ef)))};
                              }}));
  report.add(verify_identity({"vector field on dual basis", "(1⊗e^i)^∂ = ∂^i", {i, f}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Tensor x({n, d});
                                for (std::size_t s = 0; s < n; ++s) x.at({s, t[0]}) = alg.unit()[s];
                                Vec ef = alg.basis_element(t[1]);
                                return std::pair{as_tensor(cartan_action(c, x, ef)),
                                                 as_tensor(c.partials[t[0]].apply(ef))};
                              }}));
  return report;
}

std::vector<Vec> woronowicz_functionals(const FODC& c) {
  check_shapes(c);
  const Bialgebra& b = *c.bialgebra;
  const std::size_t n = b.dim();
  std::vector<Vec> out;
  for (const auto& p : c.partials) {
    Vec chi(n);
    for (std::size_t a = 0; a < n; ++a) chi[a] = b.counit(p.column(a));
    out.push_back(std::move(chi));
  }
  return out;
}

Vec convolution(const Bialgebra& b, const Vec& phi, const Vec& psi) {
  const std::size_t n = b.dim();
  if (phi.size() != n || psi.size() != n) throw StructuralError("convolution: functional length mismatch");
  Vec out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& t : b.coalgebra().coproduct(a))
      if (!phi[t.left].is_zero() && !psi[t.right].is_zero()) out[a] += t.coeff * phi[t.left] * psi[t.right];
  return out;
}

bool BracketTable::closed() const {
  return std::all_of(constants.begin(), constants.end(), [](const auto& c) { return c.has_value(); });
}

bool BracketTable::zero() const {
  return std::all_of(brackets.begin(), brackets.end(), [](const Vec& v) { return is_zero(v); });
}

BracketTable quantum_lie_bracket(const FODC& c) {
  check_shapes(c);
  const Bialgebra& b = *c.bialgebra;
  if (!b.has_bijective_antipode()) throw RefusedError("quantum_lie_bracket: requires bijective antipode");
  if (!c.coaction) throw RefusedError("quantum_lie_bracket: calculus carries no left coaction on V");
  YDModule ll = YDModule::left_left(c.bialgebra, c.action, *c.coaction);
  auto yd = check_yd(ll);
  if (!yd.passed()) throw RefusedError("quantum_lie_bracket: (V, λ, L) is not a Yetter-Drinfeld module", yd);

  YDModule dual_cop = yd_to_cop(yd_dual(ll));
  YangBaxterOperator braid = yang_baxter(dual_cop);
  const std::size_t d = c.dim(), n = b.dim();

  BracketTable table;
  table.dim = d;
  table.braiding = braid.matrix;
  table.functionals = woronowicz_functionals(c);
  const auto& chi = table.functionals;
  std::vector<Vec> products = map_indices<Vec>(d * d, [&](std::size_t ij) {
    return convolution(b, chi[ij / d], chi[ij % d]);
  });
  table.brackets = map_indices<Vec>(d * d, [&](std::size_t ij) {
    Vec out = products[ij];
    for (std::size_t mn = 0; mn < d * d; ++mn) {
      const Scalar& r = braid.matrix(mn, ij);
      if (!r.is_zero()) axpy(out, -r, products[mn]);
    }
    return out;
  });
  Matrix span(n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t a = 0; a < n; ++a) span(a, k) = chi[k][a];
  for (const auto& br : table.brackets) table.constants.push_back(solve(span, br));
  return table;
}

FODC finite_group_calculus(const Group& g, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw RefusedError("finite_group_calculus: the subset T is empty");
  for (std::size_t s : subset) {
    if (s >= g.order()) throw StructuralError("finite_group_calculus: subset element out of range");
    if (s == 0) throw RefusedError("finite_group_calculus: the identity lies in T, so ∂^e vanishes");
  }
  for (std::size_t x = 0; x < subset.size(); ++x)
    for (std::size_t y = x + 1; y < subset.size(); ++y)
      if (subset[x] == subset[y]) throw StructuralError("finite_group_calculus: repeated element in T");

  auto fun = function_algebra(g);
  const std::size_t n = g.order();
  FODC c{fun, evaluation_module(fun, subset), {}, std::nullopt, {}};
  for (std::size_t s : subset) {
    // L_s δ_a = δ_{s⁻¹a}
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      m(g.mul(g.inverse(s), a), a) += Scalar(1);
      m(a, a) -= Scalar(1);
    }
    c.partials.push_back(std::move(m));
    c.labels.push_back("e_" + g.labels[s]);
  }
  bool closed = true;
  for (std::size_t s : subset)
    for (std::size_t x = 0; x < n; ++x)
      closed = closed && std::find(subset.begin(), subset.end(), g.conjugate(x, s)) != subset.end();
  if (closed) c.coaction = conjugation_comodule(fun, g, subset);
  return c;
}

}  // namespace hopfkit
