#include "hopfkit/duality.hpp"

#include <utility>

namespace hopfkit {

namespace {

std::vector<std::string> carrier(std::size_t d, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

Tensor as_tensor(const Vec& v) { return Tensor({v.size()}, v); }

// 1⊗e^k in A⊗Ṽ, or e_i⊗1 in V⊗A.
Tensor unit_element(const FreeBimodule& m, std::size_t k) {
  Tensor t(m.shape());
  const Vec& one = m.bialgebra().algebra().unit();
  for (std::size_t c = 0; c < one.size(); ++c) {
    if (one[c].is_zero()) continue;
    if (m.presentation() == Presentation::left_free)
      t.at({c, k}) = one[c];
    else
      t.at({k, c}) = one[c];
  }
  return t;
}

}  // namespace

Vec pair(const Bialgebra& b, const Tensor& dual_element, const Tensor& element) {
  const std::size_t n = b.dim();
  if (dual_element.legs() != 2 || element.legs() != 2 || dual_element.shape()[0] != n ||
      element.shape()[1] != n || dual_element.shape()[1] != element.shape()[0])
    throw StructuralError("pair: expected A⊗Ṽ and V⊗A elements of matching dimensions");
  const std::size_t d = element.shape()[0];
  Vec out(n);
  for (std::size_t k = 0; k < d; ++k) {
    Vec left(n), right(n);
    for (std::size_t c = 0; c < n; ++c) {
      left[c] = dual_element.at({c, k});
      right[c] = element.at({k, c});
    }
    if (is_zero(left) || is_zero(right)) continue;
    out = out + b.algebra().multiply(left, right);
  }
  return out;
}

FreeBimodule dual_bimodule(const FreeBimodule& m) {
  auto report = m.rule().verify();
  if (!report.passed()) throw RefusedError("dualize: input commutation rule is invalid", report);
  const CommutationRule& rule = m.rule();
  const std::size_t n = rule.bialgebra->dim(), d = rule.dim;
  const Presentation target =
      rule.presentation == Presentation::right_free ? Presentation::left_free : Presentation::right_free;
  CommutationRule out{rule.bialgebra, d, target, std::vector<Vec>(n * d * d)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) out(j, i, k) = rule(j, k, i);
  return FreeBimodule(std::move(out));
}

DualFreeBimodule dualize(const FreeBimodule& source) {
  if (source.presentation() != Presentation::right_free)
    throw StructuralError("dualize expects a V⊗A presentation");
  return {source, dual_bimodule(source)};
}

VerificationReport check_pairing(const DualFreeBimodule& d) {
  const FreeBimodule& src = d.source;
  const FreeBimodule& dual = d.dual;
  const Bialgebra& b = src.bialgebra();
  const Algebra& alg = b.algebra();
  const std::size_t dim = src.dim();
  Axis a{"a", b.basis()}, c{"c", b.basis()}, bb{"b", b.basis()}, k{"k", carrier(dim, "e^")},
      i{"i", carrier(dim, "e")};
  VerificationReport report("pairing of A⊗Ṽ with V⊗A");
  report.add(verify_identity({"pairing adjoint", "≪(1⊗e^k).a, e_i⊗1≫ = ≪1⊗e^k, a.(e_i⊗1)≫", {k, a, i},
                              {b.basis()}, [&](const std::vector<std::size_t>& t) {
                                Vec ea = alg.basis_element(t[1]);
                                Tensor x = unit_element(dual, t[0]), y = unit_element(src, t[2]);
                                return std::pair{as_tensor(pair(b, dual.right_act(x, ea), y)),
                                                 as_tensor(pair(b, x, src.left_act(ea, y)))};
                              }}));
  report.add(verify_identity({"pairing transpose rule", "≪1⊗e^k, a.(e_i⊗1)≫ = Λ^k_i(a)", {k, a, i}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec ea = alg.basis_element(t[1]);
                                Tensor x = unit_element(dual, t[0]), y = unit_element(src, t[2]);
                                return std::pair{as_tensor(pair(b, x, src.left_act(ea, y))),
                                                 as_tensor(src.rule()(t[1], t[0], t[2]))};
                              }}));
  // Bilinearity on basis elements X = e_c⊗e^k and x = e_i⊗e_b.
  report.add(verify_identity({"pairing left linear", "≪a.X, x≫ = a≪X, x≫", {a, c, k, i, bb}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec ea = alg.basis_element(t[0]);
                                Tensor x = dual.element(t[1], t[2]), y = src.element(t[4], t[3]);
                                return std::pair{as_tensor(pair(b, dual.left_act(ea, x), y)),
                                                 as_tensor(alg.multiply(ea, pair(b, x, y)))};
                              }}));
  report.add(verify_identity({"pairing right linear", "≪X, x.a≫ = ≪X, x≫a", {c, k, i, bb, a}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec ea = alg.basis_element(t[4]);
                                Tensor x = dual.element(t[0], t[1]), y = src.element(t[3], t[2]);
                                return std::pair{as_tensor(pair(b, x, src.right_act(y, ea))),
                                                 as_tensor(alg.multiply(pair(b, x, y), ea))};
                              }}));
  report.add(verify_identity({"pairing balanced", "≪X.a, x≫ = ≪X, a.x≫", {c, k, a, i, bb}, {b.basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec ea = alg.basis_element(t[2]);
                                Tensor x = dual.element(t[0], t[1]), y = src.element(t[4], t[3]);
                                return std::pair{as_tensor(pair(b, dual.right_act(x, ea), y)),
                                                 as_tensor(pair(b, x, src.left_act(ea, y)))};
                              }}));
  return report;
}

VerificationReport check_dual_covariance(const DualFreeBimodule& d, const BialgebraPtr& over) {
  const FreeBimodule& src = d.source;
  const FreeBimodule& dual = d.dual;
  const Bialgebra& b = src.bialgebra();
  const Algebra& alg = b.algebra();
  const Coalgebra& co = b.coalgebra();
  const std::size_t n = b.dim(), dim = src.dim();
  const LeftModule lambda = left_module_from_rule(src.rule());
  const auto dual_labels = carrier(dim, "e^");
  Axis a{"a", b.basis()}, c{"c", b.basis()}, k{"k", dual_labels}, kk{"k", carrier(dim, "e")};
  VerificationReport report("dual covariance over " + over->name());

  // (1⊗e^k).a = Σ a_(2) λ^k_i(a_(1)) ⊗ e^i
  report.add(verify_identity({"dual action from transpose", "(1⊗α).a = a_(2)⊗λ̃(a_(1))α", {k, a},
                              {b.basis(), dual_labels}, [&](const std::vector<std::size_t>& t) {
                                Tensor rhs({n, dim});
                                for (const auto& term : co.coproduct(t[1]))
                                  for (std::size_t i = 0; i < dim; ++i) {
                                    const Scalar& l = lambda.action[term.left](t[0], i);
                                    if (!l.is_zero()) rhs.at({term.right, i}) += term.coeff * l;
                                  }
                                return std::pair{dual.right_act(unit_element(dual, t[0]), alg.basis_element(t[1])),
                                                 rhs};
                              }}));

  // Source V⊗A with right coaction id⊗Δ: (id⊗Δ)(a.x) = Δ(a)·(id⊗Δ)(x).
  auto coact = [&](const Tensor& x) {
    Tensor out({dim, n, n});
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t p = 0; p < n; ++p) {
        const Scalar& v = x.at({i, p});
        if (v.is_zero()) continue;
        for (const auto& term : co.coproduct(p)) out.at({i, term.left, term.right}) += v * term.coeff;
      }
    return out;
  };
  report.add(verify_identity(
      {"source right covariance", "_MΔ(a.x) = Δ(a) _MΔ(x)", {a, kk, c}, {carrier(dim, "e"), b.basis(), b.basis()},
       [&](const std::vector<std::size_t>& t) {
         Tensor x = src.element(t[2], t[1]);
         Tensor lhs = coact(src.left_act(alg.basis_element(t[0]), x));
         Tensor y = coact(x), rhs({dim, n, n});
         for (const auto& term : co.coproduct(t[0]))
           for (std::size_t w = 0; w < n; ++w) {
             Tensor inner({dim, n});
             for (std::size_t i = 0; i < dim; ++i)
               for (std::size_t p = 0; p < n; ++p) inner.at({i, p}) = y.at({i, p, w});
             if (inner.is_zero()) continue;
             Tensor acted = src.left_act(alg.basis_element(term.left), inner);
             Vec last = alg.multiply_basis(term.right, w);
             for (std::size_t i = 0; i < dim; ++i)
               for (std::size_t p = 0; p < n; ++p) {
                 const Scalar& e = acted.at({i, p});
                 if (e.is_zero()) continue;
                 for (std::size_t s = 0; s < n; ++s)
                   if (!last[s].is_zero()) rhs.at({i, p, s}) += term.coeff * e * last[s];
               }
           }
         return std::pair{lhs, rhs};
       }}));

  auto cov = check_covariance({dual, over, std::nullopt}, Sides{false, true, false, false});
  report.merge(cov, "dual ");
  return report;
}

VerificationReport pairing_identity(const BialgebraPtr& h, const RightComodule& r) {
  if (!h->has_antipode()) throw RefusedError("pairing_identity: requires an antipode");
  const Algebra& alg = h->algebra();
  const std::size_t n = h->dim(), d = r.dim();
  const CoMatrix& rm = r.coaction;
  Axis k{"k", carrier(d, "e^")}, i{"i", carrier(d, "e")};
  VerificationReport report("pairing identity over " + h->name());
  report.merge(r.verify(), "comodule: ");
  auto delta = [&](std::size_t a, std::size_t b) { return a == b ? alg.unit() : zero_vec(n); };

  report.add(verify_identity({"antipode contraction", "R^k_j S(R^j_i) = δ^k_i 1", {k, i}, {h->basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Vec lhs(n);
                                for (std::size_t j = 0; j < d; ++j)
                                  lhs = lhs + alg.multiply(rm(t[0], j), h->apply_antipode(rm(j, t[1])));
                                return std::pair{as_tensor(lhs), as_tensor(delta(t[0], t[1]))};
                              }}));

  // The remaining checks need a genuine comodule.
  if (!report.passed()) return report;

  // Transpose coaction on Ṽ: e^k ↦ Σ_j L̃^j_k ⊗ e^j with L̃^j_k = R^k_j.
  LeftComodule transposed = transpose_comodule(r);
  // R is a left comodule over B^cop with the same matrix; S : B^cop → B is a coalgebra morphism.
  BialgebraPtr cop = co_opposite(h);
  LeftComodule over_cop{cop->coalgebra_ptr(), rm};
  LinearMap s{"S", h->antipode_matrix(), MapKind::morphism};
  auto pushed = push_forward(s, h->coalgebra_ptr(), over_cop);
  const CoMatrix& sr = pushed.left->coaction;
  report.add(verify_identity({"pairing identity", "≪Δ̃(e^k), (id⊗S)Δ(e_i)≫ = 1⟨e^k, e_i⟩", {k, i}, {h->basis()},
                              [&](const std::vector<std::size_t>& t) {
                                Tensor x({n, d}), y({d, n});
                                for (std::size_t j = 0; j < d; ++j)
                                  for (std::size_t c = 0; c < n; ++c) {
                                    x.at({c, j}) = transposed.coaction(j, t[0])[c];
                                    y.at({j, c}) = sr(j, t[1])[c];
                                  }
                                return std::pair{as_tensor(pair(*h, x, y)), as_tensor(delta(t[0], t[1]))};
                              }}));
  return report;
}

}  // namespace hopfkit
