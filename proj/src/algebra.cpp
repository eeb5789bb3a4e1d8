#include "hopfkit/algebra.hpp"

#include <algorithm>
#include <utility>

namespace hopfkit {

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

Vec densify(const SparseVec& s, std::size_t n) {
  Vec v(n);
  for (const auto& t : s) v[t.index] += t.coeff;
  return v;
}

namespace {

std::vector<std::vector<std::string>> legs_of(const std::vector<std::string>& basis, std::size_t legs) {
  return std::vector<std::vector<std::string>>(legs, basis);
}

Tensor as_tensor(const Vec& v) { return Tensor({v.size()}, v); }

Tensor scalar_tensor(const Scalar& s) { return Tensor({1}, {s}); }

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(std::string name, std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit)
    : name_(std::move(name)), basis_(std::move(basis)), mult_(std::move(mult)), unit_(std::move(unit)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw StructuralError(name_ + ": algebra dimension must be positive");
  if (mult_.size() != n * n)
    throw StructuralError(name_ + ": multiplication table has " + std::to_string(mult_.size()) +
                          " entries, expected " + std::to_string(n * n));
  if (unit_.size() != n) throw StructuralError(name_ + ": unit vector has wrong length");
  for (auto& entry : mult_) {
    for (const auto& t : entry)
      if (t.index >= n) throw StructuralError(name_ + ": multiplication index out of range");
    // Canonical sparse form: merge duplicates, drop zeros, sort.
    entry = sparsify(densify(entry, n));
  }
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : product(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

Tensor Algebra::multiply_legwise(const Tensor& x, const Tensor& y) const {
  if (x.shape() != y.shape()) throw StructuralError("legwise product of mismatched tensors");
  Tensor out(x.shape());
  const std::size_t legs = x.legs();
  for (std::size_t fx = 0; fx < x.size(); ++fx) {
    if (x[fx].is_zero()) continue;
    auto ix = x.unflatten(fx);
    for (std::size_t fy = 0; fy < y.size(); ++fy) {
      if (y[fy].is_zero()) continue;
      auto iy = y.unflatten(fy);
      // Expand the product of pure tensors leg by leg.
      std::vector<std::pair<std::size_t, Scalar>> acc{{0, x[fx] * y[fy]}};
      for (std::size_t l = 0; l < legs; ++l) {
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (const auto& [flat, c] : acc)
          for (const auto& t : product(ix[l], iy[l])) next.emplace_back(flat * dim() + t.index, c * t.coeff);
        acc = std::move(next);
      }
      for (const auto& [flat, c] : acc) out[flat] += c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coalgebra

Coalgebra::Coalgebra(std::string name, std::vector<std::string> basis, std::vector<std::vector<PairTerm>> comult,
                     Vec counit)
    : name_(std::move(name)), basis_(std::move(basis)), comult_(std::move(comult)), counit_(std::move(counit)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw StructuralError(name_ + ": coalgebra dimension must be positive");
  if (comult_.size() != n) throw StructuralError(name_ + ": comultiplication must list every basis element");
  if (counit_.size() != n) throw StructuralError(name_ + ": counit vector has wrong length");
  for (auto& terms : comult_) {
    Vec dense(n * n);
    for (const auto& t : terms) {
      if (t.left >= n || t.right >= n) throw StructuralError(name_ + ": comultiplication index out of range");
      dense[t.left * n + t.right] += t.coeff;
    }
    terms.clear();
    for (std::size_t f = 0; f < n * n; ++f)
      if (!dense[f].is_zero()) terms.push_back({f / n, f % n, dense[f]});
  }
}

Tensor Coalgebra::comultiply(const Vec& a) const {
  const std::size_t n = dim();
  Tensor out({n, n});
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : comult_[i]) out[t.left * n + t.right] += a[i] * t.coeff;
  }
  return out;
}

Scalar Coalgebra::counit(const Vec& a) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !counit_[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Tensor Coalgebra::comultiply_leg(const Tensor& t, std::size_t leg) const {
  const std::size_t n = dim();
  auto shape = t.shape();
  shape.insert(shape.begin() + static_cast<long>(leg) + 1, n);
  Tensor out(shape);
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    auto idx = t.unflatten(f);
    for (const auto& term : comult_[idx[leg]]) {
      std::size_t flat = 0;
      for (std::size_t l = 0; l < idx.size(); ++l) {
        if (l == leg) {
          flat = (flat * n + term.left) * n + term.right;
        } else {
          flat = flat * t.shape()[l] + idx[l];
        }
      }
      out[flat] += t[f] * term.coeff;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bialgebra

Bialgebra::Bialgebra(std::string name, AlgebraPtr algebra, CoalgebraPtr coalgebra, std::optional<Matrix> antipode)
    : name_(std::move(name)), algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)),
      antipode_(std::move(antipode)) {
  if (!algebra_ || !coalgebra_) throw StructuralError(name_ + ": missing algebra or coalgebra");
  if (algebra_->dim() != coalgebra_->dim())
    throw StructuralError(name_ + ": algebra and coalgebra dimensions differ");
  if (algebra_->basis() != coalgebra_->basis()) throw StructuralError(name_ + ": algebra and coalgebra bases differ");
  if (antipode_) {
    if (antipode_->rows() != dim() || antipode_->cols() != dim())
      throw StructuralError(name_ + ": antipode matrix has wrong shape");
    antipode_inverse_ = inverse(*antipode_);
  }
}

HopfKind Bialgebra::kind() const {
  if (!antipode_) return HopfKind::bialgebra;
  return antipode_inverse_ ? HopfKind::hopf_bijective : HopfKind::hopf;
}

const Matrix& Bialgebra::antipode_matrix() const {
  if (!antipode_) throw RefusedError(name_ + ": requires an antipode");
  return *antipode_;
}

const Matrix& Bialgebra::antipode_inverse_matrix() const {
  if (!antipode_inverse_) throw RefusedError(name_ + ": requires bijective antipode");
  return *antipode_inverse_;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify(const Algebra& a) {
  const std::size_t n = a.dim();
  Axis basis{"e", a.basis()};
  VerificationReport report(a.name());

  report.add(verify_identity({"associativity", "(ab)c = a(bc)", {
                                  {"a", a.basis()}, {"b", a.basis()}, {"c", a.basis()}},
                              legs_of(a.basis(), 1), [&](const std::vector<std::size_t>& t) {
                                Vec ab = a.multiply_basis(t[0], t[1]);
                                Vec bc = a.multiply_basis(t[1], t[2]);
                                return std::pair{as_tensor(a.multiply(ab, a.basis_element(t[2]))),
                                                 as_tensor(a.multiply(a.basis_element(t[0]), bc))};
                              }}));
  report.add(verify_identity({"unit law (left)", "1·a = a", {basis}, legs_of(a.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{as_tensor(a.multiply(a.unit(), a.basis_element(t[0]))),
                                                 as_tensor(unit_vec(n, t[0]))};
                              }}));
  report.add(verify_identity({"unit law (right)", "a·1 = a", {basis}, legs_of(a.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{as_tensor(a.multiply(a.basis_element(t[0]), a.unit())),
                                                 as_tensor(unit_vec(n, t[0]))};
                              }}));
  return report;
}

VerificationReport verify(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Axis basis{"e", c.basis()};
  VerificationReport report(c.name());

  report.add(verify_identity({"coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", {basis}, legs_of(c.basis(), 3),
                              [&](const std::vector<std::size_t>& t) {
                                Tensor d = c.comultiply(unit_vec(n, t[0]));
                                return std::pair{c.comultiply_leg(d, 0), c.comultiply_leg(d, 1)};
                              }}));
  report.add(verify_identity({"counit law (left)", "(ε⊗id)Δ = id", {basis}, legs_of(c.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                Vec out(n);
                                for (const auto& term : c.coproduct(t[0]))
                                  out[term.right] += c.counit_vector()[term.left] * term.coeff;
                                return std::pair{as_tensor(out), as_tensor(unit_vec(n, t[0]))};
                              }}));
  report.add(verify_identity({"counit law (right)", "(id⊗ε)Δ = id", {basis}, legs_of(c.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                Vec out(n);
                                for (const auto& term : c.coproduct(t[0]))
                                  out[term.left] += c.counit_vector()[term.right] * term.coeff;
                                return std::pair{as_tensor(out), as_tensor(unit_vec(n, t[0]))};
                              }}));
  return report;
}

namespace {

// m∘(F⊗G)∘Δ' (a), where Δ' is Δ or its flip.
Vec convolve_maps(const Bialgebra& b, const Matrix& left, const Matrix& right, const Vec& a, bool flipped) {
  const std::size_t n = b.dim();
  Tensor d = b.comultiply(a);
  Vec out(n);
  for (std::size_t f = 0; f < d.size(); ++f) {
    if (d[f].is_zero()) continue;
    std::size_t p = f / n, q = f % n;
    if (flipped) std::swap(p, q);
    axpy(out, d[f], b.multiply(left.column(p), right.column(q)));
  }
  return out;
}

}  // namespace

VerificationReport verify(const Bialgebra& b, Level level) {
  VerificationReport report(b.name());
  const std::size_t n = b.dim();
  const Algebra& alg = b.algebra();
  const Coalgebra& co = b.coalgebra();
  if (level == Level::algebra || level >= Level::bialgebra) report.merge(verify(alg));
  if (level == Level::coalgebra || level >= Level::bialgebra) report.merge(verify(co));
  if (level < Level::bialgebra) return report;

  Axis a_axis{"a", b.basis()};
  Axis b_axis{"b", b.basis()};
  report.add(verify_identity({"comultiplication multiplicative", "Δ(ab) = Δ(a)Δ(b)", {a_axis, b_axis},
                              legs_of(b.basis(), 2), [&](const std::vector<std::size_t>& t) {
                                Tensor lhs = co.comultiply(alg.multiply_basis(t[0], t[1]));
                                Tensor rhs = alg.multiply_legwise(co.comultiply(unit_vec(n, t[0])),
                                                                  co.comultiply(unit_vec(n, t[1])));
                                return std::pair{lhs, rhs};
                              }}));
  report.add(verify_identity({"counit multiplicative", "ε(ab) = ε(a)ε(b)", {a_axis, b_axis}, {{"1"}},
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{scalar_tensor(co.counit(alg.multiply_basis(t[0], t[1]))),
                                                 scalar_tensor(co.counit_vector()[t[0]] * co.counit_vector()[t[1]])};
                              }}));
  report.add(verify_identity({"comultiplication unital", "Δ(1) = 1⊗1", {}, legs_of(b.basis(), 2),
                              [&](const std::vector<std::size_t>&) {
                                Tensor rhs({n, n});
                                for (std::size_t i = 0; i < n; ++i)
                                  for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = alg.unit()[i] * alg.unit()[j];
                                return std::pair{co.comultiply(alg.unit()), rhs};
                              }}));
  report.add(verify_identity({"counit unital", "ε(1) = 1", {}, {{"1"}}, [&](const std::vector<std::size_t>&) {
                                return std::pair{scalar_tensor(co.counit(alg.unit())), scalar_tensor(Scalar(1))};
                              }}));
  if (level < Level::hopf) return report;

  if (!b.has_antipode()) {
    report.add(make_check("antipode present", "S given", false, "no antipode supplied"));
    return report;
  }
  const Matrix& s = b.antipode_matrix();
  const Matrix id = Matrix::identity(n);
  auto eps_unit = [&](std::size_t i) { return as_tensor(scaled(alg.unit(), co.counit_vector()[i])); };
  report.add(verify_identity({"antipode (left)", "m(S⊗id)Δ = 1ε", {a_axis}, legs_of(b.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{as_tensor(convolve_maps(b, s, id, unit_vec(n, t[0]), false)),
                                                 eps_unit(t[0])};
                              }}));
  report.add(verify_identity({"antipode (right)", "m(id⊗S)Δ = 1ε", {a_axis}, legs_of(b.basis(), 1),
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{as_tensor(convolve_maps(b, id, s, unit_vec(n, t[0]), false)),
                                                 eps_unit(t[0])};
                              }}));
  if (b.has_bijective_antipode()) {
    const Matrix& si = b.antipode_inverse_matrix();
    report.add(make_check("antipode inverse", "S∘S⁻¹ = S⁻¹∘S = id", s * si == id && si * s == id,
                          "computed inverse is not two-sided"));
    report.add(verify_identity({"inverse antipode of co-opposite (left)", "m(S⁻¹⊗id)Δ^cop = 1ε", {a_axis},
                                legs_of(b.basis(), 1), [&](const std::vector<std::size_t>& t) {
                                  return std::pair{as_tensor(convolve_maps(b, si, id, unit_vec(n, t[0]), true)),
                                                   eps_unit(t[0])};
                                }}));
    report.add(verify_identity({"inverse antipode of co-opposite (right)", "m(id⊗S⁻¹)Δ^cop = 1ε", {a_axis},
                                legs_of(b.basis(), 1), [&](const std::vector<std::size_t>& t) {
                                  return std::pair{as_tensor(convolve_maps(b, id, si, unit_vec(n, t[0]), true)),
                                                   eps_unit(t[0])};
                                }}));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Opposite structures

namespace {

std::optional<Matrix> inverse_or_none(const Bialgebra& b) {
  if (b.has_bijective_antipode()) return b.antipode_inverse_matrix();
  return std::nullopt;
}

AlgebraPtr opposite_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVec> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = a.product(j, i);
  return std::make_shared<const Algebra>(a.name() + "^op", a.basis(), std::move(mult), a.unit());
}

CoalgebraPtr co_opposite_coalgebra(const Coalgebra& c) {
  std::vector<std::vector<PairTerm>> comult(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (const auto& t : c.coproduct(i)) comult[i].push_back({t.right, t.left, t.coeff});
  return std::make_shared<const Coalgebra>(c.name() + "^cop", c.basis(), std::move(comult), c.counit_vector());
}

}  // namespace

BialgebraPtr opposite(const BialgebraPtr& b) {
  return std::make_shared<const Bialgebra>(b->name() + "^op", opposite_algebra(b->algebra()), b->coalgebra_ptr(),
                                           inverse_or_none(*b));
}

BialgebraPtr co_opposite(const BialgebraPtr& b) {
  return std::make_shared<const Bialgebra>(b->name() + "^cop", b->algebra_ptr(),
                                           co_opposite_coalgebra(b->coalgebra()), inverse_or_none(*b));
}

BialgebraPtr op_cop(const BialgebraPtr& b) {
  return std::make_shared<const Bialgebra>(b->name() + "^op cop", opposite_algebra(b->algebra()),
                                           co_opposite_coalgebra(b->coalgebra()), b->antipode());
}

Tensor iterated_comultiply(const Coalgebra& c, const Vec& element, std::size_t legs) {
  if (legs == 0) throw StructuralError("iterated comultiplication needs at least one leg");
  Tensor left = as_tensor(element);
  Tensor right = left;
  for (std::size_t k = 1; k < legs; ++k) {
    left = c.comultiply_leg(left, 0);
    right = c.comultiply_leg(right, k - 1);
  }
  if (!(left == right))
    throw StructuralError(c.name() + ": iterated comultiplication depends on bracketing (not coassociative)");
  return left;
}

VerificationReport antipode_as_anti_morphisms(const Bialgebra& h) {
  VerificationReport report(h.name() + " antipode");
  const std::size_t n = h.dim();
  const Matrix& s = h.antipode_matrix();
  const Algebra& alg = h.algebra();
  const Coalgebra& co = h.coalgebra();
  Axis a_axis{"a", h.basis()};
  Axis b_axis{"b", h.basis()};

  report.add(verify_identity({"antipode algebra anti-homomorphism", "S(ab) = S(b)S(a)", {a_axis, b_axis},
                              legs_of(h.basis(), 1), [&](const std::vector<std::size_t>& t) {
                                return std::pair{as_tensor(s.apply(alg.multiply_basis(t[0], t[1]))),
                                                 as_tensor(alg.multiply(s.column(t[1]), s.column(t[0])))};
                              }}));
  report.add(verify_identity({"antipode unital", "S(1) = 1", {}, legs_of(h.basis(), 1),
                              [&](const std::vector<std::size_t>&) {
                                return std::pair{as_tensor(s.apply(alg.unit())), as_tensor(alg.unit())};
                              }}));
  report.add(verify_identity({"antipode coalgebra anti-homomorphism", "Δ∘S = (S⊗S)∘Δ^cop", {a_axis},
                              legs_of(h.basis(), 2), [&](const std::vector<std::size_t>& t) {
                                Tensor lhs = co.comultiply(s.column(t[0]));
                                Tensor rhs({n, n});
                                for (const auto& term : co.coproduct(t[0])) {
                                  Vec sl = s.column(term.right), sr = s.column(term.left);
                                  for (std::size_t p = 0; p < n; ++p)
                                    for (std::size_t q = 0; q < n; ++q)
                                      if (!sl[p].is_zero() && !sr[q].is_zero())
                                        rhs[p * n + q] += term.coeff * sl[p] * sr[q];
                                }
                                return std::pair{lhs, rhs};
                              }}));
  report.add(verify_identity({"antipode counital", "ε∘S = ε", {a_axis}, {{"1"}},
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{scalar_tensor(co.counit(s.column(t[0]))),
                                                 scalar_tensor(co.counit_vector()[t[0]])};
                              }}));
  return report;
}

std::optional<unsigned> antipode_order(const Bialgebra& h, unsigned limit) {
  const Matrix& s = h.antipode_matrix();
  const Matrix id = Matrix::identity(h.dim());
  Matrix power = s;
  for (unsigned k = 1; k <= limit; ++k) {
    if (power == id) return k;
    power = power * s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Linear maps

LinearMap identity_map(std::size_t n) { return {"id", Matrix::identity(n), MapKind::morphism}; }

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  MapKind kind = outer.kind == inner.kind ? MapKind::morphism : MapKind::anti_morphism;
  return {outer.name + "∘" + inner.name, outer.matrix * inner.matrix, kind};
}

LinearMap antipode_map(const Bialgebra& h) { return {"S", h.antipode_matrix(), MapKind::anti_morphism}; }

LinearMap antipode_inverse_map(const Bialgebra& h) {
  return {"S⁻¹", h.antipode_inverse_matrix(), MapKind::anti_morphism};
}

LinearMap counit_unit_map(const Bialgebra& b) {
  const std::size_t n = b.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = b.algebra().unit()[i] * b.coalgebra().counit_vector()[j];
  return {"1ε", m, MapKind::morphism};
}

VerificationReport verify_algebra_map(const LinearMap& t, const Algebra& source, const Algebra& target) {
  if (t.source_dim() != source.dim() || t.target_dim() != target.dim())
    throw StructuralError("map " + t.name + " does not match algebra dimensions");
  VerificationReport report(t.name);
  const bool anti = t.kind == MapKind::anti_morphism;
  report.add(verify_identity({"map unital", "T(1) = 1", {}, legs_of(target.basis(), 1),
                              [&](const std::vector<std::size_t>&) {
                                return std::pair{as_tensor(t.apply(source.unit())), as_tensor(target.unit())};
                              }}));
  report.add(verify_identity({anti ? "map anti-multiplicative" : "map multiplicative",
                              anti ? "T(ab) = T(b)T(a)" : "T(ab) = T(a)T(b)",
                              {{"a", source.basis()}, {"b", source.basis()}}, legs_of(target.basis(), 1),
                              [&](const std::vector<std::size_t>& i) {
                                Vec ta = t.matrix.column(i[0]), tb = t.matrix.column(i[1]);
                                Vec rhs = anti ? target.multiply(tb, ta) : target.multiply(ta, tb);
                                return std::pair{as_tensor(t.apply(source.multiply_basis(i[0], i[1]))),
                                                 as_tensor(rhs)};
                              }}));
  return report;
}

VerificationReport verify_coalgebra_map(const LinearMap& t, const Coalgebra& source, const Coalgebra& target) {
  if (t.source_dim() != source.dim() || t.target_dim() != target.dim())
    throw StructuralError("map " + t.name + " does not match coalgebra dimensions");
  VerificationReport report(t.name);
  const bool anti = t.kind == MapKind::anti_morphism;
  const std::size_t m = target.dim();
  report.add(verify_identity({"map counital", "ε'∘T = ε", {{"a", source.basis()}}, {{"1"}},
                              [&](const std::vector<std::size_t>& i) {
                                return std::pair{scalar_tensor(target.counit(t.matrix.column(i[0]))),
                                                 scalar_tensor(source.counit_vector()[i[0]])};
                              }}));
  report.add(verify_identity({anti ? "map anti-comultiplicative" : "map comultiplicative",
                              anti ? "Δ'∘T = (T⊗T)∘Δ^cop" : "Δ'∘T = (T⊗T)∘Δ", {{"a", source.basis()}},
                              legs_of(target.basis(), 2), [&](const std::vector<std::size_t>& i) {
                                Tensor lhs = target.comultiply(t.matrix.column(i[0]));
                                Tensor rhs({m, m});
                                for (const auto& term : source.coproduct(i[0])) {
                                  std::size_t l = anti ? term.right : term.left;
                                  std::size_t r = anti ? term.left : term.right;
                                  Vec tl = t.matrix.column(l), tr = t.matrix.column(r);
                                  for (std::size_t p = 0; p < m; ++p)
                                    for (std::size_t q = 0; q < m; ++q)
                                      if (!tl[p].is_zero() && !tr[q].is_zero())
                                        rhs[p * m + q] += term.coeff * tl[p] * tr[q];
                                }
                                return std::pair{lhs, rhs};
                              }}));
  return report;
}

}  // namespace hopfkit
