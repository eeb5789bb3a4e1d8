#include "hopfkit/rep.hpp"

#include <utility>

namespace hopfkit {

namespace {

std::vector<std::string> carrier_labels(std::size_t d, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

Tensor matrix_tensor(const Matrix& m) { return Tensor({m.rows(), m.cols()}, m.data()); }

Tensor outer(const Vec& a, const Vec& b) {
  Tensor t({a.size(), b.size()});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) t[i * b.size() + j] = a[i] * b[j];
  }
  return t;
}

template <class M>
void check_module_shape(const M& m, const char* what) {
  if (!m.algebra) throw StructuralError(std::string(what) + ": missing algebra");
  if (m.action.size() != m.algebra->dim())
    throw StructuralError(std::string(what) + ": expected one matrix per algebra basis element");
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim) throw StructuralError(std::string(what) + ": action matrix shape");
}

template <class C>
void check_comodule_shape(const C& c, const char* what) {
  if (!c.coalgebra) throw StructuralError(std::string(what) + ": missing coalgebra");
  if (c.coaction.entries.size() != c.coaction.dim * c.coaction.dim)
    throw StructuralError(std::string(what) + ": coaction matrix shape");
  for (const auto& e : c.coaction.entries)
    if (e.size() != c.coalgebra->dim()) throw StructuralError(std::string(what) + ": coaction entry length");
}

Matrix act_with(const std::vector<Matrix>& action, std::size_t d, const Vec& a) {
  Matrix out(d, d);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].is_zero()) out += a[j] * action[j];
  return out;
}

template <class M>
VerificationReport verify_module(const M& m, bool right) {
  check_module_shape(m, right ? "right module" : "left module");
  const Algebra& a = *m.algebra;
  const auto labels = carrier_labels(m.dim);
  VerificationReport report(right ? "right module" : "left module");
  report.add(verify_identity({"module unit", right ? "ρ(1) = id" : "λ(1) = id", {}, {labels, labels},
                              [&](const std::vector<std::size_t>&) {
                                return std::pair{matrix_tensor(m.act(a.unit())),
                                                 matrix_tensor(Matrix::identity(m.dim))};
                              }}));
  report.add(verify_identity({right ? "module anti-multiplicative" : "module multiplicative",
                              right ? "ρ(ab) = ρ(b)ρ(a)" : "λ(ab) = λ(a)λ(b)",
                              {{"a", a.basis()}, {"b", a.basis()}}, {labels, labels},
                              [&](const std::vector<std::size_t>& t) {
                                Matrix lhs = m.act(a.multiply_basis(t[0], t[1]));
                                Matrix rhs = right ? m.action[t[1]] * m.action[t[0]] : m.action[t[0]] * m.action[t[1]];
                                return std::pair{matrix_tensor(lhs), matrix_tensor(rhs)};
                              }}));
  return report;
}

}  // namespace

Matrix LeftModule::act(const Vec& a) const { return act_with(action, dim, a); }
Matrix RightModule::act(const Vec& a) const { return act_with(action, dim, a); }
VerificationReport LeftModule::verify() const { return verify_module(*this, false); }
VerificationReport RightModule::verify() const { return verify_module(*this, true); }

CoMatrix CoMatrix::transpose() const {
  CoMatrix t{dim, std::vector<Vec>(entries.size())};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) t(k, i) = (*this)(i, k);
  return t;
}

VerificationReport LeftComodule::verify() const {
  check_comodule_shape(*this, "left comodule");
  const Coalgebra& c = *coalgebra;
  const std::size_t d = dim();
  Axis i_axis = index_axis("i", d), k_axis = index_axis("k", d);
  VerificationReport report("left comodule");
  report.add(verify_identity({"comodule coassociativity", "Δ(L^i_k) = L^m_k ⊗ L^i_m", {i_axis, k_axis},
                              {c.basis(), c.basis()}, [&](const std::vector<std::size_t>& t) {
                                Tensor rhs({c.dim(), c.dim()});
                                for (std::size_t m = 0; m < d; ++m)
                                  rhs += outer(coaction(m, t[1]), coaction(t[0], m));
                                return std::pair{c.comultiply(coaction(t[0], t[1])), rhs};
                              }}));
  report.add(verify_identity({"comodule counit", "ε(L^i_k) = δ^i_k", {i_axis, k_axis}, {{"1"}},
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{Tensor({1}, {c.counit(coaction(t[0], t[1]))}),
                                                 Tensor({1}, {Scalar(t[0] == t[1] ? 1 : 0)})};
                              }}));
  return report;
}

VerificationReport RightComodule::verify() const {
  check_comodule_shape(*this, "right comodule");
  const Coalgebra& c = *coalgebra;
  const std::size_t d = dim();
  Axis m_axis = index_axis("m", d), k_axis = index_axis("k", d);
  VerificationReport report("right comodule");
  report.add(verify_identity({"comodule coassociativity", "Δ(R^m_k) = R^m_j ⊗ R^j_k", {m_axis, k_axis},
                              {c.basis(), c.basis()}, [&](const std::vector<std::size_t>& t) {
                                Tensor rhs({c.dim(), c.dim()});
                                for (std::size_t j = 0; j < d; ++j)
                                  rhs += outer(coaction(t[0], j), coaction(j, t[1]));
                                return std::pair{c.comultiply(coaction(t[0], t[1])), rhs};
                              }}));
  report.add(verify_identity({"comodule counit", "ε(R^m_k) = δ^m_k", {m_axis, k_axis}, {{"1"}},
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{Tensor({1}, {c.counit(coaction(t[0], t[1]))}),
                                                 Tensor({1}, {Scalar(t[0] == t[1] ? 1 : 0)})};
                              }}));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Matrix> counit_action(const Bialgebra& b, std::size_t d) {
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < b.dim(); ++j)
    action.push_back(b.coalgebra().counit_vector()[j] * Matrix::identity(d));
  return action;
}

CoMatrix unit_comatrix(const Bialgebra& b, std::size_t d) {
  CoMatrix m{d, std::vector<Vec>(d * d, zero_vec(b.dim()))};
  for (std::size_t i = 0; i < d; ++i) m(i, i) = b.algebra().unit();
  return m;
}

}  // namespace

LeftModule trivial_left_module(const Bialgebra& b, std::size_t dim) {
  return {b.algebra_ptr(), dim, counit_action(b, dim)};
}

RightModule trivial_right_module(const Bialgebra& b, std::size_t dim) {
  return {b.algebra_ptr(), dim, counit_action(b, dim)};
}

LeftComodule trivial_left_comodule(const Bialgebra& b, std::size_t dim) {
  return {b.coalgebra_ptr(), unit_comatrix(b, dim)};
}

RightComodule trivial_right_comodule(const Bialgebra& b, std::size_t dim) {
  return {b.coalgebra_ptr(), unit_comatrix(b, dim)};
}

LeftModule left_regular_module(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : a->product(j, k)) m(t.index, k) = t.coeff;
    action.push_back(std::move(m));
  }
  return {a, n, std::move(action)};
}

RightModule transpose_module(const LeftModule& m) {
  auto report = m.verify();
  if (!report.passed()) throw RefusedError("transpose_module: input is not a left module", report);
  RightModule out{m.algebra, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(a.transpose());
  return out;
}

LeftModule transpose_module(const RightModule& m) {
  auto report = m.verify();
  if (!report.passed()) throw RefusedError("transpose_module: input is not a right module", report);
  LeftModule out{m.algebra, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(a.transpose());
  return out;
}

RightComodule transpose_comodule(const LeftComodule& c) {
  auto report = c.verify();
  if (!report.passed()) throw RefusedError("transpose_comodule: input is not a left comodule", report);
  return {c.coalgebra, c.coaction.transpose()};
}

LeftComodule transpose_comodule(const RightComodule& c) {
  auto report = c.verify();
  if (!report.passed()) throw RefusedError("transpose_comodule: input is not a right comodule", report);
  return {c.coalgebra, c.coaction.transpose()};
}

// ---------------------------------------------------------------------------

namespace {

template <class M>
PulledBack pull_back_impl(const LinearMap& t, const AlgebraPtr& domain, const M& m, bool input_right) {
  auto report = verify_algebra_map(t, *domain, *m.algebra);
  if (!report.passed()) throw RefusedError("pull_back: " + t.name + " fails its tagged property", report);
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < domain->dim(); ++j) action.push_back(m.act(t.matrix.column(j)));
  const bool right = input_right != (t.kind == MapKind::anti_morphism);
  PulledBack out;
  if (right)
    out.right = RightModule{domain, m.dim, std::move(action)};
  else
    out.left = LeftModule{domain, m.dim, std::move(action)};
  return out;
}

template <class C>
PushedForward push_forward_impl(const LinearMap& t, const CoalgebraPtr& target, const C& c, bool input_right) {
  auto report = verify_coalgebra_map(t, *c.coalgebra, *target);
  if (!report.passed()) throw RefusedError("push_forward: " + t.name + " fails its tagged property", report);
  CoMatrix image{c.coaction.dim, {}};
  for (const auto& e : c.coaction.entries) image.entries.push_back(t.apply(e));
  const bool right = input_right != (t.kind == MapKind::anti_morphism);
  PushedForward out;
  if (right)
    out.right = RightComodule{target, std::move(image)};
  else
    out.left = LeftComodule{target, std::move(image)};
  return out;
}

}  // namespace

PulledBack pull_back(const LinearMap& t, const AlgebraPtr& domain, const LeftModule& m) {
  return pull_back_impl(t, domain, m, false);
}

PulledBack pull_back(const LinearMap& t, const AlgebraPtr& domain, const RightModule& m) {
  return pull_back_impl(t, domain, m, true);
}

PushedForward push_forward(const LinearMap& t, const CoalgebraPtr& target, const LeftComodule& c) {
  return push_forward_impl(t, target, c, false);
}

PushedForward push_forward(const LinearMap& t, const CoalgebraPtr& target, const RightComodule& c) {
  return push_forward_impl(t, target, c, true);
}

}  // namespace hopfkit
