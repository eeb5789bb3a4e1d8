#include "hopfkit/bimodule.hpp"

#include <sstream>
#include <utility>

namespace hopfkit {

std::string to_string(Presentation p) { return p == Presentation::right_free ? "V⊗A" : "A⊗V"; }

namespace {

std::vector<std::string> carrier(std::size_t d, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

Tensor as_tensor(const Vec& v) { return Tensor({v.size()}, v); }

void require_module(const LeftModule& m, const char* op) {
  auto r = m.verify();
  if (!r.passed()) throw RefusedError(std::string(op) + ": input is not a left module", r);
}

void require_module(const RightModule& m, const char* op) {
  auto r = m.verify();
  if (!r.passed()) throw RefusedError(std::string(op) + ": input is not a right module", r);
}

// (I_left ⊗ M ⊗ I_right) v
Vec kron_apply(const Matrix& m, std::size_t left, std::size_t right, const Vec& v) {
  Vec out(left * m.rows() * right);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < right; ++r) {
        const Scalar& x = v[(l * m.cols() + c) * right + r];
        if (x.is_zero()) continue;
        for (std::size_t row = 0; row < m.rows(); ++row)
          if (!m(row, c).is_zero()) out[(l * m.rows() + row) * right + r] += m(row, c) * x;
      }
  return out;
}

Matrix multiplication_matrix(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) m(t.index, i * n + j) = t.coeff;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

Vec CommutationRule::apply(const Vec& a, std::size_t i, std::size_t k) const {
  Vec out = zero_vec(bialgebra->dim());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].is_zero()) axpy(out, a[j], (*this)(j, i, k));
  return out;
}

VerificationReport CommutationRule::verify() const {
  const Bialgebra& b = *bialgebra;
  const Algebra& alg = b.algebra();
  const std::size_t n = b.dim(), d = dim;
  if (entries.size() != n * d * d) throw StructuralError("commutation rule has wrong number of entries");
  for (const auto& e : entries)
    if (e.size() != n) throw StructuralError("commutation rule entry has wrong length");
  const bool lam = presentation == Presentation::right_free;
  Axis i = index_axis("i", d), k = index_axis("k", d), a{"a", b.basis()}, bb{"b", b.basis()};
  VerificationReport report(std::string("commutation rule on ") + to_string(presentation));
  report.add(verify_identity({"commutation rule unit", lam ? "Λ^i_k(1) = δ^i_k 1" : "Φ^i_k(1) = δ^i_k 1", {i, k},
                              {b.basis()}, [&](const std::vector<std::size_t>& t) {
                                Vec rhs = t[0] == t[1] ? alg.unit() : zero_vec(n);
                                return std::pair{as_tensor(apply(alg.unit(), t[0], t[1])), as_tensor(rhs)};
                              }}));
  report.add(verify_identity(
      {"commutation rule product", lam ? "Λ^i_k(ab) = Λ^i_m(a)Λ^m_k(b)" : "Φ^i_k(ab) = Φ^m_k(a)Φ^i_m(b)",
       {a, bb, i, k}, {b.basis()}, [&](const std::vector<std::size_t>& t) {
         const std::size_t x = t[0], y = t[1], ii = t[2], kk = t[3];
         Vec rhs(n);
         for (std::size_t m = 0; m < d; ++m) {
           if (lam)
             rhs = rhs + alg.multiply((*this)(x, ii, m), (*this)(y, m, kk));
           else
             rhs = rhs + alg.multiply((*this)(x, m, kk), (*this)(y, ii, m));
         }
         return std::pair{as_tensor(apply(alg.multiply_basis(x, y), ii, kk)), as_tensor(rhs)};
       }}));
  return report;
}

namespace {

CommutationRule rule_from_module_matrices(const BialgebraPtr& b, const std::vector<Matrix>& action, std::size_t d,
                                          Presentation p, bool cop) {
  const std::size_t n = b->dim();
  const Algebra& alg = b->algebra();
  CommutationRule rule{b, d, p, std::vector<Vec>(n * d * d, zero_vec(n))};
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : b->coalgebra().coproduct(j)) {
      // The module is evaluated on one tensor leg, the other leg is the algebra factor.
      const std::size_t module_leg = (p == Presentation::right_free) != cop ? t.left : t.right;
      const std::size_t algebra_leg = module_leg == t.left ? t.right : t.left;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& c = action[module_leg](i, k);
          if (!c.is_zero()) axpy(rule(j, i, k), c * t.coeff, alg.basis_element(algebra_leg));
        }
    }
  return rule;
}

}  // namespace

CommutationRule rule_from_left_module(const BialgebraPtr& b, const LeftModule& lambda) {
  require_module(lambda, "rule_from_left_module");
  return rule_from_module_matrices(b, lambda.action, lambda.dim, Presentation::right_free, false);
}

CommutationRule rule_from_left_module_cop(const BialgebraPtr& b, const LeftModule& lambda) {
  require_module(lambda, "rule_from_left_module_cop");
  return rule_from_module_matrices(b, lambda.action, lambda.dim, Presentation::right_free, true);
}

CommutationRule rule_from_right_module(const BialgebraPtr& b, const RightModule& rho) {
  require_module(rho, "rule_from_right_module");
  return rule_from_module_matrices(b, rho.action, rho.dim, Presentation::left_free, false);
}

CommutationRule rule_from_right_module_cop(const BialgebraPtr& b, const RightModule& rho) {
  require_module(rho, "rule_from_right_module_cop");
  return rule_from_module_matrices(b, rho.action, rho.dim, Presentation::left_free, true);
}

namespace {

std::vector<Matrix> counit_of_rule(const CommutationRule& rule) {
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < rule.bialgebra->dim(); ++j) {
    Matrix m(rule.dim, rule.dim);
    for (std::size_t i = 0; i < rule.dim; ++i)
      for (std::size_t k = 0; k < rule.dim; ++k) m(i, k) = rule.bialgebra->counit(rule(j, i, k));
    action.push_back(std::move(m));
  }
  return action;
}

}  // namespace

LeftModule left_module_from_rule(const CommutationRule& rule) {
  if (rule.presentation != Presentation::right_free)
    throw StructuralError("left_module_from_rule expects a rule on V⊗A");
  return {rule.bialgebra->algebra_ptr(), rule.dim, counit_of_rule(rule)};
}

RightModule right_module_from_rule(const CommutationRule& rule) {
  if (rule.presentation != Presentation::left_free)
    throw StructuralError("right_module_from_rule expects a rule on A⊗V");
  return {rule.bialgebra->algebra_ptr(), rule.dim, counit_of_rule(rule)};
}

// ---------------------------------------------------------------------------

TwistMap twist_from_rule(const CommutationRule& rule) {
  const std::size_t n = rule.bialgebra->dim(), d = rule.dim;
  TwistMap t{rule.bialgebra, d, rule.presentation, Matrix(n * d, n * d)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& x = rule(a, i, k)[c];
          if (x.is_zero()) continue;
          if (rule.presentation == Presentation::right_free)
            t.matrix(i * n + c, a * d + k) = x;  // A⊗V → V⊗A
          else
            t.matrix(c * d + i, k * n + a) = x;  // V⊗A → A⊗V
        }
  return t;
}

CommutationRule rule_from_twist(const TwistMap& twist) {
  const std::size_t n = twist.bialgebra->dim(), d = twist.dim;
  if (twist.matrix.rows() != n * d || twist.matrix.cols() != n * d) throw StructuralError("twist matrix shape");
  CommutationRule rule{twist.bialgebra, d, twist.presentation, std::vector<Vec>(n * d * d, zero_vec(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t c = 0; c < n; ++c)
          rule(a, i, k)[c] = twist.presentation == Presentation::right_free ? twist.matrix(i * n + c, a * d + k)
                                                                            : twist.matrix(c * d + i, k * n + a);
  return rule;
}

VerificationReport check_twist(const TwistMap& twist) {
  const Bialgebra& b = *twist.bialgebra;
  const std::size_t n = b.dim(), d = twist.dim;
  const Matrix m = multiplication_matrix(b.algebra());
  const Vec& one = b.algebra().unit();
  const auto v = carrier(d);
  VerificationReport report("twist on " + to_string(twist.presentation));
  const bool lam = twist.presentation == Presentation::right_free;
  Axis k = index_axis("k", d), a{"a", b.basis()}, bb{"b", b.basis()};

  if (lam) {
    report.add(verify_identity({"twist unit", "Λ̂(1⊗v) = v⊗1", {k}, {v, b.basis()},
                                [&](const std::vector<std::size_t>& t) {
                                  Vec in(n * d), rhs(d * n);
                                  for (std::size_t c = 0; c < n; ++c) {
                                    in[c * d + t[0]] = one[c];
                                    rhs[t[0] * n + c] = one[c];
                                  }
                                  return std::pair{Tensor({d, n}, twist.matrix.apply(in)), Tensor({d, n}, rhs)};
                                }}));
    report.add(verify_identity(
        {"twist hexagon", "Λ̂∘(m⊗id) = (id⊗m)∘(Λ̂⊗id)∘(id⊗Λ̂)", {a, bb, k}, {v, b.basis()},
         [&](const std::vector<std::size_t>& t) {
           // Basis vector e_a⊗e_b⊗e_k of A⊗A⊗V.
           Vec in(n * n * d);
           in[(t[0] * n + t[1]) * d + t[2]] = Scalar(1);
           Vec lhs = twist.matrix.apply(kron_apply(m, 1, d, in));
           Vec step = kron_apply(twist.matrix, n, 1, in);  // A⊗V⊗A
           step = kron_apply(twist.matrix, 1, n, step);    // V⊗A⊗A
           Vec rhs = kron_apply(m, d, 1, step);            // V⊗A
           return std::pair{Tensor({d, n}, lhs), Tensor({d, n}, rhs)};
         }}));
  } else {
    report.add(verify_identity({"twist unit", "Φ̂(v⊗1) = 1⊗v", {k}, {b.basis(), v},
                                [&](const std::vector<std::size_t>& t) {
                                  Vec in(d * n), rhs(n * d);
                                  for (std::size_t c = 0; c < n; ++c) {
                                    in[t[0] * n + c] = one[c];
                                    rhs[c * d + t[0]] = one[c];
                                  }
                                  return std::pair{Tensor({n, d}, twist.matrix.apply(in)), Tensor({n, d}, rhs)};
                                }}));
    report.add(verify_identity(
        {"twist hexagon", "Φ̂∘(id⊗m) = (m⊗id)∘(id⊗Φ̂)∘(Φ̂⊗id)", {k, a, bb}, {b.basis(), v},
         [&](const std::vector<std::size_t>& t) {
           // Basis vector e_k⊗e_a⊗e_b of V⊗A⊗A.
           Vec in(d * n * n);
           in[(t[0] * n + t[1]) * n + t[2]] = Scalar(1);
           Vec lhs = twist.matrix.apply(kron_apply(m, d, 1, in));
           Vec step = kron_apply(twist.matrix, 1, n, in);  // A⊗V⊗A
           step = kron_apply(twist.matrix, n, 1, step);    // A⊗A⊗V
           Vec rhs = kron_apply(m, 1, d, step);            // A⊗V
           return std::pair{Tensor({n, d}, lhs), Tensor({n, d}, rhs)};
         }}));
  }
  return report;
}

// ---------------------------------------------------------------------------

FreeBimodule::FreeBimodule(CommutationRule rule) : rule_(std::move(rule)) {
  if (!rule_.bialgebra) throw StructuralError("free bimodule without algebra");
  if (rule_.entries.size() != rule_.bialgebra->dim() * rule_.dim * rule_.dim)
    throw StructuralError("free bimodule: rule has wrong number of entries");
}

std::vector<std::size_t> FreeBimodule::shape() const {
  const std::size_t n = bialgebra().dim(), d = dim();
  return presentation() == Presentation::right_free ? std::vector<std::size_t>{d, n}
                                                    : std::vector<std::size_t>{n, d};
}

std::vector<std::vector<std::string>> FreeBimodule::leg_labels() const {
  if (presentation() == Presentation::right_free) return {carrier(dim()), bialgebra().basis()};
  return {bialgebra().basis(), carrier(dim())};
}

Tensor FreeBimodule::element(std::size_t a, std::size_t k) const {
  Tensor t(shape());
  if (presentation() == Presentation::right_free)
    t.at({k, a}) = Scalar(1);
  else
    t.at({a, k}) = Scalar(1);
  return t;
}

Tensor FreeBimodule::left_act(const Vec& a, const Tensor& x) const {
  const Algebra& alg = bialgebra().algebra();
  const std::size_t n = alg.dim(), d = dim();
  Tensor out(shape());
  if (presentation() == Presentation::left_free) {
    for (std::size_t k = 0; k < d; ++k) {
      Vec comp(n);
      for (std::size_t c = 0; c < n; ++c) comp[c] = x.at({c, k});
      if (is_zero(comp)) continue;
      Vec prod = alg.multiply(a, comp);
      for (std::size_t c = 0; c < n; ++c) out.at({c, k}) += prod[c];
    }
    return out;
  }
  for (std::size_t k = 0; k < d; ++k) {
    Vec comp(n);
    for (std::size_t c = 0; c < n; ++c) comp[c] = x.at({k, c});
    if (is_zero(comp)) continue;
    for (std::size_t i = 0; i < d; ++i) {
      Vec prod = alg.multiply(rule_.apply(a, i, k), comp);
      for (std::size_t c = 0; c < n; ++c) out.at({i, c}) += prod[c];
    }
  }
  return out;
}

Tensor FreeBimodule::right_act(const Tensor& x, const Vec& b) const {
  const Algebra& alg = bialgebra().algebra();
  const std::size_t n = alg.dim(), d = dim();
  Tensor out(shape());
  if (presentation() == Presentation::right_free) {
    for (std::size_t k = 0; k < d; ++k) {
      Vec comp(n);
      for (std::size_t c = 0; c < n; ++c) comp[c] = x.at({k, c});
      if (is_zero(comp)) continue;
      Vec prod = alg.multiply(comp, b);
      for (std::size_t c = 0; c < n; ++c) out.at({k, c}) += prod[c];
    }
    return out;
  }
  for (std::size_t k = 0; k < d; ++k) {
    Vec comp(n);
    for (std::size_t c = 0; c < n; ++c) comp[c] = x.at({c, k});
    if (is_zero(comp)) continue;
    for (std::size_t i = 0; i < d; ++i) {
      Vec prod = alg.multiply(comp, rule_.apply(b, i, k));
      for (std::size_t c = 0; c < n; ++c) out.at({c, i}) += prod[c];
    }
  }
  return out;
}

VerificationReport FreeBimodule::verify() const {
  const Bialgebra& b = bialgebra();
  const Algebra& alg = b.algebra();
  VerificationReport report("free bimodule on " + to_string(presentation()));
  report.merge(rule_.verify());
  Axis a{"a", b.basis()}, c{"c", b.basis()}, k = index_axis("k", dim()), bb{"b", b.basis()};
  report.add(verify_identity({"bimodule associativity", "(a.x).b = a.(x.b)", {a, c, k, bb}, leg_labels(),
                              [&](const std::vector<std::size_t>& t) {
                                Tensor x = element(t[1], t[2]);
                                Vec ea = alg.basis_element(t[0]), eb = alg.basis_element(t[3]);
                                return std::pair{right_act(left_act(ea, x), eb), left_act(ea, right_act(x, eb))};
                              }}));
  return report;
}

// ---------------------------------------------------------------------------

Vec epsilon_projection(const FreeBimodule& m, const Tensor& x) {
  const Bialgebra& b = m.bialgebra();
  const std::size_t n = b.dim(), d = m.dim();
  const Vec& eps = b.coalgebra().counit_vector();
  Vec out(d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& c = m.presentation() == Presentation::left_free ? x.at({a, k}) : x.at({k, a});
      if (!c.is_zero() && !eps[a].is_zero()) out[k] += c * eps[a];
    }
  return out;
}

VerificationReport check_epsilon_projection(const FreeBimodule& m) {
  if (m.presentation() != Presentation::left_free) throw StructuralError("epsilon projection expects B⊗V");
  const Bialgebra& b = m.bialgebra();
  const std::size_t n = b.dim(), d = m.dim();
  Axis a{"a", b.basis()}, c{"c", b.basis()}, k = index_axis("k", d);
  auto v = carrier(d);
  VerificationReport report("epsilon projection");
  report.add(verify_identity({"epsilon projection left linear", "ε_V(a.x) = ε(a)ε_V(x)", {a, c, k}, {v},
                              [&](const std::vector<std::size_t>& t) {
                                Tensor x = m.element(t[1], t[2]);
                                Vec ea = b.algebra().basis_element(t[0]);
                                return std::pair{Tensor({d}, epsilon_projection(m, m.left_act(ea, x))),
                                                 Tensor({d}, scaled(epsilon_projection(m, x), b.counit(ea)))};
                              }}));
  report.add(verify_identity({"epsilon projection counital", "(id⊗ε_V)∘(Δ⊗id) = id", {c, k}, m.leg_labels(),
                              [&](const std::vector<std::size_t>& t) {
                                Tensor out({n, d});
                                for (const auto& term : b.coalgebra().coproduct(t[0])) {
                                  Tensor inner = m.element(term.right, t[1]);
                                  Vec proj = epsilon_projection(m, inner);
                                  for (std::size_t i = 0; i < d; ++i)
                                    if (!proj[i].is_zero()) out.at({term.left, i}) += term.coeff * proj[i];
                                }
                                return std::pair{out, m.element(t[0], t[1])};
                              }}));
  return report;
}

RightModule right_action_on_generators(const FreeBimodule& m) {
  if (m.presentation() != Presentation::left_free) throw StructuralError("right_action_on_generators expects B⊗V");
  const Bialgebra& b = m.bialgebra();
  const std::size_t n = b.dim(), d = m.dim();
  RightModule rho{b.algebra_ptr(), d, {}};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix mat(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      // 1⊗e_k as a combination of basis elements.
      Tensor x({n, d});
      for (std::size_t c = 0; c < n; ++c) x.at({c, k}) = b.algebra().unit()[c];
      Vec image = epsilon_projection(m, m.right_act(x, b.algebra().basis_element(j)));
      for (std::size_t i = 0; i < d; ++i) mat(i, k) = image[i];
    }
    rho.action.push_back(std::move(mat));
  }
  return rho;
}

VerificationReport check_reconstruction(const FreeBimodule& m, bool cop) {
  RightModule rho = right_action_on_generators(m);
  const Bialgebra& b = m.bialgebra();
  const Algebra& alg = b.algebra();
  const std::size_t n = b.dim(), d = m.dim();
  Axis a{"a", b.basis()}, k = index_axis("k", d), bb{"b", b.basis()};
  VerificationReport report("right action reconstruction");
  report.add(verify_identity(
      {cop ? "right action reconstruction (cop)" : "right action reconstruction",
       cop ? "(a⊗v).b = ab_(2)⊗ρ(b_(1))v" : "(a⊗v).b = ab_(1)⊗ρ(b_(2))v", {a, k, bb}, m.leg_labels(),
       [&](const std::vector<std::size_t>& t) {
         Tensor rhs({n, d});
         for (const auto& term : b.coalgebra().coproduct(t[2])) {
           const std::size_t mult_leg = cop ? term.right : term.left;
           const std::size_t act_leg = cop ? term.left : term.right;
           Vec prod = alg.multiply_basis(t[0], mult_leg);
           for (std::size_t i = 0; i < d; ++i) {
             const Scalar& r = rho.action[act_leg](i, t[1]);
             if (r.is_zero()) continue;
             for (std::size_t c = 0; c < n; ++c)
               if (!prod[c].is_zero()) rhs.at({c, i}) += term.coeff * r * prod[c];
           }
         }
         return std::pair{m.right_act(m.element(t[0], t[1]), alg.basis_element(t[2])), rhs};
       }}));
  return report;
}

// ---------------------------------------------------------------------------

Sides Sides::parse(const std::string& text) {
  Sides s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "left-hopf")
      s.left_hopf = true;
    else if (item == "left")
      s.left = true;
    else if (item == "right")
      s.right = true;
    else if (item == "bicomodule")
      s.bicomodule = true;
    else if (item == "all")
      s = all();
    else
      throw std::invalid_argument("unknown side '" + item + "' (expected left-hopf, left, right, bicomodule, all)");
  }
  return s;
}

namespace {

// Tensors used below:
//   B⊗V             {n, d}
//   B⊗(B⊗V)         {n, n, d}   left coaction Δ⊗id
//   (B⊗V)⊗B         {n, d, n}   right coaction
//   B⊗(B⊗V)⊗B       {n, n, d, n}
//   (B⊗V)⊗B⊗B       {n, d, n, n}
class CovarianceOps {
 public:
  explicit CovarianceOps(const CovariantBimodule& m)
      : m_(m.module), alg_(m.module.bialgebra().algebra()), co_(m.over->coalgebra()), n_(alg_.dim()),
        d_(m.module.dim()), r_(m.right_coaction ? &m.right_coaction->coaction : nullptr) {}

  Tensor left_coaction(const Tensor& x) const {
    Tensor out({n_, n_, d_});
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t k = 0; k < d_; ++k) {
        const Scalar& c = x.at({a, k});
        if (c.is_zero()) continue;
        for (const auto& t : co_.coproduct(a)) out.at({t.left, t.right, k}) += c * t.coeff;
      }
    return out;
  }

  Tensor right_coaction(const Tensor& x) const {
    Tensor out({n_, d_, n_});
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t k = 0; k < d_; ++k) {
        const Scalar& c = x.at({a, k});
        if (c.is_zero()) continue;
        for (const auto& t : co_.coproduct(a))
          for (std::size_t m = 0; m < d_; ++m) {
            Vec w = alg_.multiply(alg_.basis_element(t.right), (*r_)(m, k));
            for (std::size_t s = 0; s < n_; ++s)
              if (!w[s].is_zero()) out.at({t.left, m, s}) += c * t.coeff * w[s];
          }
      }
    return out;
  }

  // Δ(a) · y for y in B⊗(B⊗V): first leg multiplied, second leg acts on B⊗V from the left.
  Tensor delta_times_left(std::size_t a, const Tensor& y) const {
    Tensor out({n_, n_, d_});
    for (const auto& t : co_.coproduct(a))
      for (std::size_t r = 0; r < n_; ++r) {
        Vec first = alg_.multiply_basis(t.left, r);
        if (is_zero(first)) continue;
        Tensor inner({n_, d_});
        for (std::size_t s = 0; s < n_; ++s)
          for (std::size_t k = 0; k < d_; ++k) inner.at({s, k}) = y.at({r, s, k});
        if (inner.is_zero()) continue;
        Tensor acted = m_.left_act(alg_.basis_element(t.right), inner);
        accumulate_bbv(out, first, acted, t.coeff);
      }
    return out;
  }

  // y · Δ(a) for y in B⊗(B⊗V).
  Tensor left_times_delta(const Tensor& y, std::size_t a) const {
    Tensor out({n_, n_, d_});
    for (const auto& t : co_.coproduct(a))
      for (std::size_t r = 0; r < n_; ++r) {
        Vec first = alg_.multiply_basis(r, t.left);
        if (is_zero(first)) continue;
        Tensor inner({n_, d_});
        for (std::size_t s = 0; s < n_; ++s)
          for (std::size_t k = 0; k < d_; ++k) inner.at({s, k}) = y.at({r, s, k});
        if (inner.is_zero()) continue;
        Tensor acted = m_.right_act(inner, alg_.basis_element(t.right));
        accumulate_bbv(out, first, acted, t.coeff);
      }
    return out;
  }

  // Δ(a) · y · Δ(b) for y in (B⊗V)⊗B.
  Tensor sandwich_right(std::size_t a, const Tensor& y, std::size_t b) const {
    Tensor out({n_, d_, n_});
    for (const auto& ta : co_.coproduct(a))
      for (const auto& tb : co_.coproduct(b))
        for (std::size_t w = 0; w < n_; ++w) {
          Tensor inner({n_, d_});
          for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t k = 0; k < d_; ++k) inner.at({u, k}) = y.at({u, k, w});
          if (inner.is_zero()) continue;
          Tensor acted = m_.right_act(m_.left_act(alg_.basis_element(ta.left), inner), alg_.basis_element(tb.left));
          Vec last = alg_.multiply(alg_.multiply_basis(ta.right, w), alg_.basis_element(tb.right));
          const Scalar c = ta.coeff * tb.coeff;
          for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t k = 0; k < d_; ++k) {
              const Scalar& e = acted.at({u, k});
              if (e.is_zero()) continue;
              for (std::size_t s = 0; s < n_; ++s)
                if (!last[s].is_zero()) out.at({u, k, s}) += c * e * last[s];
            }
        }
    return out;
  }

  // (Δ_M⊗id)∘_MΔ
  Tensor bicomodule_lhs(const Tensor& x) const {
    Tensor y = right_coaction(x), out({n_, n_, d_, n_});
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t m = 0; m < d_; ++m)
        for (std::size_t w = 0; w < n_; ++w) {
          const Scalar& c = y.at({u, m, w});
          if (c.is_zero()) continue;
          for (const auto& t : co_.coproduct(u)) out.at({t.left, t.right, m, w}) += c * t.coeff;
        }
    return out;
  }

  // (id⊗_MΔ)∘Δ_M
  Tensor bicomodule_rhs(const Tensor& x) const {
    Tensor z = left_coaction(x), out({n_, n_, d_, n_});
    for (std::size_t r = 0; r < n_; ++r) {
      Tensor inner({n_, d_});
      for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t k = 0; k < d_; ++k) inner.at({s, k}) = z.at({r, s, k});
      if (inner.is_zero()) continue;
      Tensor y = right_coaction(inner);
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t m = 0; m < d_; ++m)
          for (std::size_t w = 0; w < n_; ++w)
            if (!y.at({u, m, w}).is_zero()) out.at({r, u, m, w}) += y.at({u, m, w});
    }
    return out;
  }

  // (_MΔ⊗id)∘_MΔ and (id⊗Δ)∘_MΔ
  std::pair<Tensor, Tensor> right_coassociativity(const Tensor& x) const {
    Tensor y = right_coaction(x), lhs({n_, d_, n_, n_}), rhs({n_, d_, n_, n_});
    for (std::size_t w = 0; w < n_; ++w) {
      Tensor inner({n_, d_});
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t m = 0; m < d_; ++m) inner.at({u, m}) = y.at({u, m, w});
      if (inner.is_zero()) continue;
      Tensor z = right_coaction(inner);
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t m = 0; m < d_; ++m)
          for (std::size_t s = 0; s < n_; ++s)
            if (!z.at({u, m, s}).is_zero()) lhs.at({u, m, s, w}) += z.at({u, m, s});
    }
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t m = 0; m < d_; ++m)
        for (std::size_t w = 0; w < n_; ++w) {
          const Scalar& c = y.at({u, m, w});
          if (c.is_zero()) continue;
          for (const auto& t : co_.coproduct(w)) rhs.at({u, m, t.left, t.right}) += c * t.coeff;
        }
    return {lhs, rhs};
  }

  // (id⊗ε)∘_MΔ
  Tensor right_counit(const Tensor& x) const {
    Tensor y = right_coaction(x), out({n_, d_});
    const Vec& eps = co_.counit_vector();
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t m = 0; m < d_; ++m)
        for (std::size_t w = 0; w < n_; ++w)
          if (!y.at({u, m, w}).is_zero() && !eps[w].is_zero()) out.at({u, m}) += y.at({u, m, w}) * eps[w];
    return out;
  }

 private:
  void accumulate_bbv(Tensor& out, const Vec& first, const Tensor& acted, const Scalar& coeff) const {
    for (std::size_t p = 0; p < n_; ++p) {
      if (first[p].is_zero()) continue;
      for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t k = 0; k < d_; ++k) {
          const Scalar& e = acted.at({s, k});
          if (!e.is_zero()) out.at({p, s, k}) += coeff * first[p] * e;
        }
    }
  }

  const FreeBimodule& m_;
  const Algebra& alg_;
  const Coalgebra& co_;
  std::size_t n_, d_;
  const CoMatrix* r_;
};

}  // namespace

VerificationReport check_covariance(const CovariantBimodule& cm, Sides sides) {
  const FreeBimodule& m = cm.module;
  if (m.presentation() != Presentation::left_free) throw StructuralError("covariance checks expect B⊗V");
  if (!cm.over || cm.over->dim() != m.bialgebra().dim())
    throw StructuralError("covariance: coalgebra does not match the bimodule algebra");
  if ((sides.right || sides.bicomodule) && !cm.right_coaction)
    throw StructuralError("covariance: right coaction required for the requested sides");
  if (cm.right_coaction && (cm.right_coaction->dim() != m.dim()))
    throw StructuralError("covariance: right coaction carrier dimension differs");

  const Bialgebra& b = m.bialgebra();
  const std::size_t d = m.dim();
  CovarianceOps ops(cm);
  const auto v = carrier(d);
  Axis a{"a", b.basis()}, c{"c", b.basis()}, k{"k", v}, bb{"b", b.basis()};
  const auto& basis = b.basis();
  VerificationReport report("covariance of B⊗V over " + cm.over->name());

  if (sides.left_hopf)
    report.add(verify_identity({"left hopf module", "Δ_M(a.x) = Δ(a)Δ_M(x)", {a, c, k}, {basis, basis, v},
                                [&](const std::vector<std::size_t>& t) {
                                  Tensor x = m.element(t[1], t[2]);
                                  return std::pair{
                                      ops.left_coaction(m.left_act(b.algebra().basis_element(t[0]), x)),
                                      ops.delta_times_left(t[0], ops.left_coaction(x))};
                                }}));
  if (sides.left)
    report.add(verify_identity({"left covariance", "Δ_M(x.a) = Δ_M(x)Δ(a)", {c, k, a}, {basis, basis, v},
                                [&](const std::vector<std::size_t>& t) {
                                  Tensor x = m.element(t[0], t[1]);
                                  return std::pair{
                                      ops.left_coaction(m.right_act(x, b.algebra().basis_element(t[2]))),
                                      ops.left_times_delta(ops.left_coaction(x), t[2])};
                                }}));
  if (sides.right) {
    report.add(verify_identity({"right covariance", "_MΔ(a.x.b) = Δ(a) _MΔ(x) Δ(b)", {a, c, k, bb},
                                {basis, v, basis}, [&](const std::vector<std::size_t>& t) {
                                  Tensor x = m.element(t[1], t[2]);
                                  Tensor axb = m.right_act(m.left_act(b.algebra().basis_element(t[0]), x),
                                                           b.algebra().basis_element(t[3]));
                                  return std::pair{ops.right_coaction(axb),
                                                   ops.sandwich_right(t[0], ops.right_coaction(x), t[3])};
                                }}));
    report.add(verify_identity({"right coaction coassociativity", "(_MΔ⊗id)∘_MΔ = (id⊗Δ)∘_MΔ", {c, k},
                                {basis, v, basis, basis}, [&](const std::vector<std::size_t>& t) {
                                  return ops.right_coassociativity(m.element(t[0], t[1]));
                                }}));
    report.add(verify_identity({"right coaction counit", "(id⊗ε)∘_MΔ = id", {c, k}, {basis, v},
                                [&](const std::vector<std::size_t>& t) {
                                  Tensor x = m.element(t[0], t[1]);
                                  return std::pair{ops.right_counit(x), x};
                                }}));
  }
  if (sides.bicomodule)
    report.add(verify_identity({"bicomodule", "(Δ_M⊗id)∘_MΔ = (id⊗_MΔ)∘Δ_M", {c, k}, {basis, basis, v, basis},
                                [&](const std::vector<std::size_t>& t) {
                                  Tensor x = m.element(t[0], t[1]);
                                  return std::pair{ops.bicomodule_lhs(x), ops.bicomodule_rhs(x)};
                                }}));
  return report;
}

CovariantBimodule bicovariant_from_yd(const YDModule& rr) {
  if (rr.corner != Corner::RR) throw StructuralError("bicovariant_from_yd expects a right-right module");
  auto yd = check_yd(rr);
  if (!yd.passed()) throw RefusedError("bicovariant_from_yd: input fails the Yetter-Drinfeld condition", yd);
  const auto& rho = std::get<RightModule>(rr.action);
  CovariantBimodule out{FreeBimodule(rule_from_right_module(rr.bialgebra, rho)), rr.bialgebra,
                        std::get<RightComodule>(rr.coaction)};
  auto report = check_covariance(out, Sides::all());
  if (!report.passed()) throw RefusedError("bicovariant_from_yd: covariance fails", report);
  return out;
}

VerificationReport check_commutation_coaction(const CommutationRule& lambda, const CommutationRule& lambda_cop,
                                              const LeftComodule& l) {
  if (lambda.presentation != Presentation::right_free || lambda_cop.presentation != Presentation::right_free)
    throw StructuralError("commutation rules on V⊗A expected");
  if (lambda.dim != l.dim() || lambda_cop.dim != l.dim()) throw StructuralError("carrier dimensions differ");
  const Bialgebra& b = *lambda.bialgebra;
  const Algebra& alg = b.algebra();
  const std::size_t n = b.dim(), d = l.dim();
  Axis a{"a", b.basis()}, i{"i", carrier(d)}, k{"k", carrier(d)};
  VerificationReport report("commutation rule against coaction");
  report.add(verify_identity({"commutation rule and coaction", "(Λ^cop)^i_m(a) L^m_k = L^i_m Λ^m_k(a)", {a, i, k},
                              {b.basis()}, [&](const std::vector<std::size_t>& t) {
                                Vec lhs(n), rhs(n);
                                for (std::size_t m = 0; m < d; ++m) {
                                  lhs = lhs + alg.multiply(lambda_cop(t[0], t[1], m), l.coaction(m, t[2]));
                                  rhs = rhs + alg.multiply(l.coaction(t[1], m), lambda(t[0], m, t[2]));
                                }
                                return std::pair{as_tensor(lhs), as_tensor(rhs)};
                              }}));
  return report;
}

}  // namespace hopfkit
