#include "hopfkit/yd.hpp"

#include <utility>

namespace hopfkit {

std::string to_string(Corner c) {
  switch (c) {
    case Corner::LL: return "LL";
    case Corner::RR: return "RR";
    case Corner::LR: return "LR";
    case Corner::RL: return "RL";
  }
  return "?";
}

YDModule YDModule::left_left(BialgebraPtr b, LeftModule action, LeftComodule coaction) {
  return {std::move(b), Corner::LL, std::move(action), std::move(coaction)};
}
YDModule YDModule::right_right(BialgebraPtr b, RightModule action, RightComodule coaction) {
  return {std::move(b), Corner::RR, std::move(action), std::move(coaction)};
}
YDModule YDModule::left_right(BialgebraPtr b, LeftModule action, RightComodule coaction) {
  return {std::move(b), Corner::LR, std::move(action), std::move(coaction)};
}
YDModule YDModule::right_left(BialgebraPtr b, RightModule action, LeftComodule coaction) {
  return {std::move(b), Corner::RL, std::move(action), std::move(coaction)};
}

std::size_t YDModule::dim() const { return coaction_matrix().dim; }

const std::vector<Matrix>& YDModule::action_matrices() const {
  return std::visit([](const auto& a) -> const std::vector<Matrix>& { return a.action; }, action);
}

const CoMatrix& YDModule::coaction_matrix() const {
  return std::visit([](const auto& c) -> const CoMatrix& { return c.coaction; }, coaction);
}

bool YDModule::same_tensors(const YDModule& other) const {
  return corner == other.corner && action.index() == other.action.index() &&
         coaction.index() == other.coaction.index() && action_matrices() == other.action_matrices() &&
         coaction_matrix() == other.coaction_matrix();
}

namespace {

void require_sides(const YDModule& m) {
  const bool left_action = std::holds_alternative<LeftModule>(m.action);
  const bool left_coaction = std::holds_alternative<LeftComodule>(m.coaction);
  bool ok = false;
  switch (m.corner) {
    case Corner::LL: ok = left_action && left_coaction; break;
    case Corner::RR: ok = !left_action && !left_coaction; break;
    case Corner::LR: ok = left_action && !left_coaction; break;
    case Corner::RL: ok = !left_action && left_coaction; break;
  }
  if (!ok) throw StructuralError("corner " + to_string(m.corner) + " does not match action/coaction sides");
  if (!m.bialgebra) throw StructuralError("Yetter-Drinfeld module without bialgebra");
  const std::size_t d = m.dim();
  for (const auto& a : m.action_matrices())
    if (a.rows() != d || a.cols() != d) throw StructuralError("action and coaction carrier dimensions differ");
  if (m.action_matrices().size() != m.bialgebra->dim())
    throw StructuralError("action does not match the bialgebra dimension");
  for (const auto& e : m.coaction_matrix().entries)
    if (e.size() != m.bialgebra->dim()) throw StructuralError("coaction does not match the bialgebra dimension");
}

std::vector<std::string> carrier(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// a_(1) L^m_k λ^i_m(a_(2)) = L^i_m a_(2) λ^m_k(a_(1))
CheckResult left_left_condition(const Bialgebra& b, const std::vector<Matrix>& lambda, const CoMatrix& l,
                                std::string name, std::string anchor) {
  const std::size_t n = b.dim(), d = l.dim;
  const Algebra& alg = b.algebra();
  return verify_identity(
      {std::move(name), std::move(anchor), {{"a", b.basis()}, {"i", carrier(d)}, {"k", carrier(d)}},
       {b.basis()}, [&](const std::vector<std::size_t>& t) {
         const std::size_t a = t[0], i = t[1], k = t[2];
         Vec lhs(n), rhs(n);
         for (const auto& term : b.coalgebra().coproduct(a)) {
           const std::size_t p = term.left, q = term.right;
           Vec left_inner(n), right_inner(n);
           for (std::size_t m = 0; m < d; ++m) {
             axpy(left_inner, lambda[q](i, m), l(m, k));
             axpy(right_inner, lambda[p](m, k), l(i, m));
           }
           axpy(lhs, term.coeff, alg.multiply(alg.basis_element(p), left_inner));
           axpy(rhs, term.coeff, alg.multiply(right_inner, alg.basis_element(q)));
         }
         return std::pair{Tensor({n}, lhs), Tensor({n}, rhs)};
       }});
}

// a_(1) R^k_m ρ^m_i(a_(2)) = R^m_i a_(2) ρ^k_m(a_(1))
CheckResult right_right_condition(const Bialgebra& b, const std::vector<Matrix>& rho, const CoMatrix& r,
                                  std::string name, std::string anchor) {
  const std::size_t n = b.dim(), d = r.dim;
  const Algebra& alg = b.algebra();
  return verify_identity(
      {std::move(name), std::move(anchor), {{"a", b.basis()}, {"i", carrier(d)}, {"k", carrier(d)}},
       {b.basis()}, [&](const std::vector<std::size_t>& t) {
         const std::size_t a = t[0], i = t[1], k = t[2];
         Vec lhs(n), rhs(n);
         for (const auto& term : b.coalgebra().coproduct(a)) {
           const std::size_t p = term.left, q = term.right;
           Vec left_inner(n), right_inner(n);
           for (std::size_t m = 0; m < d; ++m) {
             axpy(left_inner, rho[q](m, i), r(k, m));
             axpy(right_inner, rho[p](k, m), r(m, i));
           }
           axpy(lhs, term.coeff, alg.multiply(alg.basis_element(p), left_inner));
           axpy(rhs, term.coeff, alg.multiply(right_inner, alg.basis_element(q)));
         }
         return std::pair{Tensor({n}, lhs), Tensor({n}, rhs)};
       }});
}

void require_yd(const YDModule& m, const char* op) {
  auto report = check_yd(m);
  if (!report.passed()) throw RefusedError(std::string(op) + ": input fails the Yetter-Drinfeld condition", report);
}

void require_bijective(const YDModule& m, const char* op) {
  if (!m.bialgebra->has_bijective_antipode())
    throw RefusedError(std::string(op) + ": requires bijective antipode");
}

LinearMap s_map(const Bialgebra& b) { return antipode_map(b); }
LinearMap s_inv_map(const Bialgebra& b) { return antipode_inverse_map(b); }

}  // namespace

VerificationReport check_yd(const YDModule& m) {
  require_sides(m);
  const Bialgebra& b = *m.bialgebra;
  VerificationReport report("YD " + to_string(m.corner) + " over " + b.name());
  std::visit([&](const auto& a) { report.merge(a.verify(), "action: "); }, m.action);
  std::visit([&](const auto& c) { report.merge(c.verify(), "coaction: "); }, m.coaction);
  const auto& act = m.action_matrices();
  const auto& co = m.coaction_matrix();
  switch (m.corner) {
    case Corner::LL:
      report.add(left_left_condition(b, act, co, "yd left-left",
                                     "a_(1) L^m_k λ^i_m(a_(2)) = L^i_m a_(2) λ^m_k(a_(1))"));
      break;
    case Corner::RR:
      report.add(right_right_condition(b, act, co, "yd right-right",
                                       "a_(1) R^k_m ρ^m_i(a_(2)) = R^m_i a_(2) ρ^k_m(a_(1))"));
      break;
    case Corner::LR:
      // (V, λ, R) over B is (V, λ, L = R) left-left over B^cop.
      report.add(left_left_condition(*co_opposite(m.bialgebra), act, co, "yd left-right",
                                     "left-left condition over B^cop with L = R"));
      break;
    case Corner::RL:
      // (V, ρ, L) over B is (V, λ = ρ, L) left-left over B^op.
      report.add(left_left_condition(*opposite(m.bialgebra), act, co, "yd right-left",
                                     "left-left condition over B^op with λ = ρ"));
      break;
  }
  return report;
}

YDModule yd_ll_to_rr(const YDModule& m) {
  if (m.corner != Corner::LL) throw StructuralError("yd_ll_to_rr expects a left-left module");
  require_bijective(m, "yd_ll_to_rr");
  require_yd(m, "yd_ll_to_rr");
  const Bialgebra& b = *m.bialgebra;
  auto rho = pull_back(s_inv_map(b), b.algebra_ptr(), std::get<LeftModule>(m.action));
  auto r = push_forward(s_map(b), b.coalgebra_ptr(), std::get<LeftComodule>(m.coaction));
  return YDModule::right_right(m.bialgebra, std::move(*rho.right), std::move(*r.right));
}

YDModule yd_rr_to_ll(const YDModule& m) {
  if (m.corner != Corner::RR) throw StructuralError("yd_rr_to_ll expects a right-right module");
  require_bijective(m, "yd_rr_to_ll");
  require_yd(m, "yd_rr_to_ll");
  const Bialgebra& b = *m.bialgebra;
  auto lambda = pull_back(s_map(b), b.algebra_ptr(), std::get<RightModule>(m.action));
  auto l = push_forward(s_inv_map(b), b.coalgebra_ptr(), std::get<RightComodule>(m.coaction));
  return YDModule::left_left(m.bialgebra, std::move(*lambda.left), std::move(*l.left));
}

YDModule yd_lr_to_ll(const YDModule& m) {
  if (m.corner != Corner::LR) throw StructuralError("yd_lr_to_ll expects a left-right module");
  require_bijective(m, "yd_lr_to_ll");
  require_yd(m, "yd_lr_to_ll");
  const Bialgebra& b = *m.bialgebra;
  auto l = push_forward(s_map(b), b.coalgebra_ptr(), std::get<RightComodule>(m.coaction));
  return YDModule::left_left(m.bialgebra, std::get<LeftModule>(m.action), std::move(*l.left));
}

YDModule yd_ll_to_lr(const YDModule& m) {
  if (m.corner != Corner::LL) throw StructuralError("yd_ll_to_lr expects a left-left module");
  require_bijective(m, "yd_ll_to_lr");
  require_yd(m, "yd_ll_to_lr");
  const Bialgebra& b = *m.bialgebra;
  auto r = push_forward(s_inv_map(b), b.coalgebra_ptr(), std::get<LeftComodule>(m.coaction));
  return YDModule::left_right(m.bialgebra, std::get<LeftModule>(m.action), std::move(*r.right));
}

YDModule yd_lr_to_rr(const YDModule& m) {
  if (m.corner != Corner::LR) throw StructuralError("yd_lr_to_rr expects a left-right module");
  require_bijective(m, "yd_lr_to_rr");
  require_yd(m, "yd_lr_to_rr");
  const Bialgebra& b = *m.bialgebra;
  LinearMap s2 = compose(s_map(b), s_map(b));
  auto rho = pull_back(s_inv_map(b), b.algebra_ptr(), std::get<LeftModule>(m.action));
  auto r = push_forward(s2, b.coalgebra_ptr(), std::get<RightComodule>(m.coaction));
  return YDModule::right_right(m.bialgebra, std::move(*rho.right), std::move(*r.right));
}

YDModule yd_to_cop(const YDModule& m) {
  if (m.corner != Corner::LL && m.corner != Corner::RR)
    throw StructuralError("yd_to_cop expects a left-left or right-right module");
  require_bijective(m, "yd_to_cop");
  require_yd(m, "yd_to_cop");
  BialgebraPtr cop = co_opposite(m.bialgebra);
  // S⁻¹ is the antipode of B^cop, an anti-coalgebra map of B^cop.
  LinearMap s_cop = antipode_map(*cop);
  if (m.corner == Corner::LL) {
    // L read as a right B^cop-comodule, pushed forward to a left one.
    RightComodule as_right{cop->coalgebra_ptr(), std::get<LeftComodule>(m.coaction).coaction};
    auto l = push_forward(s_cop, cop->coalgebra_ptr(), as_right);
    return YDModule::left_left(cop, std::get<LeftModule>(m.action), std::move(*l.left));
  }
  LeftComodule as_left{cop->coalgebra_ptr(), std::get<RightComodule>(m.coaction).coaction};
  auto r = push_forward(s_cop, cop->coalgebra_ptr(), as_left);
  return YDModule::right_right(cop, std::get<RightModule>(m.action), std::move(*r.right));
}

YDModule yd_dual(const YDModule& m) {
  require_sides(m);
  if (m.corner == Corner::LL)
    return YDModule::right_right(m.bialgebra, transpose_module(std::get<LeftModule>(m.action)),
                                 transpose_comodule(std::get<LeftComodule>(m.coaction)));
  if (m.corner == Corner::RR)
    return YDModule::left_left(m.bialgebra, transpose_module(std::get<RightModule>(m.action)),
                               transpose_comodule(std::get<RightComodule>(m.coaction)));
  throw StructuralError("yd_dual expects a left-left or right-right module");
}

YDModule reinterpret_op_cop(const YDModule& m) {
  if (m.corner != Corner::LL) throw StructuralError("reinterpret_op_cop expects a left-left module");
  require_sides(m);
  BialgebraPtr oc = op_cop(m.bialgebra);
  const auto& l = std::get<LeftModule>(m.action);
  const auto& c = std::get<LeftComodule>(m.coaction);
  return YDModule::right_right(oc, RightModule{oc->algebra_ptr(), l.dim, l.action},
                               RightComodule{oc->coalgebra_ptr(), c.coaction});
}

// ---------------------------------------------------------------------------

Matrix flip_matrix(std::size_t d) {
  Matrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) p(k * d + i, i * d + k) = Scalar(1);
  return p;
}

namespace {

CheckResult columns_agree(std::string name, std::string anchor, const Matrix& lhs, const Matrix& rhs, std::size_t d) {
  Axis i = index_axis("i", d), j = index_axis("j", d), k = index_axis("k", d);
  std::vector<std::string> leg = carrier(d);
  return verify_identity({std::move(name), std::move(anchor), {i, j, k}, {leg, leg, leg},
                          [&](const std::vector<std::size_t>& t) {
                            std::size_t col = (t[0] * d + t[1]) * d + t[2];
                            return std::pair{Tensor({d, d, d}, lhs.column(col)), Tensor({d, d, d}, rhs.column(col))};
                          }});
}

}  // namespace

VerificationReport YangBaxterOperator::verify() const {
  VerificationReport report("Yang-Baxter operator");
  const Matrix id = Matrix::identity(dim);
  const Matrix r12 = kron(matrix, id), r23 = kron(id, matrix);
  report.add(columns_agree("braid relation", "(𝓡⊗id)(id⊗𝓡)(𝓡⊗id) = (id⊗𝓡)(𝓡⊗id)(id⊗𝓡)", r12 * r23 * r12,
                           r23 * r12 * r23, dim));
  const std::size_t r = rank(matrix);
  report.add(make_check("invertible", "rank 𝓡 = dim(V⊗V)", r == dim * dim,
                        "rank " + std::to_string(r) + " < " + std::to_string(dim * dim)));
  return report;
}

YangBaxterOperator yang_baxter(const YDModule& m) {
  if (m.corner != Corner::RR) throw StructuralError("yang_baxter expects a right-right module");
  require_yd(m, "yang_baxter");
  const auto& rho = std::get<RightModule>(m.action);
  const auto& r = std::get<RightComodule>(m.coaction).coaction;
  const std::size_t d = m.dim();
  YangBaxterOperator op{d, Matrix(d * d, d * d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t mm = 0; mm < d; ++mm) {
        Matrix act = rho.act(r(mm, k));
        for (std::size_t j = 0; j < d; ++j) op.matrix(mm * d + j, i * d + k) = act(j, i);
      }
  auto report = op.verify();
  if (!report.passed())
    throw RefusedError("yang_baxter: internal inconsistency, braid relation fails for a passing module", report);
  return op;
}

Matrix braid_to_qybe(const YangBaxterOperator& r) { return flip_matrix(r.dim) * r.matrix; }

VerificationReport check_qybe(const Matrix& r, std::size_t d) {
  VerificationReport report("quantum Yang-Baxter equation");
  const Matrix id = Matrix::identity(d);
  const Matrix r12 = kron(r, id), r23 = kron(id, r);
  const Matrix p23 = kron(id, flip_matrix(d));
  const Matrix r13 = p23 * r12 * p23;
  report.add(columns_agree("qybe", "R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12, d));
  return report;
}

}  // namespace hopfkit
