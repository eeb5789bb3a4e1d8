#include "hopfkit/catalog.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace hopfkit {

std::size_t Group::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul(a, b) == 0) return b;
  throw StructuralError(name + ": element without inverse");
}

std::size_t Group::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument(name + " has no element '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

Group cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  Group g{"Z" + std::to_string(n), {}, {}};
  for (std::size_t a = 0; a < n; ++a) g.labels.push_back(std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table.push_back((a + b) % n);
  return g;
}

Group symmetric_group_3() {
  // Permutations of {1,2,3} as images of (1,2,3); composition (στ)(x) = σ(τ(x)).
  const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  Group g{"S3", {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, {}};
  for (const auto& s : perms)
    for (const auto& t : perms) {
      std::array<int, 3> st{s[t[0] - 1], s[t[1] - 1], s[t[2] - 1]};
      g.table.push_back(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), st) - perms.begin()));
    }
  return g;
}

Group group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name.size() > 1 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 64) return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group '" + name + "' (expected Z<n> or S3)");
}

VerificationReport verify(const Group& g) {
  VerificationReport report("group " + g.name);
  const std::size_t n = g.order();
  bool closed = g.table.size() == n * n;
  for (auto v : g.table) closed = closed && v < n;
  report.add(make_check("group table closed", "a*b in G", closed, "table entry out of range"));
  if (!closed) return report;
  Axis a{"a", g.labels}, b{"b", g.labels}, c{"c", g.labels};
  std::vector<std::string> leg = g.labels;
  auto point = [&](std::size_t x) {
    Tensor t({n});
    t[x] = Scalar(1);
    return t;
  };
  report.add(verify_identity({"group associativity", "(ab)c = a(bc)", {a, b, c}, {leg},
                              [&](const std::vector<std::size_t>& t) {
                                return std::pair{point(g.mul(g.mul(t[0], t[1]), t[2])),
                                                 point(g.mul(t[0], g.mul(t[1], t[2])))};
                              }}));
  report.add(verify_identity({"group identity", "ea = ae = a", {a}, {leg}, [&](const std::vector<std::size_t>& t) {
                                return std::pair{point(g.mul(0, t[0])), point(g.mul(t[0], 0))};
                              }}));
  bool inverses = true;
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n; ++y) found = found || (g.mul(x, y) == 0 && g.mul(y, x) == 0);
    inverses = inverses && found;
  }
  report.add(make_check("group inverses", "every a has a⁻¹", inverses, "element without two-sided inverse"));
  return report;
}

std::vector<std::size_t> transpositions(const Group& s3) {
  if (s3.name != "S3") throw std::invalid_argument("transpositions are defined for S3 only");
  return {1, 2, 3};
}

// ---------------------------------------------------------------------------

namespace {

SparseVec single(std::size_t i, long c = 1) { return {{i, Scalar(c)}}; }

BialgebraPtr make(std::string name, std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit,
                  std::vector<std::vector<PairTerm>> comult, Vec counit, Matrix antipode) {
  auto alg = std::make_shared<const Algebra>(name, basis, std::move(mult), std::move(unit));
  auto co = std::make_shared<const Coalgebra>(name, basis, std::move(comult), std::move(counit));
  return std::make_shared<const Bialgebra>(std::move(name), alg, co, std::move(antipode));
}

}  // namespace

BialgebraPtr ground_field() {
  return make("k", {"1"}, {single(0)}, {Scalar(1)}, {{{0, 0, Scalar(1)}}}, {Scalar(1)}, Matrix::identity(1));
}

BialgebraPtr group_algebra(const Group& g) {
  const std::size_t n = g.order();
  std::vector<SparseVec> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult.push_back(single(g.mul(a, b)));
  std::vector<std::vector<PairTerm>> comult;
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comult.push_back({{a, a, Scalar(1)}});
    s(g.inverse(a), a) = Scalar(1);
  }
  return make("k" + g.name, g.labels, std::move(mult), unit_vec(n, 0), std::move(comult), Vec(n, Scalar(1)), s);
}

BialgebraPtr function_algebra(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::string> basis;
  for (const auto& l : g.labels) basis.push_back("δ" + l);
  std::vector<SparseVec> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult.push_back(a == b ? single(a) : SparseVec{});
  std::vector<std::vector<PairTerm>> comult(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) comult[g.mul(b, c)].push_back({b, c, Scalar(1)});
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = Scalar(1);
  return make("k" + g.name + "-fun", basis, std::move(mult), Vec(n, Scalar(1)), std::move(comult), unit_vec(n, 0),
              s);
}

BialgebraPtr sweedler_h4() {
  // Basis 0:1, 1:g, 2:x, 3:gx.
  std::vector<SparseVec> mult(16);
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) { mult[i * 4 + j] = std::move(v); };
  for (std::size_t j = 0; j < 4; ++j) set(0, j, single(j));
  set(1, 0, single(1));
  set(1, 1, single(0));
  set(1, 2, single(3));
  set(1, 3, single(2));
  set(2, 0, single(2));
  set(2, 1, single(3, -1));
  set(3, 0, single(3));
  set(3, 1, single(2, -1));
  std::vector<std::vector<PairTerm>> comult = {
      {{0, 0, Scalar(1)}},
      {{1, 1, Scalar(1)}},
      {{2, 0, Scalar(1)}, {1, 2, Scalar(1)}},
      {{3, 1, Scalar(1)}, {0, 3, Scalar(1)}},
  };
  Matrix s(4, 4);
  s(0, 0) = Scalar(1);
  s(1, 1) = Scalar(1);
  s(3, 2) = Scalar(-1);
  s(2, 3) = Scalar(1);
  return make("sweedler-H4", {"1", "g", "x", "gx"}, std::move(mult), unit_vec(4, 0), std::move(comult),
              {Scalar(1), Scalar(1), Scalar(0), Scalar(0)}, s);
}

BialgebraPtr catalog_bialgebra(const std::string& name) {
  auto param = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.size() > prefix.size() + 2 && name.compare(0, prefix.size() + 1, prefix + "(") == 0 && name.back() == ')')
      return name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    return std::nullopt;
  };
  if (name == "k") return ground_field();
  if (name == "kZ2") return group_algebra(cyclic_group(2));
  if (name == "kZ3") return group_algebra(cyclic_group(3));
  if (name == "kZ2-fun") return function_algebra(cyclic_group(2));
  if (name == "kZ3-fun") return function_algebra(cyclic_group(3));
  if (name == "kS3") return group_algebra(symmetric_group_3());
  if (name == "kS3-fun") return function_algebra(symmetric_group_3());
  if (name == "sweedler-H4") return sweedler_h4();
  if (auto g = param("group-algebra")) return group_algebra(group_by_name(*g));
  if (auto g = param("function-algebra")) return function_algebra(group_by_name(*g));
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"k", "kZ2", "kZ3", "kZ2-fun", "kZ3-fun", "kS3", "kS3-fun", "sweedler-H4"};
}

// ---------------------------------------------------------------------------

LeftModule sign_module(const BialgebraPtr& kz2) {
  return {kz2->algebra_ptr(), 1, {Matrix::from_rows({{Scalar(1)}}), Matrix::from_rows({{Scalar(-1)}})}};
}

LeftModule rotation_module(const BialgebraPtr& kz3) {
  Matrix r = Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(-1)}});
  return {kz3->algebra_ptr(), 2, {Matrix::identity(2), r, r * r}};
}

LeftModule h4_two_dim_module(const BialgebraPtr& h4) {
  Scalar q = Scalar::q();
  Matrix g = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
  Matrix x = Matrix::from_rows({{Scalar(0), Scalar(0)}, {q, Scalar(0)}});
  return {h4->algebra_ptr(), 2, {Matrix::identity(2), g, x, g * x}};
}

LeftModule conjugation_module(const BialgebraPtr& kg, const Group& g, const std::vector<std::size_t>& subset) {
  const std::size_t d = subset.size();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      auto it = std::find(subset.begin(), subset.end(), g.conjugate(a, subset[k]));
      if (it == subset.end()) throw StructuralError("conjugation_module: subset not closed under conjugation");
      m(static_cast<std::size_t>(it - subset.begin()), k) = Scalar(1);
    }
    action.push_back(std::move(m));
  }
  return {kg->algebra_ptr(), d, std::move(action)};
}

LeftComodule grading_comodule(const BialgebraPtr& kg, const std::vector<std::size_t>& subset) {
  const std::size_t d = subset.size(), n = kg->dim();
  CoMatrix c{d, std::vector<Vec>(d * d, zero_vec(n))};
  for (std::size_t k = 0; k < d; ++k) c(k, k) = unit_vec(n, subset[k]);
  return {kg->coalgebra_ptr(), std::move(c)};
}

LeftComodule regular_comodule(const BialgebraPtr& b) {
  // Δ(e_k) = Σ c e_p⊗e_m, so L^m_k = Σ_p c e_p.
  const std::size_t n = b->dim();
  CoMatrix c{n, std::vector<Vec>(n * n, zero_vec(n))};
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : b->coalgebra().coproduct(k)) c(t.right, k)[t.left] += t.coeff;
  return {b->coalgebra_ptr(), std::move(c)};
}

LeftModule adjoint_module(const BialgebraPtr& h) {
  const std::size_t n = h->dim();
  const Algebra& alg = h->algebra();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec image(n);
      for (const auto& t : h->coalgebra().coproduct(a)) {
        Vec left = alg.multiply(alg.basis_element(t.left), alg.basis_element(k));
        axpy(image, t.coeff, alg.multiply(left, h->apply_antipode(alg.basis_element(t.right))));
      }
      for (std::size_t i = 0; i < n; ++i) m(i, k) = image[i];
    }
    action.push_back(std::move(m));
  }
  return {h->algebra_ptr(), n, std::move(action)};
}

LeftModule evaluation_module(const BialgebraPtr& fun, const std::vector<std::size_t>& subset) {
  const std::size_t d = subset.size();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < fun->dim(); ++a) {
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k)
      if (subset[k] == a) m(k, k) = Scalar(1);
    action.push_back(std::move(m));
  }
  return {fun->algebra_ptr(), d, std::move(action)};
}

LeftComodule conjugation_comodule(const BialgebraPtr& fun, const Group& g, const std::vector<std::size_t>& subset) {
  const std::size_t d = subset.size(), n = g.order();
  CoMatrix c{d, std::vector<Vec>(d * d, zero_vec(n))};
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t x = 0; x < n; ++x) {
      // x⁻¹ k x
      std::size_t image = g.mul(g.mul(g.inverse(x), subset[k]), x);
      auto it = std::find(subset.begin(), subset.end(), image);
      if (it == subset.end()) throw StructuralError("conjugation_comodule: subset not closed under conjugation");
      c(static_cast<std::size_t>(it - subset.begin()), k)[x] += Scalar(1);
    }
  return {fun->coalgebra_ptr(), std::move(c)};
}

// ---------------------------------------------------------------------------

std::vector<NamedModule> catalog_modules() {
  Group z3 = cyclic_group(3), s3 = symmetric_group_3();
  auto kz2 = group_algebra(cyclic_group(2)), kz3 = group_algebra(z3), h4 = sweedler_h4();
  auto fz3 = function_algebra(z3), fs3 = function_algebra(s3);
  return {
      {"kZ2-bimodule", kz2, sign_module(kz2)},
      {"kZ3-bimodule", kz3, rotation_module(kz3)},
      {"H4-bimodule", h4, h4_two_dim_module(h4)},
      {"H4-regular-bimodule", h4, left_regular_module(h4->algebra_ptr())},
      {"kZ3-fun-bimodule", fz3, evaluation_module(fz3, {1, 2})},
      {"kS3-bimodule", fs3, evaluation_module(fs3, transpositions(s3))},
  };
}

NamedModule catalog_module(const std::string& name) {
  for (auto& entry : catalog_modules())
    if (entry.name == name) return entry;
  throw std::invalid_argument("unknown module catalog entry '" + name + "'");
}

// ---------------------------------------------------------------------------

YDModule trivial_yd(const BialgebraPtr& b, std::size_t dim) {
  return YDModule::left_left(b, trivial_left_module(*b, dim), trivial_left_comodule(*b, dim));
}

YDModule s3_transposition_yd() {
  Group s3 = symmetric_group_3();
  auto kg = group_algebra(s3);
  auto t = transpositions(s3);
  return YDModule::left_left(kg, conjugation_module(kg, s3, t), grading_comodule(kg, t));
}

YDModule adjoint_regular_yd(const BialgebraPtr& h) {
  return YDModule::left_left(h, adjoint_module(h), regular_comodule(h));
}

YDModule function_algebra_yd(const Group& g, const std::vector<std::size_t>& subset) {
  auto fun = function_algebra(g);
  return YDModule::left_left(fun, evaluation_module(fun, subset), conjugation_comodule(fun, g, subset));
}

std::vector<NamedYD> catalog_yd() {
  Group z2 = cyclic_group(2), z3 = cyclic_group(3), s3 = symmetric_group_3();
  auto kz2 = group_algebra(z2), ks3 = group_algebra(s3), h4 = sweedler_h4();
  auto t = transpositions(s3);
  std::vector<NamedYD> out;
  out.push_back({"trivial-kZ2", trivial_yd(kz2, 2), true});
  out.push_back({"trivial-H4", trivial_yd(h4, 1), true});
  out.push_back({"kZ2-sign-graded", YDModule::left_left(kz2, sign_module(kz2), grading_comodule(kz2, {1})), true});
  out.push_back({"kS3-transpositions", s3_transposition_yd(), true});
  out.push_back({"kS3-adjoint-regular", adjoint_regular_yd(ks3), true});
  out.push_back({"H4-adjoint-regular", adjoint_regular_yd(h4), true});
  out.push_back({"kZ3-fun-evaluation", function_algebra_yd(z3, {1, 2}), true});
  out.push_back({"kS3-fun-transpositions", function_algebra_yd(s3, t), true});
  out.push_back({"broken-kS3-transpositions",
                 YDModule::left_left(ks3, trivial_left_module(*ks3, 3), grading_comodule(ks3, t)), false});
  out.push_back({"broken-kS3-regular",
                 YDModule::left_left(ks3, trivial_left_module(*ks3, 6), regular_comodule(ks3)), false});
  out.push_back({"broken-H4-regular",
                 YDModule::left_left(h4, trivial_left_module(*h4, 4), regular_comodule(h4)), false});
  return out;
}

NamedYD catalog_yd(const std::string& name) {
  for (auto& entry : catalog_yd())
    if (entry.name == name) return entry;
  throw std::invalid_argument("unknown YD catalog entry '" + name + "'");
}

}  // namespace hopfkit
