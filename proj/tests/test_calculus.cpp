#include <doctest.h>

#include <random>

#include "hopfkit/calculus.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

const CheckResult& require_check(const VerificationReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, name);
  return *c;
}

struct Sample {
  Group group;
  std::vector<std::size_t> subset;
};

std::vector<Sample> samples() {
  Group s3 = symmetric_group_3();
  return {
      {cyclic_group(2), {1}},        {cyclic_group(3), {1}}, {cyclic_group(3), {1, 2}},
      {cyclic_group(4), {1, 3}},     {s3, transpositions(s3)}, {s3, {4, 5}},
      {s3, {1}},
  };
}

// χ_g as a function on the basis δ_a: [a = g] − [a = e].
Vec chi_oracle(std::size_t order, std::size_t g) {
  Vec v(order);
  v[g] += 1;
  v[0] -= 1;
  return v;
}

}  // namespace

TEST_CASE("differential on Z3 with one generator") {
  FODC c = finite_group_calculus(cyclic_group(3), {1});
  const std::size_t n = 3;
  // d(1) = 0 with 1 = δ0 + δ1 + δ2.
  CHECK(differential(c, c.bialgebra->algebra().unit()) == Tensor({1, n}));
  // d(δ0) = e_1⊗(δ2 − δ0), since (L_1 δ0)(x) = δ0(1 + x).
  Tensor expect({1, n});
  expect.at({0, 2}) = 1;
  expect.at({0, 0}) = -1;
  CHECK(differential(c, unit_vec(n, 0)) == expect);
  // Against L_g f(x) = f(gx) computed pointwise.
  for (std::size_t a = 0; a < n; ++a) {
    Tensor df = differential(c, unit_vec(n, a));
    for (std::size_t x = 0; x < n; ++x) {
      Scalar lf = (1 + x) % n == a ? 1 : 0, f = x == a ? 1 : 0;
      CHECK(df.at({0, x}) == lf - f);
    }
  }
}

TEST_CASE("Leibniz and the twisted Leibniz rule on group calculi") {
  for (const auto& s : samples()) {
    CAPTURE(s.group.name);
    CAPTURE(s.subset.size());
    FODC c = finite_group_calculus(s.group, s.subset);
    auto report = check_fodc(c);
    CHECK_MESSAGE(report.passed(), report.summary());
    CHECK(require_check(report, "leibniz").cases == s.group.order() * s.group.order());
    CHECK(differential(c, c.bialgebra->algebra().unit()) == Tensor({s.subset.size(), s.group.order()}));
    CHECK(check_cartan_linearity(c).passed());
    CHECK(check_right_covariance(c).passed());
  }
}

TEST_CASE("a perturbed derivation breaks Leibniz with a witness") {
  FODC c = finite_group_calculus(symmetric_group_3(), transpositions(symmetric_group_3()));
  c.partials[1](0, 0) += 1;
  auto report = check_fodc(c);
  CHECK_FALSE(report.passed());
  for (const auto& name : {"leibniz", "twisted leibniz"}) {
    const CheckResult& r = require_check(report, name);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->lhs != r.witness->rhs);
  }
}

TEST_CASE("coaction attached only for conjugation-closed subsets") {
  Group s3 = symmetric_group_3();
  CHECK(finite_group_calculus(s3, transpositions(s3)).coaction.has_value());
  CHECK(finite_group_calculus(s3, {4, 5}).coaction.has_value());
  CHECK_FALSE(finite_group_calculus(s3, {1}).coaction.has_value());
  CHECK(finite_group_calculus(cyclic_group(5), {2}).coaction.has_value());
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(finite_group_calculus(cyclic_group(3), {}), RefusedError);
  CHECK_THROWS_AS(finite_group_calculus(cyclic_group(3), {0, 1}), RefusedError);
  CHECK_THROWS_AS(finite_group_calculus(cyclic_group(3), {1, 1}), StructuralError);
  CHECK_THROWS_AS(finite_group_calculus(cyclic_group(3), {3}), StructuralError);
  CHECK_THROWS_AS(quantum_lie_bracket(finite_group_calculus(symmetric_group_3(), {1})), RefusedError);
}

TEST_CASE("Woronowicz functionals") {
  for (const auto& s : samples()) {
    CAPTURE(s.group.name);
    FODC c = finite_group_calculus(s.group, s.subset);
    auto chi = woronowicz_functionals(c);
    REQUIRE(chi.size() == s.subset.size());
    for (std::size_t i = 0; i < chi.size(); ++i) CHECK(chi[i] == chi_oracle(s.group.order(), s.subset[i]));
  }
  FODC z3 = finite_group_calculus(cyclic_group(3), {1});
  CHECK(woronowicz_functionals(z3)[0] == Vec{-1, 1, 0});
}

TEST_CASE("convolution") {
  BialgebraPtr h = sweedler_h4();
  const Vec eps = h->coalgebra().counit_vector();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_functional = [&] {
    Vec v(4);
    for (auto& x : v) x = coef(rng);
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Vec a = random_functional(), b = random_functional(), c = random_functional();
    CHECK(convolution(*h, a, eps) == a);
    CHECK(convolution(*h, eps, a) == a);
    CHECK(convolution(*h, convolution(*h, a, b), c) == convolution(*h, a, convolution(*h, b, c)));
  }
  // Evaluations at group elements multiply: ev_g ⋆ ev_h = ev_{gh} on 𝕜(S3).
  BialgebraPtr f = function_algebra(symmetric_group_3());
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t k = 0; k < 6; ++k)
      CHECK(convolution(*f, unit_vec(6, g), unit_vec(6, k)) == unit_vec(6, oracle::s3_mul(g, k)));
  CHECK_THROWS_AS(convolution(*h, Vec(3), eps), StructuralError);
}

TEST_CASE("bracket on abelian groups vanishes") {
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::vector<std::size_t>>>{{2, {1}}, {3, {1}}, {3, {1, 2}}, {4, {1, 3}}}) {
    CAPTURE(n);
    BracketTable table = quantum_lie_bracket(finite_group_calculus(cyclic_group(n), t));
    CHECK(table.closed());
    CHECK(table.zero());
    // The braiding is the flip for a commutative and cocommutative pairing.
    CHECK(table.braiding == flip_matrix(t.size()));
  }
}

TEST_CASE("bracket on the transpositions of S3") {
  Group s3 = symmetric_group_3();
  for (const auto& t : {transpositions(s3), std::vector<std::size_t>{4, 5}}) {
    FODC c = finite_group_calculus(s3, t);
    BracketTable table = quantum_lie_bracket(c);
    REQUIRE(table.closed());
    const std::size_t d = t.size();
    // In 𝕜S3 the functionals are χ_g = g − e, and χ_gχ_h − χ_{ghg⁻¹}χ_g = χ_{ghg⁻¹} − χ_h.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        std::size_t conj = oracle::s3_mul(oracle::s3_mul(t[i], t[j]), oracle::s3_inv(t[i]));
        Vec expect = chi_oracle(6, conj) - chi_oracle(6, t[j]);
        CHECK(table.brackets[i * d + j] == expect);
        Vec combo(6);
        for (std::size_t k = 0; k < d; ++k) axpy(combo, (*table.constants[i * d + j])[k], table.functionals[k]);
        CHECK(combo == expect);
      }
    // Transpositions do not commute; the two 3-cycles do.
    CHECK(table.zero() == (t.size() == 2));
  }
}

TEST_CASE("zero derivations give a zero table") {
  Group s3 = symmetric_group_3();
  FODC c = finite_group_calculus(s3, transpositions(s3));
  for (auto& p : c.partials) p = Matrix(6, 6);
  CHECK(check_fodc(c).passed());
  BracketTable table = quantum_lie_bracket(c);
  CHECK(table.zero());
  CHECK(table.closed());
}

TEST_CASE("right covariance fails for a right-invariant derivation") {
  // f ↦ f(x(12)) − f(x) is not a right comodule map on 𝕜(S3).
  FODC nc = finite_group_calculus(symmetric_group_3(), {1});
  Matrix right(6, 6);
  for (std::size_t a = 0; a < 6; ++a) {
    right(oracle::s3_mul(a, 1), a) += 1;
    right(a, a) -= 1;
  }
  nc.partials[0] = right;
  auto report = check_right_covariance(nc);
  const CheckResult& cov = require_check(report, "derivation right comodule map");
  CHECK_FALSE(cov.passed);
  CHECK(cov.witness.has_value());
}
