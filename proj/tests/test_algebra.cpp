#include <doctest.h>

#include "hopfkit/catalog.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

Tensor comult_of_basis(const Bialgebra& b, std::size_t i) { return b.comultiply(b.algebra().basis_element(i)); }

// Monoid algebra of {1, z} with z² = z, Δz = z⊗z: a bialgebra without antipode.
BialgebraPtr idempotent_bialgebra() {
  std::vector<std::string> basis{"1", "z"};
  std::vector<SparseVec> mult{{{0, 1}}, {{1, 1}}, {{1, 1}}, {{1, 1}}};
  auto alg = std::make_shared<const Algebra>("mono", basis, mult, unit_vec(2, 0));
  std::vector<std::vector<PairTerm>> comult{{{0, 0, 1}}, {{1, 1, 1}}};
  auto co = std::make_shared<const Coalgebra>("mono", basis, comult, Vec{1, 1});
  return std::make_shared<const Bialgebra>("mono", alg, co);
}

}  // namespace

TEST_CASE("every catalog bialgebra passes its advertised level") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    BialgebraPtr b = catalog_bialgebra(name);
    auto report = verify(*b, b->has_antipode() ? Level::hopf : Level::bialgebra);
    CHECK_MESSAGE(report.passed(), report.summary());
    if (b->has_antipode()) CHECK(antipode_as_anti_morphisms(*b).passed());
  }
  CHECK(verify(*catalog_bialgebra("group-algebra(Z4)")).passed());
  CHECK(verify(*catalog_bialgebra("function-algebra(S3)")).passed());
  CHECK_THROWS_AS(catalog_bialgebra("nope"), std::invalid_argument);
}

TEST_CASE("ground field") {
  BialgebraPtr k = catalog_bialgebra("k");
  CHECK(k->dim() == 1);
  CHECK(k->multiply(Vec{3}, Vec{5}) == Vec{15});
  CHECK(verify(*k).passed());
}

TEST_CASE("Sweedler H4 matches the g^a x^b model") {
  BialgebraPtr h = sweedler_h4();
  REQUIRE(h->dim() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(comult_of_basis(*h, i) == oracle::H4::comult(i));
    CHECK(h->apply_antipode(h->algebra().basis_element(i)) == oracle::H4::antipode(i));
    for (std::size_t j = 0; j < 4; ++j) CHECK(h->algebra().multiply_basis(i, j) == oracle::H4::mul(i, j));
  }
  CHECK(h->counit(h->algebra().basis_element(2)).is_zero());
  CHECK(h->counit(h->algebra().basis_element(1)) == Scalar(1));
}

TEST_CASE("H4 antipode has order four") {
  BialgebraPtr h = sweedler_h4();
  const Matrix& s = h->antipode_matrix();
  CHECK_FALSE(matrix_power(s, 2) == Matrix::identity(4));
  CHECK(matrix_power(s, 4) == Matrix::identity(4));
  CHECK(antipode_order(*h) == 4u);
  CHECK(h->has_bijective_antipode());
  CHECK(h->antipode_inverse_matrix() * s == Matrix::identity(4));
  // S(xg) = S(g)S(x) = −x, and xg = −gx so S(xg) = −S(gx) = −x.
  Vec xg = h->algebra().multiply_basis(2, 1);
  CHECK(h->apply_antipode(xg) == scaled(h->algebra().basis_element(2), -1));
}

TEST_CASE("group and function algebras match group tables") {
  BialgebraPtr ks3 = group_algebra(symmetric_group_3());
  BialgebraPtr fs3 = function_algebra(symmetric_group_3());
  for (std::size_t a = 0; a < 6; ++a) {
    CHECK(ks3->apply_antipode(ks3->algebra().basis_element(a)) == unit_vec(6, oracle::s3_inv(a)));
    for (std::size_t b = 0; b < 6; ++b) {
      CHECK(ks3->algebra().multiply_basis(a, b) == unit_vec(6, oracle::s3_mul(a, b)));
      Vec expect = a == b ? unit_vec(6, a) : zero_vec(6);
      CHECK(fs3->algebra().multiply_basis(a, b) == expect);
    }
    Tensor delta({6, 6});
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t c = 0; c < 6; ++c)
        if (oracle::s3_mul(b, c) == a) delta.at({b, c}) = 1;
    CHECK(comult_of_basis(*fs3, a) == delta);
    CHECK(fs3->apply_antipode(fs3->algebra().basis_element(a)) == unit_vec(6, oracle::s3_inv(a)));
  }
  BialgebraPtr fz3 = function_algebra(cyclic_group(3));
  CHECK(verify(*fz3).passed());
  CHECK(antipode_as_anti_morphisms(*fz3).passed());
}

TEST_CASE("opposite and co-opposite structures") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  BialgebraPtr h = sweedler_h4();
  CHECK(*co_opposite(kz2) == *kz2);
  CHECK(*opposite(opposite(h)) == *h);
  CHECK(*co_opposite(co_opposite(h)) == *h);
  CHECK_FALSE(co_opposite(h)->coalgebra() == h->coalgebra());
  CHECK_FALSE(opposite(h)->algebra() == h->algebra());
  for (auto b : {opposite(h), co_opposite(h), op_cop(h)}) {
    CHECK(verify(*b).passed());
    CHECK(b->has_bijective_antipode());
  }
  // The antipode of B^cop and B^op is S⁻¹.
  CHECK(co_opposite(h)->antipode_matrix() == h->antipode_inverse_matrix());
  CHECK(op_cop(h)->antipode_matrix() == h->antipode_matrix());
}

TEST_CASE("iterated comultiplication") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  Vec g = kz2->algebra().basis_element(1);
  Tensor one_leg = iterated_comultiply(kz2->coalgebra(), g, 1);
  CHECK(one_leg == Tensor({2}, g));
  Tensor ggg({2, 2, 2});
  ggg.at({1, 1, 1}) = 1;
  CHECK(iterated_comultiply(kz2->coalgebra(), g, 3) == ggg);

  BialgebraPtr h = sweedler_h4();
  Tensor expect({4, 4, 4});
  expect.at({2, 0, 0}) = 1;  // x⊗1⊗1
  expect.at({1, 2, 0}) = 1;  // g⊗x⊗1
  expect.at({1, 1, 2}) = 1;  // g⊗g⊗x
  CHECK(iterated_comultiply(h->coalgebra(), h->algebra().basis_element(2), 3) == expect);
  // Both bracketings of Δ² agree.
  Tensor d = h->comultiply(h->algebra().basis_element(2));
  CHECK(h->coalgebra().comultiply_leg(d, 0) == h->coalgebra().comultiply_leg(d, 1));
}

TEST_CASE("non-coassociative structure fails with a witness") {
  // Δg = 1⊗g + g⊗g on span{1, g} with the group product of Z2.
  std::vector<std::string> basis{"1", "g"};
  std::vector<SparseVec> mult{{{0, 1}}, {{1, 1}}, {{1, 1}}, {{0, 1}}};
  auto alg = std::make_shared<const Algebra>("bad", basis, mult, unit_vec(2, 0));
  std::vector<std::vector<PairTerm>> comult{{{0, 0, 1}}, {{0, 1, 1}, {1, 1, 1}}};
  auto co = std::make_shared<const Coalgebra>("bad", basis, comult, Vec{1, 1});
  auto report = verify(*co);
  const CheckResult* c = report.find("coassociativity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->indices.at(0).second == "g");
  CHECK(c->witness->lhs != c->witness->rhs);
}

TEST_CASE("inconsistent dimensions are structural errors") {
  std::vector<std::string> basis{"1", "g"};
  CHECK_THROWS_AS(Algebra("x", basis, std::vector<SparseVec>(3), unit_vec(2, 0)), StructuralError);
  CHECK_THROWS_AS(Algebra("x", basis, std::vector<SparseVec>(4), unit_vec(3, 0)), StructuralError);
  CHECK_THROWS_AS(Coalgebra("x", basis, std::vector<std::vector<PairTerm>>(1), Vec{1, 1}), StructuralError);
}

TEST_CASE("bialgebra without antipode") {
  BialgebraPtr m = idempotent_bialgebra();
  CHECK(verify(*m, Level::bialgebra).passed());
  CHECK(m->kind() == HopfKind::bialgebra);
  CHECK_FALSE(verify(*m, Level::hopf).passed());
  CHECK_THROWS_AS(m->antipode_matrix(), RefusedError);
}

TEST_CASE("antipode and counit maps") {
  BialgebraPtr h = sweedler_h4();
  LinearMap s = antipode_map(*h);
  CHECK(s.kind == MapKind::anti_morphism);
  LinearMap s4 = compose(compose(s, s), compose(s, s));
  CHECK(s4.kind == MapKind::morphism);
  CHECK(s4.matrix == Matrix::identity(4));
  CHECK(verify_algebra_map(counit_unit_map(*h), h->algebra(), h->algebra()).passed());
  CHECK(verify_algebra_map(identity_map(4), h->algebra(), h->algebra()).passed());
  // S is an anti-morphism, not a morphism, on the non-commutative H4.
  LinearMap wrong{"S", h->antipode_matrix(), MapKind::morphism};
  CHECK_FALSE(verify_algebra_map(wrong, h->algebra(), h->algebra()).passed());
}

TEST_CASE("group axioms") {
  for (auto g : {cyclic_group(1), cyclic_group(2), cyclic_group(5), symmetric_group_3()}) {
    CAPTURE(g.name);
    CHECK(verify(g).passed());
  }
  Group s3 = symmetric_group_3();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) CHECK(s3.mul(a, b) == oracle::s3_mul(a, b));
  CHECK(group_by_name("Z4").order() == 4);
  CHECK_THROWS_AS(group_by_name("A5"), std::invalid_argument);
}
