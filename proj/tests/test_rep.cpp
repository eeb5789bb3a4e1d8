#include <doctest.h>

#include "hopfkit/catalog.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

// Left multiplication matrices of H4 built from the g^a x^b model.
LeftModule h4_regular_oracle(const BialgebraPtr& h) {
  LeftModule m{h->algebra_ptr(), 4, {}};
  for (std::size_t j = 0; j < 4; ++j) {
    Matrix l(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      Vec p = oracle::H4::mul(j, k);
      for (std::size_t i = 0; i < 4; ++i) l(i, k) = p[i];
    }
    m.action.push_back(l);
  }
  return m;
}

}  // namespace

TEST_CASE("transpose of modules") {
  BialgebraPtr h = sweedler_h4();
  LeftModule triv = trivial_left_module(*h, 3);
  RightModule rt = transpose_module(triv);
  CHECK(rt == trivial_right_module(*h, 3));

  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  RightModule sign = transpose_module(sign_module(kz2));
  CHECK(sign.action[1] == Matrix::from_rows({{-1}}));
  CHECK(sign.verify().passed());

  LeftModule reg = left_regular_module(h->algebra_ptr());
  CHECK(reg == h4_regular_oracle(h));
  RightModule reg_t = transpose_module(reg);
  auto report = reg_t.verify();
  CHECK(report.passed());
  // ρ(ab) = ρ(b)ρ(a) on all 16 pairs, directly.
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      CHECK(reg_t.act(oracle::H4::mul(a, b)) == reg_t.action[b] * reg_t.action[a]);
  CHECK(transpose_module(reg_t) == reg);
}

TEST_CASE("transpose refuses invalid input") {
  BialgebraPtr h = sweedler_h4();
  LeftModule bad = left_regular_module(h->algebra_ptr());
  bad.action[2](0, 0) = 1;
  auto report = bad.verify();
  CHECK_FALSE(report.passed());
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->witness.has_value());
  CHECK_THROWS_AS(transpose_module(bad), RefusedError);

  LeftComodule badc = regular_comodule(h);
  badc.coaction(0, 0) = zero_vec(4);
  CHECK_FALSE(badc.verify().passed());
  CHECK_THROWS_AS(transpose_comodule(badc), RefusedError);
}

TEST_CASE("transpose of comodules") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  CHECK(transpose_comodule(trivial_left_comodule(*kz2, 2)) == trivial_right_comodule(*kz2, 2));

  LeftComodule g = grading_comodule(kz2, {1});
  RightComodule r = transpose_comodule(g);
  CHECK(r.coaction(0, 0) == unit_vec(2, 1));
  CHECK(r.verify().passed());

  BialgebraPtr ks3 = group_algebra(symmetric_group_3());
  LeftComodule t = grading_comodule(ks3, transpositions(symmetric_group_3()));
  CHECK(t.verify().passed());
  RightComodule tr = transpose_comodule(t);
  CHECK(tr.verify().passed());
  CHECK(transpose_comodule(tr) == t);

  BialgebraPtr h = sweedler_h4();
  LeftComodule reg = regular_comodule(h);
  CHECK(reg.verify().passed());
  CHECK(transpose_comodule(reg).verify().passed());
}

TEST_CASE("pull-back along algebra (anti)morphisms") {
  BialgebraPtr h = sweedler_h4();
  LeftModule reg = left_regular_module(h->algebra_ptr());

  auto same = pull_back(identity_map(4), h->algebra_ptr(), reg);
  REQUIRE(same.left.has_value());
  CHECK(*same.left == reg);

  auto triv = pull_back(counit_unit_map(*h), h->algebra_ptr(), reg);
  REQUIRE(triv.left.has_value());
  CHECK(*triv.left == trivial_left_module(*h, 4));

  auto flipped = pull_back(antipode_map(*h), h->algebra_ptr(), reg);
  CHECK_FALSE(flipped.left.has_value());
  REQUIRE(flipped.right.has_value());
  CHECK(flipped.right->verify().passed());
  // ρ(a) = λ(S(a)).
  for (std::size_t a = 0; a < 4; ++a) CHECK(flipped.right->action[a] == reg.act(oracle::H4::antipode(a)));

  LinearMap mislabelled{"S", h->antipode_matrix(), MapKind::morphism};
  CHECK_THROWS_AS(pull_back(mislabelled, h->algebra_ptr(), reg), RefusedError);
}

TEST_CASE("push-forward along coalgebra (anti)morphisms") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  LeftComodule g = grading_comodule(kz2, {1});
  auto same = push_forward(identity_map(2), kz2->coalgebra_ptr(), g);
  REQUIRE(same.left.has_value());
  CHECK(*same.left == g);
  auto s = push_forward(antipode_map(*kz2), kz2->coalgebra_ptr(), g);
  REQUIRE(s.right.has_value());
  CHECK(s.right->coaction(0, 0) == unit_vec(2, 1));

  Group s3 = symmetric_group_3();
  BialgebraPtr ks3 = group_algebra(s3);
  auto t = transpositions(s3);
  auto pushed = push_forward(antipode_map(*ks3), ks3->coalgebra_ptr(), grading_comodule(ks3, t));
  REQUIRE(pushed.right.has_value());
  CHECK(pushed.right->verify().passed());
  for (std::size_t k = 0; k < t.size(); ++k) CHECK(pushed.right->coaction(k, k) == unit_vec(6, oracle::s3_inv(t[k])));

  // S on H4 pushes the regular left comodule to a right comodule.
  BialgebraPtr h = sweedler_h4();
  auto hp = push_forward(antipode_map(*h), h->coalgebra_ptr(), regular_comodule(h));
  REQUIRE(hp.right.has_value());
  CHECK(hp.right->verify().passed());
}

TEST_CASE("module examples over the catalog") {
  BialgebraPtr kz3 = group_algebra(cyclic_group(3));
  LeftModule rot = rotation_module(kz3);
  CHECK(rot.verify().passed());
  CHECK(rot.action[1] * rot.action[1] * rot.action[1] == Matrix::identity(2));
  BialgebraPtr h = sweedler_h4();
  CHECK(h4_two_dim_module(h).verify().passed());
  CHECK(adjoint_module(h).verify().passed());
  BialgebraPtr fs3 = function_algebra(symmetric_group_3());
  CHECK(evaluation_module(fs3, transpositions(symmetric_group_3())).verify().passed());
  CHECK(conjugation_comodule(fs3, symmetric_group_3(), transpositions(symmetric_group_3())).verify().passed());
}

TEST_CASE("structural errors on malformed modules") {
  BialgebraPtr h = sweedler_h4();
  LeftModule short_one{h->algebra_ptr(), 2, {Matrix::identity(2)}};
  CHECK_THROWS_AS(short_one.verify(), StructuralError);
  LeftModule wrong_shape{h->algebra_ptr(), 2, std::vector<Matrix>(4, Matrix::identity(3))};
  CHECK_THROWS_AS(wrong_shape.verify(), StructuralError);
}
