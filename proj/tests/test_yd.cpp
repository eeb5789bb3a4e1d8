#include <doctest.h>

#include <optional>
#include <tuple>

#include "hopfkit/catalog.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

BialgebraPtr idempotent_bialgebra() {
  std::vector<std::string> basis{"1", "z"};
  std::vector<SparseVec> mult{{{0, 1}}, {{1, 1}}, {{1, 1}}, {{1, 1}}};
  auto alg = std::make_shared<const Algebra>("mono", basis, mult, unit_vec(2, 0));
  std::vector<std::vector<PairTerm>> comult{{{0, 0, 1}}, {{1, 1, 1}}};
  auto co = std::make_shared<const Coalgebra>("mono", basis, comult, Vec{1, 1});
  return std::make_shared<const Bialgebra>("mono", alg, co);
}

YDModule kz2_line(long sign) {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  RightModule rho{kz2->algebra_ptr(), 1, {Matrix::from_rows({{1}}), Matrix::from_rows({{sign}})}};
  RightComodule r{kz2->coalgebra_ptr(), CoMatrix{1, {unit_vec(2, 1)}}};
  return YDModule::right_right(kz2, rho, r);
}

// First (a, i, k) in lexicographic order where a·c_k ≠ c_k·a, for the
// transposition class with trivial action and grading coaction over 𝕜[S3]:
// the left-left condition then reads δ^i_k a c_k = δ^i_k c_k a.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> broken_s3_first_violation() {
  const std::size_t t[3] = {1, 2, 3};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        if (i == k && oracle::s3_mul(a, t[k]) != oracle::s3_mul(t[k], a)) return std::tuple{a, i, k};
  return std::nullopt;
}

std::string witness_label(const Witness& w, const std::string& axis) {
  for (const auto& [name, label] : w.indices)
    if (name == axis) return label;
  return "?";
}

}  // namespace

TEST_CASE("trivial data is Yetter-Drinfeld over any bialgebra") {
  for (auto b : {sweedler_h4(), group_algebra(symmetric_group_3()), idempotent_bialgebra(), ground_field()}) {
    CAPTURE(b->name());
    CHECK(check_yd(trivial_yd(b, 2)).passed());
  }
}

TEST_CASE("transposition class over kS3") {
  YDModule m = s3_transposition_yd();
  auto report = check_yd(m);
  CHECK(report.passed());
  const CheckResult* c = report.find("yd left-left");
  REQUIRE(c != nullptr);
  CHECK(c->cases == 6 * 3 * 3);
}

TEST_CASE("trivial action on the transposition class fails at the first non-commuting pair") {
  YDModule m = catalog_yd("broken-kS3-transpositions").module;
  auto report = check_yd(m);
  CHECK_FALSE(report.passed());
  const CheckResult* c = report.find("yd left-left");
  REQUIRE(c != nullptr);
  REQUIRE(c->witness.has_value());
  auto expect = broken_s3_first_violation();
  REQUIRE(expect.has_value());
  auto [a, i, k] = *expect;
  CHECK(witness_label(*c->witness, "a") == symmetric_group_3().labels[a]);
  CHECK(witness_label(*c->witness, "a") == "(12)");
  CHECK(witness_label(*c->witness, "i") == "e" + std::to_string(i));
  CHECK(witness_label(*c->witness, "k") == "e" + std::to_string(k));
  CHECK(k == 1);  // the carrier vector of (13)
}

TEST_CASE("corner tag must match sidedness") {
  YDModule m = s3_transposition_yd();
  m.corner = Corner::RR;
  CHECK_THROWS_AS(check_yd(m), StructuralError);
}

TEST_CASE("left-left to right-right and back") {
  BialgebraPtr h = sweedler_h4();
  YDModule triv = yd_ll_to_rr(trivial_yd(h, 2));
  CHECK(triv.corner == Corner::RR);
  CHECK(std::get<RightModule>(triv.action) == trivial_right_module(*h, 2));
  CHECK(std::get<RightComodule>(triv.coaction) == trivial_right_comodule(*h, 2));

  YDModule s3 = yd_ll_to_rr(s3_transposition_yd());
  CHECK(check_yd(s3).passed());

  YDModule reg = adjoint_regular_yd(h);
  CHECK(yd_rr_to_ll(yd_ll_to_rr(reg)).same_tensors(reg));
}

TEST_CASE("missing inverse antipode is refused") {
  YDModule m = trivial_yd(idempotent_bialgebra(), 1);
  for (auto f : {yd_ll_to_rr, yd_to_cop, yd_ll_to_lr}) {
    try {
      f(m);
      FAIL("expected refusal");
    } catch (const RefusedError& e) {
      CHECK(std::string(e.what()).find("requires bijective antipode") != std::string::npos);
    }
  }
}

TEST_CASE("left-right to left-left") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  YDModule lr = YDModule::left_right(kz2, sign_module(kz2), RightComodule{kz2->coalgebra_ptr(), CoMatrix{1, {unit_vec(2, 1)}}});
  CHECK(check_yd(lr).passed());
  YDModule ll = yd_lr_to_ll(lr);
  CHECK(ll.corner == Corner::LL);
  CHECK(std::get<LeftComodule>(ll.coaction).coaction(0, 0) == unit_vec(2, 1));
  CHECK(check_yd(ll).passed());
  YDModule triv = trivial_yd(kz2, 1);
  CHECK(yd_lr_to_ll(yd_ll_to_lr(triv)).same_tensors(triv));
  CHECK(std::get<RightComodule>(yd_ll_to_lr(triv).coaction) == trivial_right_comodule(*kz2, 1));
}

TEST_CASE("catalog: transforms, duals and path independence") {
  for (const auto& entry : catalog_yd()) {
    CAPTURE(entry.name);
    const YDModule& m = entry.module;
    auto base = check_yd(m);
    CHECK(base.passed() == entry.expected_pass);

    // The dual has the same verdict, and a witness whenever it fails.
    YDModule d = yd_dual(m);
    CHECK(d.corner == Corner::RR);
    auto dual = check_yd(d);
    CHECK(dual.passed() == base.passed());
    if (!dual.passed()) CHECK(dual.first_failure()->witness.has_value());
    CHECK(yd_dual(d).same_tensors(m));

    if (!entry.expected_pass) {
      CHECK_THROWS_AS(yd_ll_to_rr(m), RefusedError);
      continue;
    }
    YDModule rr = yd_ll_to_rr(m);
    CHECK(check_yd(rr).passed());
    CHECK(yd_rr_to_ll(rr).same_tensors(m));

    YDModule cop = yd_to_cop(m);
    CHECK(check_yd(cop).passed());
    YDModule back = yd_to_cop(cop);
    CHECK(back.same_tensors(m));
    CHECK(*back.bialgebra == *m.bialgebra);
    CHECK(check_yd(yd_to_cop(rr)).passed());

    YDModule lr = yd_ll_to_lr(m);
    CHECK(lr.corner == Corner::LR);
    CHECK(check_yd(lr).passed());
    CHECK(yd_lr_to_ll(lr).same_tensors(m));
    CHECK(yd_ll_to_rr(yd_lr_to_ll(lr)).same_tensors(yd_lr_to_rr(lr)));

    YDModule oc = reinterpret_op_cop(m);
    CHECK(oc.corner == Corner::RR);
    CHECK(check_yd(oc).passed());
  }
}

TEST_CASE("braiding of trivial data is the flip") {
  for (std::size_t d : {1u, 2u, 3u}) {
    YangBaxterOperator r = yang_baxter(yd_ll_to_rr(trivial_yd(sweedler_h4(), d)));
    CHECK(r.matrix == flip_matrix(d));
  }
}

TEST_CASE("braiding of the transposition class") {
  YangBaxterOperator r = yang_baxter(yd_ll_to_rr(s3_transposition_yd()));
  const std::size_t t[3] = {1, 2, 3};
  Matrix expect(9, 9);
  // 𝓡(e_c⊗e_d) = e_d⊗e_{d⁻¹cd}
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t d = 0; d < 3; ++d) {
      std::size_t conj = oracle::s3_mul(oracle::s3_mul(oracle::s3_inv(t[d]), t[c]), t[d]);
      std::size_t pos = conj == t[0] ? 0 : conj == t[1] ? 1 : 2;
      expect(d * 3 + pos, c * 3 + d) = 1;
    }
  CHECK(r.matrix == expect);
  auto report = r.verify();
  CHECK(report.passed());
  const CheckResult* braid = report.find("braid relation");
  REQUIRE(braid != nullptr);
  CHECK(braid->cases == 27);
  CHECK(check_qybe(braid_to_qybe(r), 3).passed());
}

TEST_CASE("braiding of a signed line over kZ2") {
  YDModule m = kz2_line(-1);
  CHECK(check_yd(m).passed());
  YangBaxterOperator r = yang_baxter(m);
  CHECK(r.matrix == Matrix::from_rows({{-1}}));
  CHECK(r.verify().passed());
}

TEST_CASE("braiding refuses non-compatible input and left corners") {
  YDModule broken = yd_dual(catalog_yd("broken-kS3-transpositions").module);
  CHECK_THROWS_AS(yang_baxter(broken), RefusedError);
  CHECK_THROWS(yang_baxter(s3_transposition_yd()));
}

TEST_CASE("braid verdict agrees with the Kronecker-product form") {
  // (𝓡⊗id)(id⊗𝓡)(𝓡⊗id) = (id⊗𝓡)(𝓡⊗id)(id⊗𝓡) as 8×8 matrices.
  auto braided = [](const Matrix& r) {
    Matrix i2 = Matrix::identity(2);
    Matrix r12 = kron(r, i2), r23 = kron(i2, r);
    return r12 * r23 * r12 == r23 * r12 * r23;
  };
  std::vector<Matrix> samples{
      flip_matrix(2),
      Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}}),
      Matrix::from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      Matrix::from_rows({{2, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}}),
      Matrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
      Matrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
  };
  std::size_t failing = 0;
  for (const auto& m : samples) {
    auto report = YangBaxterOperator{2, m}.verify();
    const CheckResult* braid = report.find("braid relation");
    REQUIRE(braid != nullptr);
    CHECK(braid->passed == braided(m));
    if (!braid->passed) {
      ++failing;
      CHECK(braid->witness.has_value());
    }
  }
  CHECK(failing > 0);
}
