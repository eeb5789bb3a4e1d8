#include <doctest.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/duality.hpp"

using namespace hopfkit;

namespace {

const CheckResult& require_check(const VerificationReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, name);
  return *c;
}

DualFreeBimodule dual_of(const NamedModule& m) {
  return dualize(FreeBimodule(rule_from_left_module(m.bialgebra, m.module)));
}

}  // namespace

TEST_CASE("pairing on basis elements") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  // X = a⊗e^k has shape {n, d}; x = e_i⊗b has shape {d, n}.
  auto dual_el = [](std::size_t a, std::size_t k) {
    Tensor t({2, 2});
    t.at({a, k}) = 1;
    return t;
  };
  auto el = [](std::size_t i, std::size_t b) {
    Tensor t({2, 2});
    t.at({i, b}) = 1;
    return t;
  };
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(pair(*kz2, dual_el(0, k), el(i, 0)) == (i == k ? unit_vec(2, 0) : zero_vec(2)));
  CHECK(pair(*kz2, dual_el(1, 1), el(1, 1)) == unit_vec(2, 0));  // g·g = 1
  CHECK(pair(*kz2, dual_el(1, 0), el(1, 1)) == zero_vec(2));     // e^0(e_1) = 0
  CHECK_THROWS_AS(pair(*kz2, Tensor({2, 3}), el(0, 0)), StructuralError);
}

TEST_CASE("dual rule is the transpose") {
  BialgebraPtr h = sweedler_h4();
  FreeBimodule triv(rule_from_left_module(h, trivial_left_module(*h, 2)));
  FreeBimodule td = dual_bimodule(triv);
  CHECK(td.presentation() == Presentation::left_free);
  CHECK(td.rule() == rule_from_right_module(h, trivial_right_module(*h, 2)));

  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  FreeBimodule sign(rule_from_left_module(kz2, sign_module(kz2)));
  FreeBimodule sd = dual_bimodule(sign);
  CHECK(sd.rule()(1, 0, 0) == Vec{0, -1});
  CHECK(require_check(sd.rule().verify(), "commutation rule product").passed);

  NamedModule fz3 = catalog_module("kZ3-fun-bimodule");
  DualFreeBimodule d = dual_of(fz3);
  CHECK(dual_bimodule(d.dual).rule() == d.source.rule());
  // Φ^i_k(a) = Λ^k_i(a) entry by entry.
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) CHECK(d.dual.rule()(a, i, k) == d.source.rule()(a, k, i));
}

TEST_CASE("dualize refuses an invalid rule") {
  NamedModule m = catalog_module("H4-bimodule");
  CommutationRule rule = rule_from_left_module(m.bialgebra, m.module);
  rule(3, 0, 0)[0] += 1;
  CHECK_THROWS_AS(dual_bimodule(FreeBimodule(rule)), RefusedError);
}

TEST_CASE("pairing checks on the catalog") {
  for (const auto& m : catalog_modules()) {
    CAPTURE(m.name);
    DualFreeBimodule d = dual_of(m);
    auto report = check_pairing(d);
    CHECK_MESSAGE(report.passed(), report.summary());
    CHECK(d.dual.verify().passed());
  }
}

TEST_CASE("covariance of the dual: co-opposite always, B only when cocommutative") {
  for (const auto& m : catalog_modules()) {
    CAPTURE(m.name);
    DualFreeBimodule d = dual_of(m);
    auto cop = check_dual_covariance(d, co_opposite(m.bialgebra));
    CHECK_MESSAGE(cop.passed(), cop.summary());
    auto over_b = check_dual_covariance(d, m.bialgebra);
    CHECK(require_check(over_b, "dual action from transpose").passed);
    CHECK(require_check(over_b, "source right covariance").passed);
    const CheckResult& left = require_check(over_b, "dual left covariance");
    const bool cocommutative = *co_opposite(m.bialgebra) == *m.bialgebra;
    if (cocommutative) {
      CHECK(left.passed);
    } else {
      CHECK_FALSE(left.passed);
      CHECK(left.witness.has_value());
    }
  }
}

TEST_CASE("trivial action: dual covariance reduces to coassociativity") {
  BialgebraPtr h = sweedler_h4();
  DualFreeBimodule d = dualize(FreeBimodule(rule_from_left_module(h, trivial_left_module(*h, 1))));
  CHECK(check_dual_covariance(d, co_opposite(h)).passed());
  CHECK(check_dual_covariance(d, h).passed());
}

TEST_CASE("antipode pairing identity") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  CHECK(pairing_identity(kz2, trivial_right_comodule(*kz2, 2)).passed());
  RightComodule g{kz2->coalgebra_ptr(), CoMatrix{1, {unit_vec(2, 1)}}};
  auto r = pairing_identity(kz2, g);
  CHECK(require_check(r, "antipode contraction").passed);
  CHECK(require_check(r, "pairing identity").passed);

  for (const auto& entry : catalog_yd()) {
    if (!entry.expected_pass) continue;
    CAPTURE(entry.name);
    YDModule rr = yd_ll_to_rr(entry.module);
    auto report = pairing_identity(rr.bialgebra, std::get<RightComodule>(rr.coaction));
    CHECK_MESSAGE(report.passed(), report.summary());
    const CheckResult& c = require_check(report, "antipode contraction");
    CHECK(c.cases == rr.dim() * rr.dim());
  }
}

TEST_CASE("pairing identity fails on a non-comodule") {
  BialgebraPtr kz2 = group_algebra(cyclic_group(2));
  RightComodule bad{kz2->coalgebra_ptr(), CoMatrix{1, {Vec{1, 1}}}};
  auto r = pairing_identity(kz2, bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(require_check(r, "antipode contraction").passed);
}
