#include <doctest.h>

#include <functional>
#include <string>

#include "hopfkit/io.hpp"

using namespace hopfkit;

namespace {

std::string fixture(const std::string& name) { return std::string(HOPFKIT_FIXTURES) + "/" + name; }

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scalars in JSON") {
  CHECK(scalar_from_json(Json(3), "x") == Scalar(3));
  CHECK(scalar_from_json(Json("-1/2"), "x") == Scalar(-1) / Scalar(2));
  CHECK(scalar_from_json(Json("(q^2-1)/(q-1)"), "x") == Scalar::q() + Scalar(1));
  CHECK(scalar_to_json(Scalar(-1) / Scalar(2)) == Json("-1/2"));
  CHECK_THROWS_AS(scalar_from_json(Json(true), "x"), InputError);
  const std::string msg = error_of([] { scalar_from_json(Json("1//2"), "entry"); });
  CHECK(msg.find("entry") == 0);
  CHECK(msg.find("column 3") != std::string::npos);
}

TEST_CASE("JSON syntax errors carry line and column") {
  const std::string msg = error_of([] { parse_json("{\n  \"a\": [1,\n  2,, 3]\n}", "f.json"); });
  CHECK(msg.find("f.json:3:") == 0);
  CHECK_THROWS_AS(load_source(fixture("truncated.json")), InputError);
  CHECK_THROWS_AS(load_source("missing/file.json"), InputError);
  Source catalog = load_source("sweedler-H4");
  CHECK(catalog.json == Json("sweedler-H4"));
}

TEST_CASE("bialgebra round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    BialgebraPtr b = catalog_bialgebra(name);
    Json j = bialgebra_to_json(*b);
    BialgebraPtr back = bialgebra_from_json(parse_json(j.dump(), name));
    CHECK(*back == *b);
    CHECK(back->has_antipode() == b->has_antipode());
    if (b->has_antipode()) CHECK(back->antipode_matrix() == b->antipode_matrix());
    CHECK(bialgebra_to_json(*back).dump() == j.dump());
  }
}

TEST_CASE("fixture files") {
  BialgebraPtr kz2 = bialgebra_from_json(load_source(fixture("kz2.json")).json);
  // Same structure tensors as the catalog entry; only the labels differ.
  Json mine = bialgebra_to_json(*kz2), cat = bialgebra_to_json(*group_algebra(cyclic_group(2)));
  for (auto* x : {&mine, &cat}) {
    x->erase("name");
    x->erase("basis");
  }
  CHECK(mine == cat);
  CHECK(verify(*kz2, Level::hopf).passed());

  BialgebraPtr bad = bialgebra_from_json(load_source(fixture("noncoassoc.json")).json);
  auto report = verify(*bad, Level::bialgebra);
  const CheckResult* c = report.find("coassociativity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->witness.has_value());

  const std::string msg = error_of([] { bialgebra_from_json(load_source(fixture("bad_scalar.json")).json); });
  CHECK(msg.find("algebra.mult[3]") == 0);
}

TEST_CASE("structural mistakes in definitions") {
  Json j = bialgebra_to_json(*sweedler_h4());
  Json short_basis = j;
  short_basis["basis"].erase(short_basis["basis"].size() - 1);
  CHECK_THROWS_AS(bialgebra_from_json(short_basis), InputError);
  Json bad_index = j;
  bad_index["mult"][0][0] = 9;
  CHECK(error_of([&] { bialgebra_from_json(bad_index); }).find("algebra.mult[0][0]") == 0);
  Json no_counit = j;
  no_counit.erase("counit");
  CHECK_THROWS_AS(bialgebra_from_json(no_counit), InputError);
  CHECK_THROWS_AS(bialgebra_from_json(Json("nope")), InputError);
}

TEST_CASE("Yetter-Drinfeld round trip") {
  for (const auto& entry : catalog_yd()) {
    CAPTURE(entry.name);
    std::vector<YDModule> forms{entry.module, yd_dual(entry.module)};
    if (entry.expected_pass) forms.push_back(yd_ll_to_lr(entry.module));
    for (const auto& m : forms) {
      YDModule back = yd_from_json(parse_json(yd_to_json(m).dump(2), "yd"));
      CHECK(back.corner == m.corner);
      CHECK(back.same_tensors(m));
      CHECK(check_yd(back).passed() == entry.expected_pass);
    }
  }
  CHECK(yd_from_json(Json("kS3-transpositions")).same_tensors(s3_transposition_yd()));
  Json j = yd_to_json(s3_transposition_yd());
  j["corner"] = "UP";
  CHECK_THROWS_AS(yd_from_json(j), InputError);
}

TEST_CASE("calculus round trip") {
  Group s3 = symmetric_group_3();
  for (const auto& c : {finite_group_calculus(s3, transpositions(s3)), finite_group_calculus(s3, {1}),
                        finite_group_calculus(cyclic_group(3), {1, 2})}) {
    FODC back = fodc_from_json(parse_json(fodc_to_json(c).dump(), "fodc"));
    CHECK(*back.bialgebra == *c.bialgebra);
    CHECK(back.partials == c.partials);
    CHECK(back.action == c.action);
    CHECK(back.labels == c.labels);
    CHECK(back.coaction.has_value() == c.coaction.has_value());
    if (c.coaction) CHECK(*back.coaction == *c.coaction);
    CHECK(fodc_to_json(back).dump() == fodc_to_json(c).dump());
  }
}

TEST_CASE("module sources and right comodules") {
  NamedModule m = module_source_from_json(Json("H4-bimodule"));
  CHECK(m.module == h4_two_dim_module(m.bialgebra));
  Json def{{"algebra", "group-algebra(Z2)"}, {"module", action_to_json(1, sign_module(group_algebra(cyclic_group(2))).action)}};
  NamedModule sign = module_source_from_json(def);
  CHECK(sign.module == sign_module(sign.bialgebra));

  BialgebraPtr ks3 = group_algebra(symmetric_group_3());
  RightComodule rc = right_comodule_from_json(Json("kS3-transpositions"), ks3);
  CHECK(rc == std::get<RightComodule>(yd_ll_to_rr(s3_transposition_yd()).coaction));
  CoMatrix cm = comatrix_from_json(comatrix_to_json(rc.coaction), 6, "c");
  CHECK(cm == rc.coaction);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("report rendering") {
  CliReport r;
  r.add(verify(*sweedler_h4(), Level::hopf));
  BialgebraPtr bad = bialgebra_from_json(load_source(fixture("noncoassoc.json")).json);
  r.add(verify(*bad, Level::bialgebra), "bad: ");
  CHECK_FALSE(r.ok());
  const std::string a = render_json(r, "v", "d"), b = render_json(r, "v", "d");
  CHECK(a == b);
  Json parsed = Json::parse(a);
  CHECK(parsed["passed"] == false);
  bool witness = false;
  for (const auto& c : parsed["checks"])
    if (c["name"] == "bad: coassociativity") witness = c.contains("witness") && c["witness"]["lhs"] != c["witness"]["rhs"];
  CHECK(witness);
  // Sorted by name.
  auto sorted = r.sorted();
  for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(sorted[i - 1].check.name <= sorted[i].check.name);
  CHECK(render_text(r, "v", "d").find("not as expected") != std::string::npos);

  CliReport expected_failure;
  expected_failure.add(verify(*bad, Level::bialgebra), "", false);
  // Checks that hold where a failure was expected count against the run.
  CHECK_FALSE(expected_failure.ok());
}
