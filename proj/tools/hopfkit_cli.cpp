// hopfkit: verify Hopf-algebraic structures from definition files or the
// built-in catalog. Exit status: 0 every check as expected, 1 a check
// failed, 2 bad input.

#include <fstream>
#include <functional>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfkit/io.hpp"
#include "hopfkit/parallel.hpp"

#ifndef HOPFKIT_VERSION
#define HOPFKIT_VERSION "0.0.0"
#endif

using namespace hopfkit;

namespace {

struct Context {
  std::vector<std::string> args;     // normalized command line
  std::vector<std::string> sources;  // texts of everything loaded

  Source load(const std::string& path_or_name) {
    Source s = load_source(path_or_name);
    sources.push_back(s.text);
    return s;
  }

  /// Decodes a loaded definition; decoding errors name the file.
  template <class Fn>
  auto parse(const std::string& path_or_name, Fn&& decode) {
    Source s = load(path_or_name);
    try {
      return decode(s.json);
    } catch (const InputError& e) {
      throw InputError(s.origin + ": " + e.what());
    }
  }

  std::string digest() const {
    std::string all;
    for (const auto& a : args) all += a + '\0';
    for (const auto& s : sources) all += s + '\0';
    return sha256_hex(all);
  }
};

Level declared_level(const Bialgebra& b) { return b.has_antipode() ? Level::hopf : Level::bialgebra; }

/// Loaded structures are verified to their declared level before use.
BialgebraPtr load_bialgebra(Context& ctx, const std::string& path, CliReport& report) {
  BialgebraPtr b = ctx.parse(path, [&](const Json& j) { return bialgebra_from_json(j); });
  report.add(verify(*b, declared_level(*b)), "algebra: ");
  return b;
}

bool loaded(const CliReport& report) { return report.ok(); }

YDModule load_yd(Context& ctx, const std::string& path, CliReport& report) {
  YDModule m = ctx.parse(path, [&](const Json& j) { return yd_from_json(j); });
  report.add(verify(*m.bialgebra, declared_level(*m.bialgebra)), "algebra: ");
  return m;
}

YDModule to_right_right(const YDModule& m) {
  switch (m.corner) {
    case Corner::RR: return m;
    case Corner::LL: return yd_ll_to_rr(m);
    case Corner::LR: return yd_lr_to_rr(m);
    case Corner::RL: break;
  }
  throw InputError("yd: right-left modules are not supported by this command");
}

Level parse_level(const std::string& s) {
  if (s == "algebra") return Level::algebra;
  if (s == "coalgebra") return Level::coalgebra;
  if (s == "bialgebra") return Level::bialgebra;
  return Level::hopf;
}

bool cocommutative(const Bialgebra& b) {
  const Coalgebra& c = b.coalgebra();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Tensor d = c.comultiply(unit_vec(b.dim(), i));
    for (std::size_t x = 0; x < b.dim(); ++x)
      for (std::size_t y = 0; y < x; ++y)
        if (!(d.at({x, y}) == d.at({y, x}))) return false;
  }
  return true;
}

Json rule_to_json(const CommutationRule& rule) {
  Json j;
  j["presentation"] = to_string(rule.presentation);
  j["dim"] = rule.dim;
  Json entries = Json::array();
  const std::size_t n = rule.bialgebra->dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < rule.dim; ++i)
      for (std::size_t k = 0; k < rule.dim; ++k) {
        const Vec& v = rule(a, i, k);
        if (is_zero(v)) continue;
        Json coeffs = Json::array();
        for (const auto& s : v) coeffs.push_back(scalar_to_json(s));
        entries.push_back(Json::array({a, i, k, coeffs}));
      }
  j["entries"] = entries;
  return j;
}

// ---------------------------------------------------------------------------

CliReport cmd_check(Context& ctx, const std::string& path, const std::string& level) {
  CliReport r;
  BialgebraPtr b = ctx.parse(path, [&](const Json& j) { return bialgebra_from_json(j); });
  r.add(verify(*b, parse_level(level)));
  Json out;
  out["name"] = b->name();
  out["dim"] = b->dim();
  out["kind"] = b->kind() == HopfKind::bialgebra ? "bialgebra" : b->kind() == HopfKind::hopf ? "hopf" : "hopf (bijective antipode)";
  if (b->has_antipode()) {
    auto order = antipode_order(*b);
    out["antipode_order"] = order ? Json(*order) : Json("> 64");
  }
  r.output = out;
  return r;
}

CliReport cmd_yd_check(Context& ctx, const std::string& path) {
  CliReport r;
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  r.add(check_yd(m));
  return r;
}

CliReport cmd_yd_transform(Context& ctx, const std::string& path, const std::string& to) {
  CliReport r;
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  r.add(check_yd(m), "input: ");
  YDModule out, back;
  if (to == "rr") {
    if (m.corner == Corner::LL) {
      out = yd_ll_to_rr(m);
      back = yd_rr_to_ll(out);
    } else if (m.corner == Corner::LR) {
      out = yd_lr_to_rr(m);
      back = yd_ll_to_lr(yd_rr_to_ll(out));
    } else {
      throw InputError("yd transform --to rr: input must be left-left or left-right");
    }
  } else if (to == "ll") {
    if (m.corner == Corner::RR) {
      out = yd_rr_to_ll(m);
      back = yd_ll_to_rr(out);
    } else if (m.corner == Corner::LR) {
      out = yd_lr_to_ll(m);
      back = yd_ll_to_lr(out);
    } else {
      throw InputError("yd transform --to ll: input must be right-right or left-right");
    }
  } else if (to == "lr") {
    if (m.corner != Corner::LL) throw InputError("yd transform --to lr: input must be left-left");
    out = yd_ll_to_lr(m);
    back = yd_lr_to_ll(out);
  } else if (to == "cop") {
    if (m.corner != Corner::LL && m.corner != Corner::RR)
      throw InputError("yd transform --to cop: input must be left-left or right-right");
    out = yd_to_cop(m);
    back = yd_to_cop(out);
  } else {  // dual
    out = yd_dual(m);
    back = yd_dual(out);
  }
  r.add(check_yd(out), "output: ");
  r.entries.push_back({make_check("round trip", "inverse transform restores the input tensors", back.same_tensors(m)),
                       true});
  r.output = yd_to_json(out);
  return r;
}

CliReport cmd_yd_dual(Context& ctx, const std::string& path) {
  CliReport r;
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  if (m.corner != Corner::LL && m.corner != Corner::RR) throw InputError("yd dual: input must be left-left or right-right");
  auto in = check_yd(m);
  YDModule d = yd_dual(m);
  auto out = check_yd(d);
  r.add(in, "input: ");
  r.add(out, "dual: ");
  r.entries.push_back({make_check("dual verdict agrees", "M passes iff its dual passes", in.passed() == out.passed()),
                       true});
  r.output = yd_to_json(d);
  return r;
}

CliReport cmd_yangbaxter(Context& ctx, const std::string& path, bool emit) {
  CliReport r;
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  auto in = check_yd(m);
  r.add(in, "input: ");
  if (!in.passed()) return r;
  YDModule rr = to_right_right(m);
  YangBaxterOperator op = yang_baxter(rr);
  r.add(op.verify());
  r.add(check_qybe(braid_to_qybe(op), op.dim));
  if (emit) {
    Json out;
    out["dim"] = op.dim;
    out["basis"] = "e_i⊗e_k at row/column i*dim+k";
    out["matrix"] = matrix_to_json(op.matrix);
    r.output = out;
  }
  return r;
}

CliReport cmd_bimodule_build(Context& ctx, const std::string& path) {
  CliReport r;
  NamedModule src = ctx.parse(path, [&](const Json& j) { return module_source_from_json(j); });
  const BialgebraPtr& b = src.bialgebra;
  r.add(verify(*b, declared_level(*b)), "algebra: ");
  r.add(src.module.verify(), "module: ");
  if (!loaded(r)) return r;
  // V⊗B from λ, and its co-opposite form.
  for (bool cop : {false, true}) {
    const std::string p = cop ? "cop " : "";
    CommutationRule rule = cop ? rule_from_left_module_cop(b, src.module) : rule_from_left_module(b, src.module);
    TwistMap twist = twist_from_rule(rule);
    r.add(rule.verify(), p + "rule: ");
    r.add(check_twist(twist), p + "rule: ");
    r.entries.push_back({make_check(p + "rule: module round trip", "ε∘Λ recovers λ",
                                    left_module_from_rule(rule) == src.module),
                         true});
    r.entries.push_back(
        {make_check(p + "rule: twist round trip", "rule of the twist is the rule", rule_from_twist(twist) == rule),
         true});
    r.add(FreeBimodule(rule).verify(), p + "bimodule: ");
  }
  // B⊗Ṽ from the transposed right module ρ.
  RightModule rho = transpose_module(src.module);
  for (bool cop : {false, true}) {
    const std::string p = cop ? "cop right: " : "right: ";
    CommutationRule rule = cop ? rule_from_right_module_cop(b, rho) : rule_from_right_module(b, rho);
    FreeBimodule m(rule);
    r.add(m.verify(), p);
    r.add(check_twist(twist_from_rule(rule)), p);
    r.entries.push_back({make_check(p + "module round trip", "ε∘Φ recovers ρ", right_module_from_rule(rule) == rho),
                         true});
    r.entries.push_back({make_check(p + "generator action", "ρ(a)v = ε_V((1⊗v).a)",
                                    right_action_on_generators(m) == rho),
                         true});
    r.add(check_reconstruction(m, cop), p);
    r.add(check_epsilon_projection(m), p);
  }
  Json out;
  out["name"] = src.name;
  out["rule"] = rule_to_json(rule_from_left_module(b, src.module));
  r.output = out;
  return r;
}

CliReport cmd_bimodule_check(Context& ctx, const std::string& path, const std::string& sides) {
  CliReport r;
  Sides s = Sides::parse(sides);
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  auto in = check_yd(m);
  r.add(in, "input: ");
  if (!in.passed()) return r;
  YDModule rr = to_right_right(m);
  const auto& rho = std::get<RightModule>(rr.action);
  FreeBimodule fb(rule_from_right_module(rr.bialgebra, rho));
  r.add(check_covariance({fb, rr.bialgebra, std::get<RightComodule>(rr.coaction)}, s));
  return r;
}

CliReport cmd_bimodule_from_yd(Context& ctx, const std::string& path) {
  CliReport r;
  YDModule m = load_yd(ctx, path, r);
  if (!loaded(r)) return r;
  auto in = check_yd(m);
  r.add(in, "input: ");
  if (!in.passed()) return r;
  if (m.corner == Corner::LL) {
    const auto& lambda = std::get<LeftModule>(m.action);
    r.add(check_commutation_coaction(rule_from_left_module(m.bialgebra, lambda),
                                     rule_from_left_module_cop(m.bialgebra, lambda),
                                     std::get<LeftComodule>(m.coaction)));
  }
  CovariantBimodule cb = bicovariant_from_yd(to_right_right(m));
  r.add(check_covariance(cb, Sides::all()));
  r.add(check_reconstruction(cb.module));
  r.add(check_epsilon_projection(cb.module));
  Json out;
  out["rule"] = rule_to_json(cb.module.rule());
  out["right_coaction"] = comatrix_to_json(cb.right_coaction->coaction);
  r.output = out;
  return r;
}

CliReport cmd_dualize(Context& ctx, const std::string& path, bool covariance, std::string expect) {
  CliReport r;
  NamedModule src = ctx.parse(path, [&](const Json& j) { return module_source_from_json(j); });
  const BialgebraPtr& b = src.bialgebra;
  r.add(verify(*b, declared_level(*b)), "algebra: ");
  r.add(src.module.verify(), "module: ");
  if (!loaded(r)) return r;
  DualFreeBimodule d = dualize(FreeBimodule(rule_from_left_module(b, src.module)));
  r.add(check_pairing(d));
  r.entries.push_back({make_check("double dual", "dualizing twice returns the source rule",
                                  dual_bimodule(d.dual).rule() == d.source.rule()),
                       true});
  Json out;
  out["name"] = src.name;
  out["dual_rule"] = rule_to_json(d.dual.rule());
  const bool cocomm = cocommutative(*b);
  out["cocommutative"] = cocomm;
  if (covariance) {
    // Expected outcome: left covariance over B^cop always; over B only when
    // B is cocommutative.
    if (expect == "auto") expect = cocomm ? "both-pass" : "dichotomy";
    out["expect"] = expect;
    r.add(check_dual_covariance(d, co_opposite(b)), "over B^cop: ");
    VerificationReport over_b = check_dual_covariance(d, b);
    for (const auto& c : over_b.checks()) {
      CheckResult copy = c;
      copy.name = "over B: " + c.name;
      bool expected = !(expect == "dichotomy" && c.name == "dual left covariance");
      r.entries.push_back({std::move(copy), expected});
    }
  }
  r.output = out;
  return r;
}

CliReport cmd_pairing_identity(Context& ctx, const std::string& hopf, const std::string& comodule) {
  CliReport r;
  BialgebraPtr h = load_bialgebra(ctx, hopf, r);
  if (!loaded(r)) return r;
  RightComodule rc = ctx.parse(comodule, [&](const Json& j) { return right_comodule_from_json(j, h); });
  r.add(pairing_identity(h, rc));
  return r;
}

std::vector<std::size_t> parse_subset(const Group& g, const std::string& text) {
  if (text == "transpositions") {
    if (g.name != "S3") throw InputError("--subset transpositions requires --group S3");
    return transpositions(g);
  }
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("--subset: empty element");
    try {
      out.push_back(g.find(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--subset: ") + e.what());
    }
  }
  return out;
}

CliReport cmd_calculus_build(Context& ctx, const std::string& group, const std::string& subset,
                             const std::string& out_path, bool& raw) {
  ctx.sources.push_back(group + "|" + subset);
  Group g = [&] {
    try {
      return group_by_name(group);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--group: ") + e.what());
    }
  }();
  FODC c = [&] {
    try {
      return finite_group_calculus(g, parse_subset(g, subset));
    } catch (const RefusedError& e) {
      throw InputError(std::string("calculus build: ") + e.what());
    }
  }();
  Json def = fodc_to_json(c);
  CliReport r;
  if (out_path.empty()) {
    raw = true;
    r.output = def;
    return r;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError(out_path + ": cannot write");
  f << def.dump(2) << "\n";
  r.add(check_fodc(c));
  return r;
}

FODC load_fodc(Context& ctx, const std::string& path, CliReport& r) {
  FODC c = ctx.parse(path, [&](const Json& j) { return fodc_from_json(j); });
  r.add(verify(*c.bialgebra, declared_level(*c.bialgebra)), "algebra: ");
  return c;
}

CliReport cmd_calculus_check(Context& ctx, const std::string& path) {
  CliReport r;
  FODC c = load_fodc(ctx, path, r);
  if (!loaded(r)) return r;
  r.add(check_fodc(c));
  r.add(check_right_covariance(c));
  r.add(check_cartan_linearity(c));
  if (c.coaction) {
    YDModule ll = YDModule::left_left(c.bialgebra, c.action, *c.coaction);
    auto yd = check_yd(ll);
    r.add(yd, "yd: ");
    if (yd.passed() && c.bialgebra->has_bijective_antipode()) {
      CovariantBimodule cb = bicovariant_from_yd(yd_ll_to_rr(ll));
      r.add(check_covariance(cb, Sides::all()), "bicovariant: ");
    }
  }
  return r;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

CliReport cmd_vector_fields(Context& ctx, const std::string& path, bool emit) {
  CliReport r;
  FODC c = load_fodc(ctx, path, r);
  if (!loaded(r)) return r;
  r.add(check_cartan_linearity(c));
  if (emit) {
    Json out;
    out["basis"] = c.bialgebra->basis();
    Json chi = Json::object();
    auto fs = woronowicz_functionals(c);
    for (std::size_t i = 0; i < fs.size(); ++i) chi[c.labels[i]] = vec_json(fs[i]);
    out["chi"] = chi;
    r.output = out;
  }
  return r;
}

CliReport cmd_bracket(Context& ctx, const std::string& path, bool emit) {
  CliReport r;
  FODC c = load_fodc(ctx, path, r);
  if (!loaded(r)) return r;
  BracketTable t = quantum_lie_bracket(c);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) {
      const std::string name = "bracket closure [" + c.labels[i] + ", " + c.labels[j] + "]";
      r.entries.push_back({make_check(name, "[χ_i, χ_j] lies in span{χ_k}", t.constants[i * t.dim + j].has_value(),
                                      "bracket is outside span{χ_k}"),
                           true});
    }
  if (emit) {
    Json out;
    out["convention"] = "[χ_i, χ_j] = χ_i⋆χ_j − 𝓡̃^{mn}_{ij} χ_m⋆χ_n";
    out["basis"] = c.bialgebra->basis();
    out["generators"] = c.labels;
    out["zero"] = t.zero();
    out["closed"] = t.closed();
    Json table = Json::array();
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j) {
        Json e;
        e["i"] = c.labels[i];
        e["j"] = c.labels[j];
        e["value"] = vec_json(t.brackets[i * t.dim + j]);
        const auto& k = t.constants[i * t.dim + j];
        e["constants"] = k ? vec_json(*k) : Json(nullptr);
        table.push_back(std::move(e));
      }
    out["table"] = table;
    out["braiding"] = matrix_to_json(t.braiding);
    r.output = out;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf algebras, Yetter-Drinfeld modules, bimodules and calculi", "hopfkit"};
  app.set_version_flag("--version", HOPFKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool serial = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::function<CliReport(Context&)> run;
  bool raw_output = false;

  // check
  std::string alg_path, level = "hopf";
  auto* check = app.add_subcommand("check", "Verify a bialgebra or Hopf algebra");
  check->add_option("algebra", alg_path, "Definition file or catalog name")->required();
  check->add_option("--level", level, "Verification level")
      ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "hopf"}));
  check->callback([&] { run = [&](Context& c) { return cmd_check(c, alg_path, level); }; });

  // yd
  std::string yd_path, to;
  bool emit_matrix = false;
  auto* yd = app.add_subcommand("yd", "Yetter-Drinfeld modules");
  yd->require_subcommand(1);
  yd->fallthrough();
  auto* yd_check = yd->add_subcommand("check", "Check the compatibility condition");
  yd_check->add_option("yd", yd_path)->required();
  yd_check->callback([&] { run = [&](Context& c) { return cmd_yd_check(c, yd_path); }; });
  auto* yd_transform = yd->add_subcommand("transform", "Apply an antipode transform");
  yd_transform->add_option("yd", yd_path)->required();
  yd_transform->add_option("--to", to)->required()->check(CLI::IsMember({"rr", "ll", "lr", "cop", "dual"}));
  yd_transform->callback([&] { run = [&](Context& c) { return cmd_yd_transform(c, yd_path, to); }; });
  auto* yd_dual_cmd = yd->add_subcommand("dual", "Transpose to the dual carrier");
  yd_dual_cmd->add_option("yd", yd_path)->required();
  yd_dual_cmd->callback([&] { run = [&](Context& c) { return cmd_yd_dual(c, yd_path); }; });
  auto* yd_yb = yd->add_subcommand("yangbaxter", "Braiding of a Yetter-Drinfeld module");
  yd_yb->add_option("yd", yd_path)->required();
  yd_yb->add_flag("--emit-matrix", emit_matrix);
  yd_yb->callback([&] { run = [&](Context& c) { return cmd_yangbaxter(c, yd_path, emit_matrix); }; });

  auto* yb = app.add_subcommand("yangbaxter", "Braiding of a Yetter-Drinfeld module");
  yb->add_option("yd", yd_path)->required();
  yb->add_flag("--emit-matrix", emit_matrix);
  yb->callback([&] { run = [&](Context& c) { return cmd_yangbaxter(c, yd_path, emit_matrix); }; });

  // bimodule
  std::string module_path, sides = "all";
  auto* bim = app.add_subcommand("bimodule", "Free covariant bimodules");
  bim->require_subcommand(1);
  bim->fallthrough();
  auto* bim_build = bim->add_subcommand("build", "Bimodules from a left module");
  bim_build->add_option("--from-module", module_path, "Module definition or catalog name")->required();
  bim_build->callback([&] { run = [&](Context& c) { return cmd_bimodule_build(c, module_path); }; });
  auto* bim_check = bim->add_subcommand("check", "Covariance of B⊗V built from a YD module");
  bim_check->add_option("yd", yd_path)->required();
  bim_check->add_option("--sides", sides, "left-hopf,left,right,bicomodule,all");
  bim_check->callback([&] { run = [&](Context& c) { return cmd_bimodule_check(c, yd_path, sides); }; });
  auto* bim_yd = bim->add_subcommand("from-yd", "Bicovariant bimodule from YD data");
  bim_yd->add_option("yd", yd_path)->required();
  bim_yd->callback([&] { run = [&](Context& c) { return cmd_bimodule_from_yd(c, yd_path); }; });

  // dualize
  std::string dual_path, catalog_name, expect = "auto";
  bool check_cov = false;
  auto* dz = app.add_subcommand("dualize", "Dual of a free bimodule V⊗B");
  dz->add_option("bimodule", dual_path, "Bimodule definition file");
  dz->add_option("--catalog", catalog_name, "Catalog bimodule name");
  dz->add_flag("--check-covariance", check_cov);
  dz->add_option("--expect", expect, "Expected covariance outcome")
      ->check(CLI::IsMember({"auto", "dichotomy", "both-pass"}));
  dz->callback([&] {
    if (dual_path.empty() == catalog_name.empty())
      throw CLI::ValidationError("dualize", "give exactly one of a file or --catalog");
    run = [&](Context& c) {
      return cmd_dualize(c, dual_path.empty() ? catalog_name : dual_path, check_cov, expect);
    };
  });

  // pairing-identity
  std::string hopf_path, comodule_path;
  auto* pi = app.add_subcommand("pairing-identity", "Antipode pairing identity for a right comodule");
  pi->add_option("hopf", hopf_path)->required();
  pi->add_option("comodule", comodule_path, "Right comodule file or catalog YD name")->required();
  pi->callback([&] { run = [&](Context& c) { return cmd_pairing_identity(c, hopf_path, comodule_path); }; });

  // calculus
  std::string group, subset, out_path, fodc_path, emit;
  auto* calc = app.add_subcommand("calculus", "First-order differential calculi");
  calc->require_subcommand(1);
  calc->fallthrough();
  auto* cb = calc->add_subcommand("build", "Calculus on a finite group");
  cb->add_option("--group", group, "Z<n> or S3")->required();
  cb->add_option("--subset", subset, "Comma-separated labels or 'transpositions'")->required();
  cb->add_option("-o,--output", out_path, "Write the definition here and print a report");
  cb->callback([&] { run = [&](Context& c) { return cmd_calculus_build(c, group, subset, out_path, raw_output); }; });
  auto* cc = calc->add_subcommand("check", "Verify a calculus");
  cc->add_option("fodc", fodc_path)->required();
  cc->callback([&] { run = [&](Context& c) { return cmd_calculus_check(c, fodc_path); }; });
  auto* cv = calc->add_subcommand("vector-fields", "Vector fields and the functionals χ");
  cv->add_option("fodc", fodc_path)->required();
  cv->add_option("--emit", emit)->check(CLI::IsMember({"chi"}));
  cv->callback([&] { run = [&](Context& c) { return cmd_vector_fields(c, fodc_path, !emit.empty()); }; });
  auto* cbr = calc->add_subcommand("bracket", "Quantum Lie bracket table");
  cbr->add_option("fodc", fodc_path)->required();
  cbr->add_option("--emit", emit)->check(CLI::IsMember({"table"}));
  cbr->callback([&] { run = [&](Context& c) { return cmd_bracket(c, fodc_path, !emit.empty()); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_execution(serial ? Execution::serial : Execution::parallel);
  Context ctx;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--serial") continue;
    if (a == "--format") {
      ++i;
      continue;
    }
    if (a.rfind("--format=", 0) == 0) continue;
    ctx.args.push_back(a);
  }

  CliReport report;
  try {
    report = run(ctx);
  } catch (const RefusedError& e) {
    report.add(e.report());
    report.entries.push_back({make_check("refused", e.what(), false, e.what()), true});
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (raw_output) {
    std::cout << report.output.dump(2) << "\n";
    return 0;
  }
  const std::string digest = ctx.digest();
  std::cout << (format == "json" ? render_json(report, HOPFKIT_VERSION, digest)
                                 : render_text(report, HOPFKIT_VERSION, digest));
  return report.ok() ? 0 : 1;
}
