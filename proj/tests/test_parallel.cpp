#include <doctest.h>

#include <functional>
#include <random>

#include "hopfkit/calculus.hpp"
#include "hopfkit/parallel.hpp"

using namespace hopfkit;

namespace {

// Serializes every field of a report, witness included.
std::string fingerprint(const VerificationReport& r) {
  std::string out = r.subject() + "\n";
  for (const auto& c : r.checks()) {
    out += c.name + "|" + c.anchor + "|" + (c.passed ? "1" : "0") + "|" + std::to_string(c.cases);
    if (c.witness) out += "|" + c.witness->describe_indices() + "|" + c.witness->lhs + "|" + c.witness->rhs;
    out += "\n";
  }
  return out;
}

template <class Fn>
std::pair<std::string, std::string> both_modes(Fn&& fn) {
  set_execution(Execution::serial);
  std::string s = fingerprint(fn());
  set_execution(Execution::parallel);
  std::string p = fingerprint(fn());
  return {s, p};
}

struct ModeGuard {
  ~ModeGuard() { set_execution(Execution::parallel); }
};

}  // namespace

TEST_CASE("first_match agrees with the serial scan") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 500;
    std::vector<char> hits(n);
    const unsigned density = 1 + rng() % 50;
    for (auto& h : hits) h = rng() % density == 0;
    auto pred = [&](std::size_t i) { return hits[i] != 0; };
    CHECK(kernels::omp::first_match(n, pred) == kernels::serial::first_match(n, pred));
  }
  CHECK_FALSE(kernels::omp::first_match(0, [](std::size_t) { return true; }).has_value());
}

TEST_CASE("map_indices agrees with the serial map") {
  auto sq = [](std::size_t i) { return Scalar(static_cast<long>(i * i)) / Scalar(static_cast<long>(i + 1)); };
  CHECK(kernels::omp::map_indices<Scalar>(300, sq) == kernels::serial::map_indices<Scalar>(300, sq));
}

TEST_CASE("reports are identical in serial and parallel mode") {
  ModeGuard guard;
  std::vector<std::function<VerificationReport()>> jobs{
      [] { return verify(*sweedler_h4(), Level::hopf); },
      [] { return check_yd(catalog_yd("broken-kS3-transpositions").module); },
      [] { return check_yd(yd_dual(catalog_yd("broken-kS3-transpositions").module)); },
      [] { return check_yd(s3_transposition_yd()); },
      [] {
        NamedModule m = catalog_module("H4-bimodule");
        return check_dual_covariance(dualize(FreeBimodule(rule_from_left_module(m.bialgebra, m.module))),
                                     m.bialgebra);
      },
      [] {
        NamedModule m = catalog_module("H4-bimodule");
        CommutationRule rule = rule_from_left_module(m.bialgebra, m.module);
        rule(3, 0, 0)[0] += 1;
        return check_twist(twist_from_rule(rule));
      },
      [] {
        FODC c = finite_group_calculus(symmetric_group_3(), transpositions(symmetric_group_3()));
        c.partials[2](1, 4) += 1;
        return check_fodc(c);
      },
      [] { return yang_baxter(yd_ll_to_rr(s3_transposition_yd())).verify(); },
  };
  std::size_t failing = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    CAPTURE(j);
    auto [s, p] = both_modes(jobs[j]);
    CHECK(s == p);
    if (s.find("|0|") != std::string::npos) ++failing;
  }
  // Several jobs exercise the witness path.
  CHECK(failing >= 4);
}

TEST_CASE("bracket tables are identical in serial and parallel mode") {
  ModeGuard guard;
  FODC c = finite_group_calculus(symmetric_group_3(), transpositions(symmetric_group_3()));
  set_execution(Execution::serial);
  BracketTable s = quantum_lie_bracket(c);
  set_execution(Execution::parallel);
  BracketTable p = quantum_lie_bracket(c);
  CHECK(s.brackets == p.brackets);
  CHECK(s.constants == p.constants);
  CHECK(s.braiding == p.braiding);
}
