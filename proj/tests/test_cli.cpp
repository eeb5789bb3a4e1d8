#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run hopfkit(const std::string& args) {
  const std::string cmd = std::string("\"") + HOPFKIT_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string("\"") + HOPFKIT_FIXTURES + "/" + name + "\""; }

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(hopfkit("check sweedler-H4 --level hopf").code == 0);
  CHECK(hopfkit("check " + fixture("kz2.json") + " --level hopf").code == 0);
  Run bad = hopfkit("check " + fixture("noncoassoc.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  coassociativity") != std::string::npos);
  CHECK(bad.out.find("at e=g") != std::string::npos);
  Run scalar = hopfkit("check " + fixture("bad_scalar.json"));
  CHECK(scalar.code == 2);
  CHECK(scalar.out.find("1//2") != std::string::npos);
  CHECK(hopfkit("check " + fixture("truncated.json")).code == 2);
  CHECK(hopfkit("frobnicate").code == 2);
  CHECK(hopfkit("check no-such-algebra").code == 2);
  CHECK(hopfkit("--help").code == 0);
}

TEST_CASE("yetter-drinfeld commands") {
  CHECK(hopfkit("yd check kS3-transpositions").code == 0);
  Run broken = hopfkit("yd check broken-kS3-transpositions");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("a=(12)") != std::string::npos);
  CHECK(hopfkit("yd transform kS3-transpositions --to rr").code == 0);
  CHECK(hopfkit("yd dual broken-kS3-transpositions").code == 1);
  Run yb = hopfkit("--format json yangbaxter kS3-transpositions --emit-matrix");
  CHECK(yb.code == 0);
  auto j = nlohmann::json::parse(yb.out);
  CHECK(j["passed"] == true);
}

TEST_CASE("dichotomy is the expected outcome") {
  Run r = hopfkit("--format json dualize --catalog kS3-bimodule --check-covariance");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool saw_fail = false, saw_cop_pass = false;
  for (const auto& c : j["checks"]) {
    const std::string name = c["name"];
    if (name == "over B: dual left covariance") {
      saw_fail = c["holds"] == false && c.contains("witness");
      CHECK(c["expected"] == false);
    }
    if (name == "over B^cop: dual left covariance") saw_cop_pass = c["holds"] == true;
  }
  CHECK(saw_fail);
  CHECK(saw_cop_pass);
  // Demanding both sides makes the same run fail.
  CHECK(hopfkit("dualize --catalog kS3-bimodule --check-covariance --expect both-pass").code == 1);
  CHECK(hopfkit("dualize --catalog kZ3-bimodule --check-covariance").code == 0);
}

TEST_CASE("structured reports are byte-identical across runs and kernels") {
  for (const std::string& args :
       {std::string("check sweedler-H4 --level hopf"), std::string("dualize --catalog H4-bimodule --check-covariance"),
        std::string("check ") + fixture("noncoassoc.json"), std::string("calculus bracket --group S3 --subset transpositions --emit table")}) {
    CAPTURE(args);
    Run a = hopfkit("--format json " + args), b = hopfkit("--format json " + args),
        s = hopfkit("--format json --serial " + args);
    CHECK(a.out == b.out);
    CHECK(a.out == s.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("calculus round trip through a file") {
  const std::string path = "hopfkit_cli_test_s3.json";
  CHECK(hopfkit("calculus build --group S3 --subset transpositions -o " + path).code == 0);
  CHECK(hopfkit("calculus check " + path).code == 0);
  CHECK(hopfkit("calculus vector-fields " + path + " --emit chi").code == 0);
  Run bracket = hopfkit("--format json calculus bracket " + path + " --emit table");
  CHECK(bracket.code == 0);
  auto j = nlohmann::json::parse(bracket.out);
  CHECK(j["output"]["closed"] == true);
  std::remove(path.c_str());
  CHECK(hopfkit("calculus build --group Z3 --subset 0").code == 2);
}
