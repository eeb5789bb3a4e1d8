#pragma once

// Definition files (JSON) for bialgebras, modules, comodules, YD modules,
// bimodule sources and calculi; report rendering for the command line tool.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfkit/calculus.hpp"
#include "hopfkit/catalog.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

/// Malformed input; the message starts with the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source text of a definition: file contents, or a catalog name when no
/// such file exists (the JSON value is then that string).
struct Source {
  std::string origin;
  std::string text;
  Json json;
};

Source load_source(const std::string& path_or_name);
Json parse_json(const std::string& text, const std::string& origin);

Scalar scalar_from_json(const Json& j, const std::string& where);
Json scalar_to_json(const Scalar& s);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// { name, dim, basis, unit, mult, comult, counit, antipode? } or a catalog name.
BialgebraPtr bialgebra_from_json(const Json& j);
Json bialgebra_to_json(const Bialgebra& b);

/// { carrier_dim, action: [[j, rows]…] }; missing j default to zero.
std::vector<Matrix> action_from_json(const Json& j, std::size_t algebra_dim, std::size_t& carrier_dim,
                                     const std::string& where);
Json action_to_json(std::size_t carrier_dim, const std::vector<Matrix>& action);
/// { carrier_dim?, coaction: [[i, k, [coeffs]]…] }; carrier_dim is inferred when absent.
CoMatrix comatrix_from_json(const Json& j, std::size_t coalgebra_dim, const std::string& where);
Json comatrix_to_json(const CoMatrix& c);

/// { algebra, corner: LL|RR|LR|RL, module, comodule } or a catalog_yd name.
YDModule yd_from_json(const Json& j);
Json yd_to_json(const YDModule& m);

/// { algebra, module } (a left module) or a catalog_modules name.
NamedModule module_source_from_json(const Json& j);

/// { algebra, generators, module, partials: [[i, rows]…], comodule? }.
FODC fodc_from_json(const Json& j);
Json fodc_to_json(const FODC& c);

/// { name, source: right comodule block } for pairing-identity.
RightComodule right_comodule_from_json(const Json& j, const BialgebraPtr& h);

std::string sha256_hex(std::string_view data);

struct ReportEntry {
  CheckResult check;
  bool expected = true;  // whether the identity is expected to hold

  bool ok() const { return check.passed == expected; }
};

struct CliReport {
  std::vector<ReportEntry> entries;
  Json output;  // command payload, null when none

  void add(const VerificationReport& r, const std::string& prefix = "", bool expected = true);
  bool ok() const;
  /// Entries sorted by name; ties keep insertion order.
  std::vector<ReportEntry> sorted() const;
};

std::string render_json(const CliReport& r, const std::string& version, const std::string& digest);
std::string render_text(const CliReport& r, const std::string& version, const std::string& digest);

}  // namespace hopfkit
