#include "hopfkit/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

namespace hopfkit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(where, "expected an integer index");
  long long v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(where, "expected a non-negative integer");
  long long v = j.get<long long>();
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Vec vec_from_json(const Json& j, std::size_t n, const std::string& where) {
  array_at(j, where);
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Corner corner_from_string(const std::string& s, const std::string& where) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (u == "LL") return Corner::LL;
  if (u == "RR") return Corner::RR;
  if (u == "LR") return Corner::LR;
  if (u == "RL") return Corner::RL;
  fail(where, "unknown corner '" + s + "' (expected LL, RR, LR or RL)");
}

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError(origin + ":" + location(text, byte) + ": malformed JSON");
  }
}

Source load_source(const std::string& path_or_name) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(path_or_name)) {
    std::ifstream in(path_or_name, std::ios::binary);
    if (!in) throw InputError(path_or_name + ": cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    Json j = parse_json(text, path_or_name);
    return {path_or_name, std::move(text), std::move(j)};
  }
  if (path_or_name.find('/') != std::string::npos || path_or_name.find(".json") != std::string::npos)
    throw InputError(path_or_name + ": no such file");
  return {path_or_name, path_or_name, Json(path_or_name)};
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected a scalar (string or integer)");
  const std::string s = j.get<std::string>();
  try {
    return parse_scalar(s);
  } catch (const ParseError& e) {
    fail(where, "malformed scalar \"" + s + "\" at column " + std::to_string(e.position() + 1) + ": " + e.what());
  } catch (const ArithmeticError& e) {
    fail(where, "invalid scalar \"" + s + "\": " + e.what());
  }
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_at(j, where);
  if (j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_from_json(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

// ---------------------------------------------------------------------------

BialgebraPtr bialgebra_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return catalog_bialgebra(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("algebra", e.what());
    }
  }
  const std::string w = "algebra";
  const Json& name_j = field(j, "name", w);
  if (!name_j.is_string()) fail(w + ".name", "expected a string");
  const std::size_t n = size_from_json(field(j, "dim", w), w + ".dim");
  if (n == 0) fail(w + ".dim", "dimension must be positive");

  std::vector<std::string> basis;
  const Json& basis_j = array_at(field(j, "basis", w), w + ".basis");
  if (basis_j.size() != n) fail(w + ".basis", "expected " + std::to_string(n) + " labels");
  for (const auto& b : basis_j) {
    if (!b.is_string()) fail(w + ".basis", "labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  Vec unit = vec_from_json(field(j, "unit", w), n, w + ".unit");
  Vec counit = vec_from_json(field(j, "counit", w), n, w + ".counit");

  std::vector<Vec> mult(n * n, zero_vec(n));
  const Json& mult_j = array_at(field(j, "mult", w), w + ".mult");
  for (std::size_t e = 0; e < mult_j.size(); ++e) {
    const std::string we = w + ".mult[" + std::to_string(e) + "]";
    const Json& entry = array_at(mult_j[e], we);
    if (entry.size() != 3) fail(we, "expected [i, j, [[k, scalar]…]]");
    std::size_t a = index_from_json(entry[0], n, we + "[0]"), b = index_from_json(entry[1], n, we + "[1]");
    const Json& terms = array_at(entry[2], we + "[2]");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string wt = we + "[2][" + std::to_string(t) + "]";
      const Json& term = array_at(terms[t], wt);
      if (term.size() != 2) fail(wt, "expected [k, scalar]");
      mult[a * n + b][index_from_json(term[0], n, wt + "[0]")] += scalar_from_json(term[1], wt + "[1]");
    }
  }

  std::vector<std::vector<PairTerm>> comult(n);
  std::vector<Matrix> comult_dense(n, Matrix(n, n));
  const Json& comult_j = array_at(field(j, "comult", w), w + ".comult");
  for (std::size_t e = 0; e < comult_j.size(); ++e) {
    const std::string we = w + ".comult[" + std::to_string(e) + "]";
    const Json& entry = array_at(comult_j[e], we);
    if (entry.size() != 2) fail(we, "expected [i, [[j, k, scalar]…]]");
    std::size_t i = index_from_json(entry[0], n, we + "[0]");
    const Json& terms = array_at(entry[1], we + "[1]");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string wt = we + "[1][" + std::to_string(t) + "]";
      const Json& term = array_at(terms[t], wt);
      if (term.size() != 3) fail(wt, "expected [j, k, scalar]");
      comult_dense[i](index_from_json(term[0], n, wt + "[0]"), index_from_json(term[1], n, wt + "[1]")) +=
          scalar_from_json(term[2], wt + "[2]");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!comult_dense[i](a, b).is_zero()) comult[i].push_back({a, b, comult_dense[i](a, b)});

  std::optional<Matrix> antipode;
  if (auto it = j.find("antipode"); it != j.end() && !it->is_null()) {
    Matrix s(n, n);
    const Json& s_j = array_at(*it, w + ".antipode");
    for (std::size_t e = 0; e < s_j.size(); ++e) {
      const std::string we = w + ".antipode[" + std::to_string(e) + "]";
      const Json& entry = array_at(s_j[e], we);
      if (entry.size() != 2) fail(we, "expected [i, [[j, scalar]…]]");
      std::size_t i = index_from_json(entry[0], n, we + "[0]");
      const Json& terms = array_at(entry[1], we + "[1]");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string wt = we + "[1][" + std::to_string(t) + "]";
        const Json& term = array_at(terms[t], wt);
        if (term.size() != 2) fail(wt, "expected [j, scalar]");
        s(index_from_json(term[0], n, wt + "[0]"), i) += scalar_from_json(term[1], wt + "[1]");
      }
    }
    antipode = std::move(s);
  }

  std::vector<SparseVec> mult_sparse;
  for (const auto& v : mult) mult_sparse.push_back(sparsify(v));
  const std::string name = name_j.get<std::string>();
  auto alg = std::make_shared<const Algebra>(name, basis, std::move(mult_sparse), std::move(unit));
  auto co = std::make_shared<const Coalgebra>(name, basis, std::move(comult), std::move(counit));
  return std::make_shared<const Bialgebra>(name, alg, co, std::move(antipode));
}

Json bialgebra_to_json(const Bialgebra& b) {
  const std::size_t n = b.dim();
  Json j;
  j["name"] = b.name();
  j["dim"] = n;
  j["basis"] = b.basis();
  j["unit"] = vec_to_json(b.algebra().unit());
  Json mult = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const SparseVec& p = b.algebra().product(a, c);
      if (p.empty()) continue;
      Json terms = Json::array();
      for (const auto& t : p) terms.push_back(Json::array({t.index, scalar_to_json(t.coeff)}));
      mult.push_back(Json::array({a, c, terms}));
    }
  j["mult"] = mult;
  Json comult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json terms = Json::array();
    for (const auto& t : b.coalgebra().coproduct(i))
      terms.push_back(Json::array({t.left, t.right, scalar_to_json(t.coeff)}));
    comult.push_back(Json::array({i, terms}));
  }
  j["comult"] = comult;
  j["counit"] = vec_to_json(b.coalgebra().counit_vector());
  if (b.has_antipode()) {
    Json s = Json::array();
    const Matrix& m = b.antipode_matrix();
    for (std::size_t i = 0; i < n; ++i) {
      Json terms = Json::array();
      for (std::size_t r = 0; r < n; ++r)
        if (!m(r, i).is_zero()) terms.push_back(Json::array({r, scalar_to_json(m(r, i))}));
      s.push_back(Json::array({i, terms}));
    }
    j["antipode"] = s;
  }
  return j;
}

// ---------------------------------------------------------------------------

std::vector<Matrix> action_from_json(const Json& j, std::size_t algebra_dim, std::size_t& carrier_dim,
                                     const std::string& where) {
  carrier_dim = size_from_json(field(j, "carrier_dim", where), where + ".carrier_dim");
  if (carrier_dim == 0) fail(where + ".carrier_dim", "carrier dimension must be positive");
  std::vector<Matrix> action(algebra_dim, Matrix(carrier_dim, carrier_dim));
  std::vector<bool> seen(algebra_dim, false);
  const Json& entries = array_at(field(j, "action", where), where + ".action");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string we = where + ".action[" + std::to_string(e) + "]";
    const Json& entry = array_at(entries[e], we);
    if (entry.size() != 2) fail(we, "expected [j, matrix]");
    std::size_t a = index_from_json(entry[0], algebra_dim, we + "[0]");
    if (seen[a]) fail(we + "[0]", "duplicate entry for basis element " + std::to_string(a));
    seen[a] = true;
    action[a] = matrix_from_json(entry[1], carrier_dim, carrier_dim, we + "[1]");
  }
  return action;
}

Json action_to_json(std::size_t carrier_dim, const std::vector<Matrix>& action) {
  Json j;
  j["carrier_dim"] = carrier_dim;
  Json entries = Json::array();
  for (std::size_t a = 0; a < action.size(); ++a) entries.push_back(Json::array({a, matrix_to_json(action[a])}));
  j["action"] = entries;
  return j;
}

CoMatrix comatrix_from_json(const Json& j, std::size_t coalgebra_dim, const std::string& where) {
  const Json& entries = array_at(field(j, "coaction", where), where + ".coaction");
  std::size_t d = 0;
  if (auto it = j.find("carrier_dim"); it != j.end()) {
    d = size_from_json(*it, where + ".carrier_dim");
  } else {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string we = where + ".coaction[" + std::to_string(e) + "]";
      const Json& entry = array_at(entries[e], we);
      if (entry.size() != 3) fail(we, "expected [i, k, [coeffs]]");
      for (int p = 0; p < 2; ++p)
        d = std::max(d, index_from_json(entry[p], static_cast<std::size_t>(-1), we) + 1);
    }
  }
  if (d == 0) fail(where, "carrier dimension must be positive");
  CoMatrix c{d, std::vector<Vec>(d * d, zero_vec(coalgebra_dim))};
  std::vector<bool> seen(d * d, false);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string we = where + ".coaction[" + std::to_string(e) + "]";
    const Json& entry = array_at(entries[e], we);
    if (entry.size() != 3) fail(we, "expected [i, k, [coeffs]]");
    std::size_t i = index_from_json(entry[0], d, we + "[0]"), k = index_from_json(entry[1], d, we + "[1]");
    if (seen[i * d + k]) fail(we, "duplicate entry (" + std::to_string(i) + ", " + std::to_string(k) + ")");
    seen[i * d + k] = true;
    c(i, k) = vec_from_json(entry[2], coalgebra_dim, we + "[2]");
  }
  return c;
}

Json comatrix_to_json(const CoMatrix& c) {
  Json j;
  j["carrier_dim"] = c.dim;
  Json entries = Json::array();
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t k = 0; k < c.dim; ++k)
      if (!is_zero(c(i, k))) entries.push_back(Json::array({i, k, vec_to_json(c(i, k))}));
  j["coaction"] = entries;
  return j;
}

// ---------------------------------------------------------------------------

YDModule yd_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return catalog_yd(j.get<std::string>()).module;
    } catch (const std::invalid_argument& e) {
      fail("yd", e.what());
    }
  }
  BialgebraPtr b = bialgebra_from_json(field(j, "algebra", "yd"));
  const Json& corner_j = field(j, "corner", "yd");
  if (!corner_j.is_string()) fail("yd.corner", "expected a string");
  Corner corner = corner_from_string(corner_j.get<std::string>(), "yd.corner");
  std::size_t d = 0;
  auto action = action_from_json(field(j, "module", "yd"), b->dim(), d, "yd.module");
  CoMatrix co = comatrix_from_json(field(j, "comodule", "yd"), b->dim(), "yd.comodule");
  if (co.dim != d)
    fail("yd.comodule", "carrier dimension " + std::to_string(co.dim) + " differs from module dimension " +
                            std::to_string(d));
  const bool left_action = corner == Corner::LL || corner == Corner::LR;
  const bool left_coaction = corner == Corner::LL || corner == Corner::RL;
  YDModule m;
  m.bialgebra = b;
  m.corner = corner;
  if (left_action)
    m.action = LeftModule{b->algebra_ptr(), d, std::move(action)};
  else
    m.action = RightModule{b->algebra_ptr(), d, std::move(action)};
  if (left_coaction)
    m.coaction = LeftComodule{b->coalgebra_ptr(), std::move(co)};
  else
    m.coaction = RightComodule{b->coalgebra_ptr(), std::move(co)};
  return m;
}

Json yd_to_json(const YDModule& m) {
  Json j;
  j["algebra"] = bialgebra_to_json(*m.bialgebra);
  j["corner"] = to_string(m.corner);
  j["module"] = action_to_json(m.dim(), m.action_matrices());
  j["comodule"] = comatrix_to_json(m.coaction_matrix());
  return j;
}

NamedModule module_source_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return catalog_module(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("bimodule", e.what());
    }
  }
  BialgebraPtr b = bialgebra_from_json(field(j, "algebra", "bimodule"));
  std::size_t d = 0;
  auto action = action_from_json(field(j, "module", "bimodule"), b->dim(), d, "bimodule.module");
  std::string name = "bimodule";
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  return {name, b, LeftModule{b->algebra_ptr(), d, std::move(action)}};
}

FODC fodc_from_json(const Json& j) {
  const std::string w = "fodc";
  BialgebraPtr b = bialgebra_from_json(field(j, "algebra", w));
  const std::size_t n = b->dim();
  std::size_t d = 0;
  auto action = action_from_json(field(j, "module", w), n, d, w + ".module");
  FODC c;
  c.bialgebra = b;
  c.action = LeftModule{b->algebra_ptr(), d, std::move(action)};
  const Json& gens = array_at(field(j, "generators", w), w + ".generators");
  if (gens.size() != d) fail(w + ".generators", "expected " + std::to_string(d) + " labels");
  for (const auto& g : gens) {
    if (!g.is_string()) fail(w + ".generators", "labels must be strings");
    c.labels.push_back(g.get<std::string>());
  }
  c.partials.assign(d, Matrix(n, n));
  std::vector<bool> seen(d, false);
  const Json& parts = array_at(field(j, "partials", w), w + ".partials");
  for (std::size_t e = 0; e < parts.size(); ++e) {
    const std::string we = w + ".partials[" + std::to_string(e) + "]";
    const Json& entry = array_at(parts[e], we);
    if (entry.size() != 2) fail(we, "expected [i, matrix]");
    std::size_t i = index_from_json(entry[0], d, we + "[0]");
    if (seen[i]) fail(we + "[0]", "duplicate partial " + std::to_string(i));
    seen[i] = true;
    c.partials[i] = matrix_from_json(entry[1], n, n, we + "[1]");
  }
  if (auto it = j.find("comodule"); it != j.end() && !it->is_null()) {
    CoMatrix co = comatrix_from_json(*it, n, w + ".comodule");
    if (co.dim != d) fail(w + ".comodule", "carrier dimension differs from module dimension");
    c.coaction = LeftComodule{b->coalgebra_ptr(), std::move(co)};
  }
  return c;
}

Json fodc_to_json(const FODC& c) {
  Json j;
  j["algebra"] = bialgebra_to_json(*c.bialgebra);
  j["generators"] = c.labels;
  j["module"] = action_to_json(c.action.dim, c.action.action);
  Json parts = Json::array();
  for (std::size_t i = 0; i < c.partials.size(); ++i) parts.push_back(Json::array({i, matrix_to_json(c.partials[i])}));
  j["partials"] = parts;
  if (c.coaction) j["comodule"] = comatrix_to_json(c.coaction->coaction);
  return j;
}

RightComodule right_comodule_from_json(const Json& j, const BialgebraPtr& h) {
  if (j.is_string()) {
    // A catalog YD name: its right coaction (transformed to RR when left-left).
    YDModule m = yd_from_json(j);
    if (m.corner == Corner::LL) m = yd_ll_to_rr(m);
    if (m.corner != Corner::RR) fail("comodule", "catalog entry has no right coaction");
    if (!(m.bialgebra->coalgebra() == h->coalgebra()))
      fail("comodule", "catalog entry is over " + m.bialgebra->name() + ", not " + h->name());
    return RightComodule{h->coalgebra_ptr(), std::get<RightComodule>(m.coaction).coaction};
  }
  return RightComodule{h->coalgebra_ptr(), comatrix_from_json(j, h->dim(), "comodule")};
}

// ---------------------------------------------------------------------------

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

void CliReport::add(const VerificationReport& r, const std::string& prefix, bool expected) {
  for (const auto& c : r.checks()) {
    CheckResult copy = c;
    copy.name = prefix + copy.name;
    entries.push_back({std::move(copy), expected});
  }
}

bool CliReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.ok(); });
}

std::vector<ReportEntry> CliReport::sorted() const {
  auto out = entries;
  std::stable_sort(out.begin(), out.end(),
                   [](const ReportEntry& a, const ReportEntry& b) { return a.check.name < b.check.name; });
  return out;
}

std::string render_json(const CliReport& r, const std::string& version, const std::string& digest) {
  Json j;
  j["tool_version"] = version;
  j["input_digest"] = digest;
  j["passed"] = r.ok();
  Json checks = Json::array();
  for (const auto& e : r.sorted()) {
    Json c;
    c["name"] = e.check.name;
    c["anchor"] = e.check.anchor;
    c["holds"] = e.check.passed;
    c["expected"] = e.expected;
    c["ok"] = e.ok();
    c["cases"] = e.check.cases;
    if (e.check.witness) {
      Json w;
      Json idx = Json::object();
      for (const auto& [axis, label] : e.check.witness->indices) idx[axis] = label;
      w["indices"] = idx;
      w["lhs"] = e.check.witness->lhs;
      w["rhs"] = e.check.witness->rhs;
      c["witness"] = w;
    }
    checks.push_back(std::move(c));
  }
  j["checks"] = checks;
  if (!r.output.is_null()) j["output"] = r.output;
  return j.dump(2) + "\n";
}

std::string render_text(const CliReport& r, const std::string& version, const std::string& digest) {
  std::ostringstream os;
  os << "hopfkit " << version << "  input " << digest.substr(0, 16) << "\n";
  std::size_t failures = 0;
  for (const auto& e : r.sorted()) {
    std::string tag = e.ok() ? (e.expected ? "PASS" : "XFAIL") : (e.expected ? "FAIL" : "XPASS");
    if (!e.ok()) ++failures;
    os << tag << "  " << e.check.name << "  [" << e.check.anchor << "]  (" << e.check.cases << " cases)\n";
    if (e.check.witness) {
      os << "      at " << e.check.witness->describe_indices() << "\n";
      if (!e.check.witness->lhs.empty() || !e.check.witness->rhs.empty())
        os << "      lhs = " << e.check.witness->lhs << "\n      rhs = " << e.check.witness->rhs << "\n";
    }
  }
  if (r.output.is_object()) {
    os << "output:\n";
    for (const auto& [key, value] : r.output.items()) os << "  " << key << ": " << value.dump() << "\n";
  }
  os << (failures == 0 ? "all " + std::to_string(r.entries.size()) + " checks as expected"
                       : std::to_string(failures) + " of " + std::to_string(r.entries.size()) +
                             " checks not as expected")
     << "\n";
  return os.str();
}

}  // namespace hopfkit
