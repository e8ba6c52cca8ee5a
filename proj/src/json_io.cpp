#include <set>

#include "json_internal.hpp"
#include "scx/error.hpp"

namespace scx {
namespace detail {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Poly get_poly(const Ring& r, const json& j, const std::string& path) {
  std::string s = get_string(j, path);
  try {
    return Poly::parse(r, s);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::optional<Rational> get_rational(const json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  std::string s = get_string(j, path);
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Matrix get_matrix(const Ring& r, const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix M(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) M(i, k) = get_poly(r, j[i][k], rp + "[" + std::to_string(k) + "]");
  }
  return M;
}

Matrix get_vector(const Ring& r, const json& j, const std::string& path, std::size_t n, bool as_row) {
  if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " entries");
  Matrix M = as_row ? Matrix(r, 1, n) : Matrix(r, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Poly p = get_poly(r, j[i], path + "[" + std::to_string(i) + "]");
    if (as_row) M(0, i) = p;
    else M(i, 0) = p;
  }
  return M;
}

Ring get_ring(const json& j, const std::string& path) {
  std::string s = get_string(j, path);
  try {
    return Ring::parse(s);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

}  // namespace

json to_json(const Matrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(M(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const SComplex& C) {
  json j;
  j["ring"] = C.ring.name();
  json gens = json::array();
  for (auto& g : C.gens) {
    json e;
    e["name"] = g.name;
    e["gr_mod4"] = g.gr;
    e["deg_I"] = g.deg_I ? json(g.deg_I->str(true)) : json(nullptr);
    if (g.hol) e["hol"] = g.hol->str(true);
    gens.push_back(e);
  }
  j["generators"] = gens;
  j["d"] = to_json(C.d);
  j["v"] = to_json(C.v);
  json d1 = json::array(), d2 = json::array();
  for (std::size_t i = 0; i < C.size(); ++i) {
    d1.push_back(C.delta1(0, i).str());
    d2.push_back(C.delta2(i, 0).str());
  }
  j["delta1"] = d1;
  j["delta2"] = d2;
  j["v_trusted"] = C.v_trusted;
  return j;
}

SComplex complex_from_json(const json& j) {
  const Ring r = get_ring(field(j, "$", "ring"), "$.ring");
  const json& gj = field(j, "$", "generators");
  if (!gj.is_array()) fail("$.generators", "expected an array");
  std::vector<Generator> gens;
  std::set<std::string> names;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string p = "$.generators[" + std::to_string(i) + "]";
    Generator g;
    g.name = get_string(field(gj[i], p, "name"), p + ".name");
    if (!names.insert(g.name).second) fail(p + ".name", "duplicate generator name " + g.name);
    const json& gr = field(gj[i], p, "gr_mod4");
    if (!gr.is_number_integer() || gr.get<long long>() < 0 || gr.get<long long>() > 3)
      fail(p + ".gr_mod4", "expected an integer in 0..3");
    g.gr = gr.get<int>();
    g.deg_I = get_rational(field(gj[i], p, "deg_I"), p + ".deg_I");
    if (gj[i].contains("hol")) g.hol = get_rational(gj[i]["hol"], p + ".hol");
    gens.push_back(g);
  }
  const std::size_t n = gens.size();
  SComplex C(r, gens);
  C.d = get_matrix(r, field(j, "$", "d"), "$.d", n, n);
  C.v = get_matrix(r, field(j, "$", "v"), "$.v", n, n);
  C.delta1 = get_vector(r, field(j, "$", "delta1"), "$.delta1", n, true);
  C.delta2 = get_vector(r, field(j, "$", "delta2"), "$.delta2", n, false);
  const json& vt = field(j, "$", "v_trusted");
  if (!vt.is_boolean()) fail("$.v_trusted", "expected a boolean");
  C.v_trusted = vt.get<bool>();
  return C;
}

json to_json(const ModulePresentation& p) {
  json j;
  j["ring"] = p.ring.name();
  j["generators"] = p.gens;
  j["relations"] = to_json(p.relations);
  return j;
}

ModulePresentation presentation_from_json(const json& j) {
  ModulePresentation p;
  p.ring = get_ring(field(j, "$", "ring"), "$.ring");
  const json& g = field(j, "$", "generators");
  if (!g.is_array()) fail("$.generators", "expected an array");
  for (std::size_t i = 0; i < g.size(); ++i) p.gens.push_back(get_string(g[i], "$.generators[" + std::to_string(i) + "]"));
  const json& rel = field(j, "$", "relations");
  std::size_t cols = rel.is_array() && !rel.empty() && rel[0].is_array() ? rel[0].size() : 0;
  p.relations = get_matrix(p.ring, rel, "$.relations", p.gens.size(), cols);
  return p;
}

}  // namespace detail

namespace {

detail::json parse_text(const std::string& text) {
  try {
    return detail::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
}

}  // namespace

std::string serialize(const SComplex& C) { return detail::to_json(C).dump(2); }
SComplex deserialize(const std::string& text) { return detail::complex_from_json(parse_text(text)); }
std::string serialize(const ModulePresentation& p) { return detail::to_json(p).dump(2); }
ModulePresentation deserialize_presentation(const std::string& text) {
  return detail::presentation_from_json(parse_text(text));
}

}  // namespace scx
