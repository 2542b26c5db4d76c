#include "spinl/json_io.hpp"

namespace spinl {

namespace {

[[noreturn]] void schema(const std::string& ptr, const std::string& what) {
  throw Error("schema_error", what, {{"pointer", ptr.empty() ? "/" : ptr}});
}

const Json& field(const Json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) schema(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(ptr + "/" + key, std::string("missing field ") + key);
  return *it;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) schema(ptr, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    schema(ptr, "malformed rational");
  }
}

Json cyclo_json(const CycloValue& v) {
  if (v.is_rational()) return rational_json(v.rational_value());
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(rational_json(c));
  return Json{{"n", v.conductor()}, {"coeffs", coeffs}};
}

CycloValue cyclo_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_object()) return CycloValue(rational_from_json(j, ptr));
  const Json& n = field(j, "n", ptr);
  if (!n.is_number_unsigned() || n.get<unsigned long>() == 0) schema(ptr + "/n", "conductor must be positive");
  const Json& c = field(j, "coeffs", ptr);
  if (!c.is_array()) schema(ptr + "/coeffs", "expected an array");
  std::vector<Rational> raw;
  for (std::size_t i = 0; i < c.size(); ++i) raw.push_back(rational_from_json(c[i], ptr + "/coeffs/" + std::to_string(i)));
  return CycloValue::reduce(raw, n.get<unsigned long>());
}

Json herm_json(const QuatAlgebra& alg, const HermQ& h) {
  Json c = Json::array(), a = Json::array();
  for (int i = 0; i < 3; ++i) {
    c.push_back(rational_json(h.c[i]));
    Json q = Json::array();
    for (const auto& x : alg.order_coords(h.a[i])) q.push_back(rational_json(x));
    a.push_back(q);
  }
  return Json{{"c", c}, {"a", a}};
}

HermQ herm_from_json(const QuatAlgebra& alg, const Json& j, const std::string& ptr) {
  const Json& c = field(j, "c", ptr);
  if (!c.is_array() || c.size() != 3) schema(ptr + "/c", "expected three diagonal entries");
  HermQ h;
  for (int i = 0; i < 3; ++i) h.c[i] = rational_from_json(c[i], ptr + "/c/" + std::to_string(i));
  auto it = j.find("a");
  if (it == j.end()) return h;
  if (!it->is_array() || it->size() != 3) schema(ptr + "/a", "expected three off-diagonal entries");
  for (int i = 0; i < 3; ++i) {
    const Json& q = (*it)[i];
    std::string p = ptr + "/a/" + std::to_string(i);
    if (!q.is_array() || q.size() != 4) schema(p, "expected four order coordinates");
    std::array<Rational, 4> x;
    for (int k = 0; k < 4; ++k) x[k] = rational_from_json(q[k], p + "/" + std::to_string(k));
    h.a[i] = alg.from_order_coords(x);
  }
  return h;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) schema(ptr, "expected a nonempty array of rows");
  std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = ptr + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols || cols == 0) schema(p, "rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], p + "/" + std::to_string(k));
  }
  return m;
}

Matrix matrix_from_key(const std::string& key, const std::string& ptr) {
  // "[[a,b,c],[d,e,f],[g,h,i]]" with bare rationals.
  std::vector<std::vector<std::string>> rows;
  std::size_t depth = 0;
  std::string cur;
  for (char ch : key) {
    if (ch == '[') {
      if (++depth == 2) rows.emplace_back();
      if (depth > 2) schema(ptr, "malformed matrix key");
    } else if (ch == ']') {
      if (depth == 2) rows.back().push_back(cur), cur.clear();
      if (depth == 0) schema(ptr, "malformed matrix key");
      --depth;
    } else if (ch == ',') {
      if (depth == 2) rows.back().push_back(cur), cur.clear();
    } else if (ch != ' ') {
      if (depth != 2) schema(ptr, "malformed matrix key");
      cur += ch;
    }
  }
  if (depth != 0 || rows.empty()) schema(ptr, "malformed matrix key");
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x);
    j.push_back(row);
  }
  return matrix_from_json(j, ptr);
}

Json siegel_expansion_json(const SiegelExpansion& e) {
  Json out = Json::object();
  for (const auto& [t, v] : e) out[siegel_key(t)] = cyclo_json(v);
  return out;
}

SiegelExpansion siegel_expansion_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object keyed by matrix");
  SiegelExpansion e;
  for (const auto& [key, value] : j.items()) {
    std::string ptr = "/" + key;
    Matrix t = matrix_from_key(key, ptr);
    if (!e.emplace(t, cyclo_from_json(value, ptr)).second) schema(ptr, "duplicate index after canonicalization");
  }
  return e;
}

HermExpansion herm_expansion_from_json(const QuatAlgebra& alg, const Json& j) {
  if (!j.is_array()) schema("", "expected a list of {h, a}");
  HermExpansion e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string ptr = "/" + std::to_string(i);
    HermQ h = herm_from_json(alg, field(j[i], "h", ptr), ptr + "/h");
    if (!e.emplace(h, cyclo_from_json(field(j[i], "a", ptr), ptr + "/a")).second) schema(ptr, "duplicate index");
  }
  return e;
}

CoeffOracle oracle_from_json(const Json& j) {
  CoeffOracle o;
  const Json* entries = &j;
  std::string base;
  if (j.is_object()) {
    if (j.contains("default")) o.fallback = rational_from_json(j["default"], "/default");
    entries = &field(j, "entries", "");
    base = "/entries";
  }
  if (!entries->is_array()) schema(base, "expected a list of {t, a}");
  for (std::size_t i = 0; i < entries->size(); ++i) {
    std::string ptr = base + "/" + std::to_string(i);
    const Json& e = (*entries)[i];
    Matrix t = matrix_from_json(field(e, "t", ptr), ptr + "/t");
    if (!o.values.emplace(t, rational_from_json(field(e, "a", ptr), ptr + "/a")).second) schema(ptr, "duplicate index");
  }
  return o;
}

std::map<unsigned long, SatakeParams> satake_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object keyed by prime");
  std::map<unsigned long, SatakeParams> out;
  for (const auto& [key, value] : j.items()) {
    std::string ptr = "/" + key;
    unsigned long q = 0;
    try {
      q = std::stoul(key);
    } catch (const std::exception&) {
      schema(ptr, "key must be a prime");
    }
    if (!value.is_array() || value.size() != 4) schema(ptr, "expected [b0, b1, b2, b3]");
    SatakeParams p;
    p.b0 = cyclo_from_json(value[0], ptr + "/0");
    p.b1 = cyclo_from_json(value[1], ptr + "/1");
    p.b2 = cyclo_from_json(value[2], ptr + "/2");
    p.b3 = cyclo_from_json(value[3], ptr + "/3");
    out[q] = p;
  }
  return out;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spinl
