#include "qtoric/io.hpp"

#include "qtoric/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace qtoric::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidParameter, what); }

const Json& field(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object()) bad(std::string(ctx) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(ctx) + ": missing \"" + key + "\"");
  return *it;
}

int small_int(const Json& j, const char* ctx) {
  if (!j.is_number_integer()) bad(std::string(ctx) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    bad(std::string(ctx) + ": integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const char* ctx) {
  if (!j.is_array()) bad(std::string(ctx) + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(small_int(v, ctx));
  return out;
}

// Runs a reader, turning JSON library exceptions into input errors.
template <class F>
auto guarded(const char* ctx, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(ctx) + ": " + e.what());
  }
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("cannot parse " + path.string() + ": " + e.what());
  }
}

Json load_json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      bad(std::string("cannot parse inline JSON: ") + e.what());
    }
  }
  return load_json_file(text);
}

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    return Integer(j.get<long long>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad("expected an integer (number or decimal string)");
}

SimplePolytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&]() -> SimplePolytope {
    const std::string kind = field(j, "kind", "polytope").get<std::string>();
    if (kind == "simplex") return build_simplex(small_int(field(j, "n", "simplex"), "simplex"));
    if (kind == "polygon")
      return build_polygon(small_int(field(j, "edges", "polygon"), "polygon"));
    if (kind == "product") {
      const Json& fs = field(j, "factors", "product");
      if (!fs.is_array() || fs.size() < 2) bad("product: need at least two factors");
      SimplePolytope p = polytope_from_json(fs[0]);
      for (std::size_t i = 1; i < fs.size(); ++i) p = product(p, polytope_from_json(fs[i]));
      return p;
    }
    if (kind == "explicit") {
      std::vector<FacetSet> verts;
      const Json& vs = field(j, "vertices", "explicit");
      if (!vs.is_array()) bad("explicit: vertices must be an array");
      for (const auto& v : vs) verts.push_back(int_list(v, "explicit vertex"));
      std::string label;
      if (j.contains("label")) label = j["label"].get<std::string>();
      SimplePolytope p(small_int(field(j, "dim", "explicit"), "dim"),
                       small_int(field(j, "num_facets", "explicit"), "num_facets"),
                       std::move(verts), std::move(label));
      require_valid(p);
      return p;
    }
    bad("polytope: unknown kind \"" + kind + "\"");
  });
}

Json polytope_to_json(const SimplePolytope& p) {
  Json j;
  j["kind"] = "explicit";
  j["dim"] = p.dim();
  j["num_facets"] = p.num_facets();
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(v);
  if (!p.label().empty()) j["label"] = p.label();
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&]() -> IntMatrix {
    const Json* entries = &j;
    std::optional<std::size_t> rows, cols;
    if (j.is_object()) {
      entries = &field(j, "entries", "matrix");
      if (j.contains("rows")) rows = static_cast<std::size_t>(small_int(j["rows"], "rows"));
      if (j.contains("cols")) cols = static_cast<std::size_t>(small_int(j["cols"], "cols"));
    }
    if (!entries->is_array()) bad("matrix: entries must be an array of rows");
    std::vector<std::vector<Integer>> data;
    for (const auto& row : *entries) {
      if (!row.is_array()) bad("matrix: each row must be an array");
      std::vector<Integer> r;
      for (const auto& v : row) r.push_back(integer_from_json(v));
      if (!data.empty() && r.size() != data.front().size()) bad("matrix: ragged rows");
      data.push_back(std::move(r));
    }
    if (rows && *rows != data.size()) bad("matrix: \"rows\" disagrees with entries");
    const std::size_t c = data.empty() ? cols.value_or(0) : data.front().size();
    if (cols && *cols != c) bad("matrix: \"cols\" disagrees with entries");
    return IntMatrix::from_rows(data, c);
  });
}

Json matrix_to_json(const IntMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

ProductSplit split_from_json(const Json& j) {
  return guarded("split", [&] {
    ProductSplit s;
    s.n1 = small_int(field(j, "n1", "split"), "n1");
    s.facets1 = int_list(field(j, "facets1", "split"), "facets1");
    s.n2 = small_int(field(j, "n2", "split"), "n2");
    s.facets2 = int_list(field(j, "facets2", "split"), "facets2");
    return s;
  });
}

Json split_to_json(const ProductSplit& s) {
  Json j;
  j["n1"] = s.n1;
  j["facets1"] = s.facets1;
  j["n2"] = s.n2;
  j["facets2"] = s.facets2;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  return guarded("betti table", [&] {
    BettiTable t;
    if (j.contains("dim")) t.dim = small_int(j["dim"], "dim");
    if (j.contains("num_facets")) t.num_facets = small_int(j["num_facets"], "num_facets");
    const Json& es = field(j, "entries", "betti table");
    if (!es.is_array()) bad("betti table: entries must be an array");
    for (const auto& e : es) {
      const int i = small_int(field(e, "i", "betti entry"), "i");
      const int jj = small_int(field(e, "j", "betti entry"), "j");
      if (i < 0 || jj < 0) bad("betti table: negative index");
      Integer v = integer_from_json(field(e, "value", "betti entry"));
      if (v < 0) bad("betti table: negative value");
      if (t.entries.count({i, jj})) bad("betti table: duplicate entry");
      t.set(i, jj, v);
    }
    return t;
  });
}

Json betti_to_json(const BettiTable& t) {
  Json j;
  j["dim"] = t.dim;
  j["num_facets"] = t.num_facets;
  j["entries"] = Json::array();
  for (const auto& [ij, v] : t.entries)
    j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", integer_to_json(v)}});
  return j;
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) bad("polynomial: expected an array of terms");
    Polynomial p(nvars);
    for (const auto& t : j) {
      const auto exps = int_list(field(t, "exps", "term"), "exps");
      if (exps.size() != nvars)
        bad("polynomial: term has " + std::to_string(exps.size()) + " exponents, expected " +
            std::to_string(nvars));
      for (int e : exps)
        if (e < 0) bad("polynomial: negative exponent");
      p.add_term(exps, integer_from_json(field(t, "coeff", "term")));
    }
    return p;
  });
}

Json polynomial_to_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) j.push_back({{"exps", m}, {"coeff", integer_to_json(c)}});
  return j;
}

GradedRing ring_from_json(const Json& j) {
  return guarded("ring", [&] {
    const Json& gs = field(j, "generators", "ring");
    if (!gs.is_array()) bad("ring: generators must be an array");
    std::vector<std::string> names;
    for (const auto& g : gs) names.push_back(g.get<std::string>());
    const Json& rs = field(j, "relations", "ring");
    if (!rs.is_array()) bad("ring: relations must be an array");
    std::vector<Polynomial> rels;
    for (const auto& r : rs) rels.push_back(polynomial_from_json(r, names.size()));
    std::optional<std::size_t> fiber;
    if (j.contains("fiber_index") && !j["fiber_index"].is_null())
      fiber = static_cast<std::size_t>(small_int(j["fiber_index"], "fiber_index"));
    return GradedRing(std::move(names), std::move(rels), fiber);
  });
}

Json ring_to_json(const GradedRing& r) {
  Json j;
  j["generators"] = r.generators();
  j["relations"] = Json::array();
  for (const auto& rel : r.relations()) j["relations"].push_back(polynomial_to_json(rel));
  if (r.fiber_index()) j["fiber_index"] = *r.fiber_index();
  return j;
}

BundleSpec bundle_spec_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return guarded("bundle spec", [&] {
    const Json& b = field(j, "base_ring", "bundle spec");
    Json ring_json;
    if (b.is_string()) {
      std::filesystem::path p = b.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      ring_json = load_json_file(p);
    } else {
      ring_json = b;
    }
    BundleSpec s{std::make_shared<const GradedRing>(ring_from_json(ring_json)),
                 matrix_from_json(field(j, "twists", "bundle spec"))};
    check_spec(s);
    return s;
  });
}

Json bundle_spec_to_json(const BundleSpec& s) {
  Json j;
  j["base_ring"] = ring_to_json(*s.base);
  j["twists"] = matrix_to_json(s.twists)["entries"];
  return j;
}

IntMatrix map_from_json(const Json& j) {
  if (j.is_array()) return matrix_from_json(j);
  return matrix_from_json(field(j, "matrix", "map"));
}

Json map_to_json(const IntMatrix& m) {
  Json j;
  j["matrix"] = matrix_to_json(m)["entries"];
  return j;
}

ClassData class_data_from_json(const Json& j, std::size_t nvars) {
  return guarded("class data", [&] {
    if (!j.is_object()) bad("class data: expected an object");
    ClassData c;
    auto read = [&](const char* key) {
      std::vector<Polynomial> out;
      for (const auto& p : j[key]) out.push_back(polynomial_from_json(p, nvars));
      return out;
    };
    if (j.contains("w")) c.w = read("w");
    if (j.contains("p")) c.p = read("p");
    return c;
  });
}

Json class_data_to_json(const ClassData& c) {
  Json j = Json::object();
  auto write = [](const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(polynomial_to_json(p));
    return a;
  };
  if (c.w) j["w"] = write(*c.w);
  if (c.p) j["p"] = write(*c.p);
  return j;
}

}  // namespace qtoric::io
