// Python bindings. Matrices travel as lists of lists of ints, polytopes and
// rings as opaque handles with JSON round trips.

#include "qtoric/betti.hpp"
#include "qtoric/bundles.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cohomring.hpp"
#include "qtoric/error.hpp"
#include "qtoric/io.hpp"
#include "qtoric/isomorph.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qtoric;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(v.str()); }

Integer from_py(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw Error(ErrorKind::InvalidParameter, "expected an integer");
  return parse_integer(py::str(h).cast<std::string>());
}

IntMatrix matrix_from(const py::handle& rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& v : row) r.push_back(from_py(v));
  }
  return IntMatrix::from_rows(out);
}

py::list matrix_to(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

io::Json json_from(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return io::load_json_arg(obj.cast<std::string>());
  auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return io::Json::parse(text);
}

py::object json_to(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict betti_to(const BettiTable& t) {
  py::dict d;
  for (const auto& [k, v] : t.entries) d[py::make_tuple(k.first, k.second)] = to_py(v);
  return d;
}

BettiTable betti_from(const py::dict& d, int dim, int num_facets) {
  BettiTable t;
  t.dim = dim;
  t.num_facets = num_facets;
  for (const auto& [k, v] : d) {
    auto ij = k.cast<std::pair<int, int>>();
    t.set(ij.first, ij.second, from_py(v));
  }
  return t;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps,
                                      const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

RingPtr ring_arg(const py::handle& h) { return h.cast<RingPtr>(); }

}  // namespace

PYBIND11_MODULE(_qtoric, m) {
  m.doc() = "Quasitoric manifolds: Betti numbers, cohomology rings, bundles, isomorphisms.";

  static py::exception<Error> exc(m, "QtoricError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<SimplePolytope>(m, "Polytope")
      .def_static("simplex", &build_simplex, py::arg("n"))
      .def_static("polygon", &build_polygon, py::arg("edges"))
      .def_static("bundle", &bundle_polytope, py::arg("n"), py::arg("m"),
                  "simplex(n) x polygon(m+2) in bundle facet order")
      .def_static("from_json", [](const py::object& j) { return io::polytope_from_json(json_from(j)); })
      .def("to_json", [](const SimplePolytope& p) { return json_to(io::polytope_to_json(p)); })
      .def("__mul__", [](const SimplePolytope& a, const SimplePolytope& b) { return product(a, b); })
      .def_property_readonly("dim", &SimplePolytope::dim)
      .def_property_readonly("num_facets", &SimplePolytope::num_facets)
      .def_property_readonly("vertices", &SimplePolytope::vertices)
      .def("__eq__", [](const SimplePolytope& a, const SimplePolytope& b) { return a == b; })
      .def("__repr__", [](const SimplePolytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " facets=" + std::to_string(p.num_facets()) + ">";
      });

  py::class_<GradedRing, std::shared_ptr<GradedRing>>(m, "Ring")
      .def_static("from_json",
                  [](const py::object& j) { return std::make_shared<GradedRing>(io::ring_from_json(json_from(j))); })
      .def("to_json", [](const GradedRing& r) { return json_to(io::ring_to_json(r)); })
      .def_property_readonly("generators", &GradedRing::generators)
      .def_property_readonly("relations",
                             [](const GradedRing& r) { return poly_strings(r.relations(), r.generators()); })
      .def_property_readonly("fiber_index", &GradedRing::fiber_index)
      .def_property_readonly("top_degree", &GradedRing::top_degree)
      .def_property_readonly("ranks", [](const GradedRing& r) { return r.hilbert().ranks; })
      .def_property_readonly("torsion",
                             [](const GradedRing& r) {
                               py::dict d;
                               for (const auto& [k, v] : r.hilbert().torsion) {
                                 py::list l;
                                 for (const auto& x : v) l.append(to_py(x));
                                 d[py::int_(k)] = l;
                               }
                               return d;
                             })
      .def("pairing",
           [](const GradedRing& r) {
             auto p = poincare_pairing(r);
             py::dict d;
             d["basis"] = p.basis;
             d["matrix"] = matrix_to(p.matrix);
             d["determinant"] = to_py(p.determinant);
             d["signature"] = p.signature;
             return d;
           })
      .def("signature_p1",
           [](const GradedRing& r) {
             auto s = signature_p1(r);
             return py::make_tuple(s.signature, s.p1);
           })
      .def("__str__", &GradedRing::to_string);

  m.def(
      "betti_table",
      [](const SimplePolytope& p, unsigned jobs, int facet_cap) {
        BettiTable t;
        {
          py::gil_scoped_release release;
          t = hochster_table(p, {facet_cap, jobs});
        }
        return betti_to(t);
      },
      py::arg("polytope"), py::arg("jobs") = 1u, py::arg("facet_cap") = 16,
      "Nonzero beta^{-i,2j} keyed by (i, j).");
  m.def("simplex_betti", [](int n) { return betti_to(simplex_closed_form(n)); }, py::arg("n"));
  m.def("polygon_betti", [](int k) { return betti_to(polygon_closed_form(k - 2)); }, py::arg("edges"));
  m.def(
      "identify_product",
      [](const py::dict& table, int dim, int num_facets) {
        return identify_simplex_polygon_product(betti_from(table, dim, num_facets));
      },
      py::arg("table"), py::arg("dim") = 0, py::arg("num_facets") = 0,
      "(n, m) when the table is that of simplex(n) x polygon(m+2), else None.");

  m.def(
      "check_nonsingular",
      [](const SimplePolytope& p, const py::object& matrix) {
        auto r = check_nonsingular(p, matrix_from(matrix));
        py::dict d;
        d["ok"] = r.ok;
        d["vertex"] = r.ok ? py::none() : py::cast(r.failing_vertex);
        d["determinant"] = r.ok ? py::none() : to_py(r.determinant);
        return d;
      },
      py::arg("polytope"), py::arg("matrix"));
  m.def(
      "present_cohomology",
      [](const SimplePolytope& p, const py::object& matrix) {
        return std::make_shared<GradedRing>(present_cohomology(CharMatrix{p, matrix_from(matrix)}));
      },
      py::arg("polytope"), py::arg("matrix"));

  m.def(
      "verify_iso",
      [](const py::object& r1, const py::object& r2, const py::object& matrix) {
        auto r = verify_iso({ring_arg(r1), ring_arg(r2), matrix_from(matrix)});
        py::dict d;
        d["ok"] = r.ok();
        d["status"] = to_string(r.status);
        d["determinant"] = to_py(r.determinant);
        d["failed_relation"] = r.failed_relation;
        return d;
      },
      py::arg("source"), py::arg("target"), py::arg("matrix"));
  m.def(
      "search_iso",
      [](const py::object& r1, const py::object& r2, int bound, unsigned jobs) {
        SearchOptions o;
        o.bound = bound;
        o.jobs = jobs;
        std::vector<IntMatrix> found;
        {
          py::gil_scoped_release release;
          found = search_iso(ring_arg(r1), ring_arg(r2), o);
        }
        py::list out;
        for (const auto& f : found) out.append(matrix_to(f));
        return out;
      },
      py::arg("source"), py::arg("target"), py::arg("bound") = 3, py::arg("jobs") = 1u);

  m.def(
      "bundle_char_matrix",
      [](const py::object& base, const py::object& twists) {
        auto c = build_bundle_char_matrix(matrix_from(base), matrix_from(twists));
        return py::make_tuple(c.polytope, matrix_to(c.entries));
      },
      py::arg("base"), py::arg("twists"));
  m.def(
      "projectivization_ring",
      [](const py::object& base, const py::object& twists) {
        return std::make_shared<GradedRing>(projectivization_ring({ring_arg(base), matrix_from(twists)}));
      },
      py::arg("base"), py::arg("twists"));
  m.def(
      "normalize_twists", [](const py::object& t) { return matrix_to(normalize_twists(matrix_from(t))); },
      py::arg("twists"));
  m.def(
      "total_chern",
      [](const py::object& base, const py::object& twists) {
        BundleSpec s{ring_arg(base), matrix_from(twists)};
        return poly_strings(total_chern(s), s.base->generators());
      },
      py::arg("base"), py::arg("twists"), "Graded pieces c_0, c_1, ... as strings.");
  m.def(
      "chern_isomorphic",
      [](const py::object& b1, const py::object& t1, const py::object& b2, const py::object& t2) {
        return chern_isomorphic({ring_arg(b1), matrix_from(t1)}, {ring_arg(b2), matrix_from(t2)});
      },
      py::arg("base1"), py::arg("twists1"), py::arg("base2"), py::arg("twists2"));
  m.def(
      "fiber_automorphisms",
      [](const py::object& base, const py::object& twists) {
        BundleSpec s{ring_arg(base), matrix_from(twists)};
        const auto& names = s.base->generators();
        py::list out;
        for (const auto& c : fiber_automorphisms(s)) {
          py::dict d;
          d["epsilon"] = c.epsilon;
          d["omega"] = c.omega.to_string(names);
          d["identity_holds"] = c.identity_holds;
          d["ring_map"] = matrix_to(c.ring_map);
          d["ring_map_verified"] = c.ring_map_verified;
          out.append(d);
        }
        return out;
      },
      py::arg("base"), py::arg("twists"));
}
