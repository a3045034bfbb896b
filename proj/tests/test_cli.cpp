#include "qtoric/cli.hpp"
#include "qtoric/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace qtoric;
using io::Json;

namespace {

const std::filesystem::path kData = QTORIC_DATA_DIR;

std::string d(const char* name) { return (kData / name).string(); }

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qtoric_test_" + name);
}

}  // namespace

TEST_CASE("betti") {
  auto r = run({"--format", "json", "betti", "-p", d("pentagon.json"), "--method", "hochster"});
  REQUIRE(r.code == 0);
  auto t = io::betti_from_json(r.json());
  CHECK(t.at(1, 2) == 5);
  CHECK(t.at(2, 3) == 5);

  for (const char* method : {"closed", "product"}) {
    auto c = run({"--format", "json", "betti", "-p", d("delta2_g5.json"), "--method", method});
    REQUIRE(c.code == 0);
    CHECK(io::betti_from_json(c.json()) == hochster_table(product(build_simplex(2), build_polygon(5))));
  }
  auto human = run({"betti", "-p", d("pentagon.json")});
  CHECK(human.code == 0);
  CHECK(human.out.find("beta^{-i,2j}") != std::string::npos);

  auto cap = run({"betti", "-p", R"({"kind":"polygon","edges":9})", "--facet-cap", "5"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("resource-limit") != std::string::npos);
}

TEST_CASE("nonsingular") {
  auto ok = run({"nonsingular", "-p", d("prism.json"), "-m", d("prism_matrix.json")});
  CHECK(ok.code == 0);
  auto bad = run({"nonsingular", "-p", d("prism.json"), "-m", d("bad.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("{F1,F2,F5}") != std::string::npos);
  CHECK(bad.out.find("det -2") != std::string::npos);
  auto shape = run({"nonsingular", "-p", d("prism.json"), "-m", d("cp2_matrix.json")});
  CHECK(shape.code == 2);
}

TEST_CASE("cohomology") {
  auto r = run({"--format", "json", "cohomology", "-p", d("cube.json"), "-m", d("cubeM_matrix.json")});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["hilbert"]["ranks"] == Json::parse("[1,3,3,1]"));
  auto ring = io::ring_from_json(j);
  CHECK(ring.relations() == io::ring_from_json(io::load_json_file(d("cubeM_ring.json"))).relations());
  auto singular = run({"cohomology", "-p", d("prism.json"), "-m", d("bad.json")});
  CHECK(singular.code == 2);
}

TEST_CASE("iso") {
  auto v = run({"iso", "verify", "-s", d("cubeM_ring.json"), "-t", d("cubeN_ring.json"), "--map",
                d("phi.json")});
  CHECK(v.code == 0);
  auto f = run({"--format", "json", "iso", "verify", "-s", d("cubeM_ring.json"), "-t",
                d("cubeN_ring.json"), "--map", R"({"matrix":[[1,0,0],[0,1,0],[0,0,2]]})"});
  CHECK(f.code == 1);
  CHECK(f.json()["status"] == "not-unimodular");

  auto s = run({"--format", "json", "iso", "search", "-s", d("cubeM_ring.json"), "-t",
                d("cubeN_ring.json"), "--bound", "2", "--jobs", "2"});
  REQUIRE(s.code == 0);
  bool seen = false;
  const Json sj = s.json();
  for (const auto& m : sj["maps"]) {
    const auto mat = io::map_from_json(m);
    if (mat == IntMatrix{{1, 1, 1}, {-2, -1, -2}, {0, 0, 1}}) seen = true;
  }
  CHECK(seen);
  auto none = run({"iso", "search", "-s", d("cp2_ring.json"), "-t", d("cp1xcp1_ring.json")});
  CHECK(none.code == 1);
}

TEST_CASE("bundle") {
  const auto poly_out = temp_file("prism.json");
  auto b = run({"--format", "json", "bundle", "build", "--base-matrix", d("cp2_matrix.json"),
                "--twists", "[[2]]", "--polytope-out", poly_out.string()});
  REQUIRE(b.code == 0);
  CHECK(io::matrix_from_json(b.json()) == io::matrix_from_json(io::load_json_file(d("prism_matrix.json"))));
  CHECK(io::polytope_from_json(io::load_json_file(poly_out)) == bundle_polytope(1, 1));
  std::filesystem::remove(poly_out);

  auto r = run({"--format", "json", "bundle", "ring", "--base-ring", d("cp2_ring.json"), "--twists",
                "[[0]]"});
  REQUIRE(r.code == 0);
  CHECK(io::ring_from_json(r.json()).hilbert().ranks == std::vector<std::size_t>{1, 2, 2, 1});

  auto c = run({"bundle", "chern", "--spec1", d("spec_cp1xcp1_2x.json"), "--spec2",
                d("spec_cp1xcp1_2y.json")});
  CHECK(c.code == 1);
  CHECK(c.out.find("differ") != std::string::npos);
  auto same = run({"bundle", "chern", "--spec1", d("spec_cp1xcp1_2x.json"), "--spec2",
                   d("spec_cp1xcp1_2x.json")});
  CHECK(same.code == 0);
  auto single = run({"bundle", "chern", "--spec1", d("spec_cp2_twist2.json")});
  CHECK(single.code == 0);

  auto n = run({"--format", "json", "bundle", "normalize", "--twists", d("twists_13.json")});
  REQUIRE(n.code == 0);
  CHECK(io::matrix_from_json(n.json()) == IntMatrix{{-3}, {-2}});
}

TEST_CASE("rigidity") {
  auto table = io::betti_to_json(hochster_table(product(build_simplex(2), build_polygon(5)))).dump();
  auto r = run({"--format", "json", "rigidity", "--table", table});
  REQUIRE(r.code == 0);
  CHECK(r.json()["kind"] == "simplex-polygon-product");
  CHECK(r.json()["n"] == 2);
  CHECK(r.json()["m"] == 3);
  auto none = run({"rigidity", "--table",
                   io::betti_to_json(hochster_table(product(build_simplex(1), build_simplex(3)))).dump()});
  CHECK(none.code == 1);
}

TEST_CASE("classes and automorphisms") {
  auto cp2 = run({"--format", "json", "classes", "-p", d("triangle.json"), "-m", d("cp2_matrix.json")});
  REQUIRE(cp2.code == 0);
  auto cd = io::class_data_from_json(cp2.json(), 1);
  REQUIRE(cd.p);
  CHECK((*cd.p)[1] == 3 * Polynomial::variable(1, 0).pow(2));

  auto pairing = run({"--format", "json", "classes", "--ring", d("cp2cp2_ring.json")});
  REQUIRE(pairing.code == 0);
  CHECK(pairing.json()["signature"] == -2);

  const auto cm = temp_file("cm.json"), cn = temp_file("cn.json");
  REQUIRE(run({"-o", cm.string(), "classes", "-p", d("cube.json"), "-m", d("cubeM_matrix.json")}).code == 0);
  REQUIRE(run({"-o", cn.string(), "classes", "-p", d("cube.json"), "-m", d("cubeN_matrix.json")}).code == 0);
  auto t = run({"--format", "json", "classes", "--ring", d("cubeM_ring.json"), "--map", d("phi.json"),
                "--target", d("cubeN_ring.json"), "--classes", cm.string(), "--target-classes",
                cn.string()});
  REQUIRE(t.code == 0);
  CHECK(t.json()["w_preserved"] == true);
  CHECK(t.json()["p_preserved"] == true);
  std::filesystem::remove(cm);
  std::filesystem::remove(cn);

  auto a = run({"--format", "json", "automorphisms", "--spec", d("spec_cp2_twist2.json")});
  REQUIRE(a.code == 0);
  REQUIRE(a.json()["candidates"].size() == 2);
  CHECK(a.json()["candidates"][1]["epsilon"] == -1);
  CHECK(a.json()["candidates"][1]["ring_map_verified"] == true);
  auto only = run({"--format", "json", "automorphisms", "--spec", d("spec_cp2_n2.json")});
  CHECK(only.json()["candidates"].size() == 1);
}

TEST_CASE("usage errors") {
  auto u = run({"frobnicate"});
  CHECK(u.code == 2);
  CHECK_FALSE(u.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"betti"}).code == 2);
  CHECK(run({"--format", "xml", "betti", "-p", d("pentagon.json")}).code == 2);
  auto missing = run({"betti", "-p", "/nonexistent.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("invalid-parameter") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
