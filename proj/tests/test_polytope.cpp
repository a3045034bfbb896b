#include "qtoric/error.hpp"
#include "qtoric/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace qtoric;

namespace {

// Brute-force combinatorial equivalence: some facet permutation maps the
// vertex sets of a onto those of b.
bool combinatorially_equal(const SimplePolytope& a, const SimplePolytope& b) {
  if (a.dim() != b.dim() || a.num_facets() != b.num_facets() ||
      a.vertices().size() != b.vertices().size())
    return false;
  std::vector<int> perm(a.num_facets());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm).vertices() == b.vertices()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("simplices") {
  auto t = build_simplex(2);
  CHECK(t.num_facets() == 3);
  CHECK(t.vertices() == std::vector<FacetSet>{{0, 1}, {0, 2}, {1, 2}});
  auto s1 = build_simplex(1);
  CHECK(s1.num_facets() == 2);
  CHECK(s1.vertices() == std::vector<FacetSet>{{0}, {1}});
  auto s3 = build_simplex(3);
  CHECK(s3.num_facets() == 4);
  CHECK(s3.vertices().size() == 4);
  CHECK_THROWS_AS(build_simplex(0), Error);
  for (int n = 1; n <= 6; ++n) CHECK(validate(build_simplex(n)).empty());
}

TEST_CASE("polygons") {
  auto g5 = build_polygon(5);
  CHECK(g5.vertices() == std::vector<FacetSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(combinatorially_equal(build_polygon(3), build_simplex(2)));
  CHECK(combinatorially_equal(build_polygon(4), product(build_simplex(1), build_simplex(1))));
  CHECK_FALSE(combinatorially_equal(build_polygon(5), build_polygon(4)));
  CHECK_THROWS_AS(build_polygon(2), Error);
  for (int k = 3; k <= 9; ++k) CHECK(validate(build_polygon(k)).empty());
}

TEST_CASE("products") {
  auto p = product(build_simplex(1), build_simplex(2));
  CHECK(p.dim() == 3);
  CHECK(p.num_facets() == 5);
  CHECK(p.vertices().size() == 6);
  auto q = product(build_simplex(2), build_polygon(5));
  CHECK(q.num_facets() == 8);
  CHECK(q.vertices().size() == 15);
  // Every pair of small factors gives a valid product with |V1||V2| vertices.
  std::vector<SimplePolytope> fs{build_simplex(1), build_simplex(2), build_simplex(3),
                                 build_polygon(4), build_polygon(5)};
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto ab = product(a, b);
      CHECK(validate(ab).empty());
      CHECK(ab.vertices().size() == a.vertices().size() * b.vertices().size());
    }
}

TEST_CASE("nerve complexes") {
  auto k5 = nerve_complex(build_polygon(5));
  CHECK(k5.maximal_faces().size() == 5);
  for (const auto& f : k5.maximal_faces()) CHECK(f.size() == 2);
  auto tri = nerve_complex(build_simplex(2));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.maximal_faces() == std::vector<FacetSet>{{0, 1}, {0, 2}, {1, 2}});
  for (int k = 3; k <= 8; ++k) CHECK(nerve_complex(build_polygon(k)).maximal_faces().size() == size_t(k));

  // Cube: opposite facets are {0,1}, {2,3}, {4,5}; the octahedron boundary
  // has the 8 triples choosing one facet from each pair.
  auto cube = product(product(build_simplex(1), build_simplex(1)), build_simplex(1));
  std::vector<FacetSet> expected;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (a / 2 != b / 2 && b / 2 != c / 2 && a / 2 != c / 2) expected.push_back({a, b, c});
  CHECK(nerve_complex(cube).maximal_faces() == expected);
}

TEST_CASE("full subcomplexes") {
  auto k5 = nerve_complex(build_polygon(5));
  auto two = full_subcomplex(k5, {0, 2});
  CHECK(two.maximal_faces() == std::vector<FacetSet>{{0}, {2}});
  CHECK(full_subcomplex(k5, {}).empty());
  CHECK(full_subcomplex(k5, {0, 1, 2, 3, 4}) == k5);
  CHECK_THROWS_AS(full_subcomplex(k5, {0, 7}), Error);
  // idempotent
  for (FacetSet s : {FacetSet{0, 1, 2}, FacetSet{1, 3}, FacetSet{0, 2, 4}})
    CHECK(full_subcomplex(full_subcomplex(k5, s), s) == full_subcomplex(k5, s));
}

TEST_CASE("validation diagnostics") {
  auto cube = product(product(build_simplex(1), build_simplex(1)), build_simplex(1));
  CHECK(validate(cube).empty());

  auto verts = cube.vertices();
  verts.pop_back();
  auto broken = validate(SimplePolytope(3, 6, verts));
  REQUIRE_FALSE(broken.empty());
  CHECK(std::any_of(broken.begin(), broken.end(),
                    [](const std::string& s) { return s.find("ridge") != std::string::npos; }));

  auto card = cube.vertices();
  card[0] = {0, 2};
  auto bad = validate(SimplePolytope(3, 6, card));
  CHECK(std::any_of(bad.begin(), bad.end(), [](const std::string& s) {
    return s.find("has 2 facets, expected 3") != std::string::npos;
  }));

  auto small = validate(SimplePolytope(2, 2, {{0, 1}}));
  CHECK_FALSE(small.empty());
  CHECK_THROWS_AS(require_valid(SimplePolytope(3, 6, verts)), Error);
}

TEST_CASE("minimal non-faces") {
  CHECK(minimal_non_faces(build_simplex(2)) == std::vector<FacetSet>{{0, 1, 2}});
  CHECK(minimal_non_faces(build_polygon(5)) ==
        std::vector<FacetSet>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(format_facet_set({0, 1, 4}, true) == "{F1,F2,F5}");
}
