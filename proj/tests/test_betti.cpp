#include "qtoric/betti.hpp"
#include "qtoric/error.hpp"
#include "qtoric/polytope.hpp"

#include <doctest.h>

using namespace qtoric;

namespace {

using Entries = std::map<std::pair<int, int>, Integer>;

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Hochster tables of small polytopes") {
  CHECK(hochster_table(build_polygon(5)).entries ==
        Entries{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}});
  CHECK(hochster_table(build_simplex(2)).entries == Entries{{{0, 0}, 1}, {{1, 3}, 1}});
  auto cube = product(product(build_simplex(1), build_simplex(1)), build_simplex(1));
  CHECK(hochster_table(cube).entries ==
        Entries{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 4}, 3}, {{3, 6}, 1}});
}

TEST_CASE("closed forms") {
  CHECK(simplex_closed_form(2).entries == Entries{{{0, 0}, 1}, {{1, 3}, 1}});
  CHECK(simplex_closed_form(1).entries == Entries{{{0, 0}, 1}, {{1, 2}, 1}});
  CHECK(simplex_closed_form(5).entries == Entries{{{0, 0}, 1}, {{1, 6}, 1}});
  CHECK_THROWS_AS(simplex_closed_form(0), Error);

  auto g5 = polygon_closed_form(3);
  CHECK(g5.at(1, 2) == 5);
  CHECK(g5.at(2, 3) == 5);
  CHECK(polygon_closed_form(2).at(1, 2) == 2);
  CHECK(polygon_closed_form(1) == simplex_closed_form(2));
  CHECK_THROWS_AS(polygon_closed_form(0), Error);
}

TEST_CASE("Hochster agrees with the closed forms") {
  for (int n = 1; n <= 5; ++n) CHECK(hochster_table(build_simplex(n)) == simplex_closed_form(n));
  for (int m = 1; m <= 6; ++m) CHECK(hochster_table(build_polygon(m + 2)) == polygon_closed_form(m));
}

TEST_CASE("polygon table against an independent count") {
  // For the k-gon only H~_0 of proper induced subgraphs of the cycle
  // contributes, so beta^{-(j-1),2j} = sum over j-subsets of (runs - 1).
  for (int k = 4; k <= 9; ++k) {
    auto t = hochster_table(build_polygon(k));
    for (int j = 2; j < k; ++j) {
      Integer total = 0;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != j) continue;
        int comps = 0;
        for (int v = 0; v < k; ++v)
          if ((mask >> v & 1) && !(mask >> ((v + k - 1) % k) & 1)) ++comps;
        total += comps - 1;
      }
      CHECK(t.at(j - 1, j) == total);
    }
  }
}

TEST_CASE("product rule") {
  auto t = product_table(simplex_closed_form(2), polygon_closed_form(3));
  CHECK(t.entries == Entries{{{0, 0}, 1},
                             {{1, 2}, 5},
                             {{1, 3}, 1},
                             {{2, 3}, 5},
                             {{2, 5}, 5},
                             {{3, 5}, 1},
                             {{3, 6}, 5},
                             {{4, 8}, 1}});
  BettiTable unit;
  unit.set(0, 0, 1);
  auto g5 = polygon_closed_form(3);
  CHECK(product_table(g5, unit).entries == g5.entries);
  auto sq = product_table(simplex_closed_form(1), simplex_closed_form(1));
  CHECK(sq == hochster_table(build_polygon(4)));

  std::vector<SimplePolytope> fs{build_simplex(1), build_simplex(2), build_polygon(4),
                                 build_polygon(5), build_simplex(3)};
  for (const auto& a : fs)
    for (const auto& b : fs)
      if (a.num_facets() + b.num_facets() <= 10)
        CHECK(hochster_table(product(a, b)) == product_table(hochster_table(a), hochster_table(b)));
}

TEST_CASE("duality") {
  CHECK(check_duality(hochster_table(build_polygon(5))));
  CHECK(check_duality(simplex_closed_form(3)));
  auto bad = polygon_closed_form(3);
  bad.set(2, 3, 4);
  CHECK_FALSE(check_duality(bad));
  BettiTable no_meta;
  no_meta.set(0, 0, 1);
  CHECK_THROWS_AS(check_duality(no_meta), Error);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      CHECK(check_duality(hochster_table(product(build_simplex(n), build_polygon(m + 2)))));
}

TEST_CASE("first column counts minimal non-faces") {
  std::vector<SimplePolytope> ps{build_polygon(6), product(build_simplex(2), build_polygon(5)),
                                 product(build_simplex(1), build_simplex(3))};
  for (const auto& p : ps) {
    Integer sum = 0;
    for (const auto& [ij, v] : hochster_table(p).entries)
      if (ij.first == 1) sum += v;
    CHECK(sum == Integer(minimal_non_faces(p).size()));
  }
}

TEST_CASE("beta^{-1,4} of simplex x polygon") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto t = hochster_table(product(build_simplex(n), build_polygon(m + 2)));
      // Non-adjacent pairs of polygon edges, plus the two facets of a segment.
      CHECK(t.at(1, 2) == Integer((m + 2) * (m - 1) / 2 + (n == 1 ? 1 : 0)));
    }
  // Closed polygon formula against the binomial expression.
  for (int m = 1; m <= 6; ++m) {
    auto t = polygon_closed_form(m);
    for (int k = 2; k <= m + 1; ++k)
      CHECK(t.at(k - 1, k) * (m + 2 - k) == Integer(m + 2) * (k - 1) * binom(m, k));
  }
}

TEST_CASE("recognition") {
  auto t = hochster_table(product(build_simplex(2), build_polygon(5)));
  auto id = identify_simplex_polygon_product(t);
  REQUIRE(id);
  CHECK(*id == std::pair<int, int>{2, 3});

  auto cube = product(product(build_simplex(1), build_simplex(1)), build_simplex(1));
  auto idc = identify_simplex_polygon_product(hochster_table(cube));
  REQUIRE(idc);
  CHECK(*idc == std::pair<int, int>{1, 2});

  CHECK_FALSE(identify_simplex_polygon_product(hochster_table(build_polygon(5))));
  auto rec = recognize_table(hochster_table(build_polygon(5)));
  CHECK(rec.kind == Recognition::Kind::Polygon);
  CHECK(rec.m == 3);
  auto rs = recognize_table(simplex_closed_form(4));
  CHECK(rs.kind == Recognition::Kind::Simplex);
  CHECK(rs.n == 4);

  // Delta^2 x Delta^2 = Delta^2 x G(3); Delta^1 x Delta^3 is neither.
  auto dd = identify_simplex_polygon_product(
      hochster_table(product(build_simplex(2), build_simplex(2))));
  REQUIRE(dd);
  CHECK(*dd == std::pair<int, int>{2, 1});
  CHECK_FALSE(identify_simplex_polygon_product(
      hochster_table(product(build_simplex(1), build_simplex(3)))));
}

TEST_CASE("facet cap and parallel determinism") {
  auto big = product(build_polygon(9), build_polygon(9));
  CHECK_THROWS_AS(hochster_table(big), Error);
  try {
    hochster_table(big);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
    CHECK(std::string(e.what()).find("18") != std::string::npos);
  }
  auto p = product(build_simplex(2), build_polygon(6));
  HochsterOptions par;
  par.jobs = 4;
  CHECK(hochster_table(p, par) == hochster_table(p));
}
