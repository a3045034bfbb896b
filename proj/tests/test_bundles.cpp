#include "qtoric/bundles.hpp"
#include "qtoric/error.hpp"
#include "qtoric/isomorph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qtoric;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

RingPtr cp2() { return std::make_shared<GradedRing>(std::vector<std::string>{"t"}, std::vector<Polynomial>{var(1, 0).pow(3)}); }

RingPtr cp2cp2() {
  auto x = var(2, 0), y = var(2, 1);
  return std::make_shared<GradedRing>(std::vector<std::string>{"x", "y"},
                                      std::vector<Polynomial>{x * (x + 2 * y), y * (x + y)});
}

RingPtr cp1cp1() {
  auto x = var(2, 0), y = var(2, 1);
  return std::make_shared<GradedRing>(std::vector<std::string>{"x", "y"},
                                      std::vector<Polynomial>{x * x, y * y});
}

IntMatrix sorted_rows(const IntMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::sort(rows.begin(), rows.end());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rows[i][j];
  return out;
}

IntMatrix random_twists(std::mt19937& rng, std::size_t n, std::size_t m, int lim) {
  std::uniform_int_distribution<int> a(-lim, lim);
  IntMatrix t(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) t(i, j) = a(rng);
  return t;
}

// Ranks of a projective bundle: base ranks convolved with 1 + t + ... + t^n.
std::vector<std::size_t> bundle_ranks(const std::vector<std::size_t>& base, int n) {
  std::vector<std::size_t> out(base.size() + n, 0);
  for (std::size_t k = 0; k < base.size(); ++k)
    for (int i = 0; i <= n; ++i) out[k + i] += base[k];
  return out;
}

}  // namespace

TEST_CASE("total Chern classes") {
  auto zero = total_chern({cp2cp2(), IntMatrix(3, 2)});
  REQUIRE(zero.size() == 4);
  CHECK(zero[0] == Polynomial::constant(2, 1));
  for (int k = 1; k <= 3; ++k) CHECK(zero[k].is_zero());

  auto one = total_chern({cp2cp2(), IntMatrix{{1, 2}}});
  REQUIRE(one.size() == 2);
  CHECK(one[1] == var(2, 0) + 2 * var(2, 1));

  auto two = total_chern({cp1cp1(), IntMatrix{{1, 0}, {0, 1}}});
  REQUIRE(two.size() == 3);
  CHECK(two[1] == var(2, 0) + var(2, 1));
  CHECK(two[2] == var(2, 0) * var(2, 1));

  CHECK_THROWS_AS(total_chern({cp2(), IntMatrix{{1, 2}}}), Error);
  CHECK_THROWS_AS(total_chern({nullptr, IntMatrix{{1}}}), Error);
}

TEST_CASE("summand translation") {
  auto s = spec_from_summands(cp2cp2(), IntMatrix{{1, 1}, {2, 3}, {0, 0}});
  CHECK(s.twists == IntMatrix{{1, 2}, {-1, -1}});
  CHECK_THROWS_AS(spec_from_summands(cp2cp2(), IntMatrix{{1, 1}}), Error);
}

TEST_CASE("projectivization rings") {
  auto x0 = var(3, 0), x = var(3, 1), y = var(3, 2);
  for (int a1 = -2; a1 <= 2; ++a1)
    for (int a2 = -2; a2 <= 2; ++a2) {
      auto r = projectivization_ring({cp2cp2(), IntMatrix{{a1, a2}}});
      REQUIRE(r.relations().size() == 3);
      CHECK(r.relations()[0] == x0 * (a1 * x + a2 * y + x0));
      CHECK(r.fiber_index() == std::size_t{0});
      CHECK(r.generators() == std::vector<std::string>{"x0", "x", "y"});
    }

  auto triv = projectivization_ring({cp2(), IntMatrix{{0}}});
  auto u = var(2, 0), t = var(2, 1);
  CHECK(triv.relations() == std::vector<Polynomial>{u * u, t.pow(3)});
  CHECK(triv.hilbert().ranks == std::vector<std::size_t>{1, 2, 2, 1});

  // The cube example: fiber x, base (y, z).
  auto cube = projectivization_ring({cp2cp2(), IntMatrix{{1, 1}}});
  CHECK(cube.relations() ==
        std::vector<Polynomial>{x0 * (x0 + x + y), x * (x + 2 * y), y * (x + y)});

  CHECK(projectivization_ring({cp2(), IntMatrix{{1}}}, "z").generators()[0] == "z");
  CHECK_THROWS_AS(projectivization_ring({cp2(), IntMatrix{{1}}}, "t"), Error);

  std::mt19937 rng(3);
  for (const auto& base : {cp2(), cp2cp2(), cp1cp1()})
    for (int n = 1; n <= 3; ++n) {
      auto r = projectivization_ring({base, random_twists(rng, n, base->ngens(), 3)});
      CHECK(r.hilbert().ranks == bundle_ranks(base->hilbert().ranks, n));
      CHECK_FALSE(r.hilbert().has_torsion());
    }
}

TEST_CASE("normalized twists") {
  CHECK(normalize_twists(IntMatrix(1, 3)) == IntMatrix(1, 3));
  CHECK(normalize_twists(IntMatrix{{2}}) == IntMatrix{{-2}});
  CHECK(normalize_twists(IntMatrix{{1}, {3}}) == IntMatrix{{-3}, {-2}});

  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3, m = 1 + (t / 3) % 2;
    const IntMatrix tw = random_twists(rng, n, m, 3);
    const IntMatrix norm = normalize_twists(tw);
    CHECK(normalize_twists(norm) == norm);
    // Invariant under every move and under row permutations.
    for (int k = 0; k <= int(n); ++k)
      for (bool neg : {false, true}) CHECK(normalize_twists(apply_twist_move(tw, {k, neg})) == norm);
    IntMatrix rev(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) rev(i, j) = tw(n - 1 - i, j);
    CHECK(normalize_twists(rev) == norm);
    CHECK(sorted_rows(apply_twist_move(tw, normalizing_move(tw))) == norm);
  }
}

TEST_CASE("twist moves are ring isomorphisms") {
  std::mt19937 rng(29);
  for (const auto& base : {cp2(), cp2cp2()})
    for (int n = 1; n <= 2; ++n)
      for (int t = 0; t < 3; ++t) {
        BundleSpec s{base, random_twists(rng, n, base->ngens(), 2)};
        auto src = std::make_shared<GradedRing>(projectivization_ring(s));
        for (int k = 0; k <= n; ++k)
          for (bool neg : {false, true}) {
            TwistMove mv{k, neg};
            BundleSpec moved{base, apply_twist_move(s.twists, mv)};
            auto dst = std::make_shared<GradedRing>(projectivization_ring(moved));
            auto res = verify_iso({src, dst, twist_move_map(s.twists, mv)});
            CHECK(res.ok());
          }
      }
}

TEST_CASE("Chern comparison") {
  CHECK(chern_isomorphic({cp1cp1(), IntMatrix{{1, 2}}}, {cp1cp1(), IntMatrix{{1, 2}}}));
  auto b = cp1cp1();
  CHECK(chern_isomorphic({b, IntMatrix{{1, 0}, {0, 1}}}, {b, IntMatrix{{0, 1}, {1, 0}}}));
  CHECK_FALSE(chern_isomorphic({b, IntMatrix{{2, 0}}}, {b, IntMatrix{{0, 2}}}));
  CHECK_THROWS_AS(chern_isomorphic({b, IntMatrix{{1, 0}}}, {cp2cp2(), IntMatrix{{1, 0}}}), Error);

  // structural, not up to isomorphism
  CHECK(same_presentation(projectivization_ring({b, IntMatrix{{1, 1}}}),
                          projectivization_ring({b, IntMatrix{{1, 1}}})));
  CHECK_FALSE(same_presentation(projectivization_ring({b, IntMatrix{{1, 1}}}),
                                projectivization_ring({b, IntMatrix{{1, 0}}})));
}
