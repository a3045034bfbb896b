#include "qtoric/bundles.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cohomring.hpp"
#include "qtoric/error.hpp"
#include "qtoric/intlinalg.hpp"
#include "qtoric/isomorph.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qtoric;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

const IntMatrix kCubeM{{1, 0, 0, -1, -1, -1}, {0, 1, 0, 0, -1, -2}, {0, 0, 1, 0, -1, -1}};
const IntMatrix kCubeN{{1, 0, 0, -1, -1, -1}, {0, 1, 0, 0, -1, -2}, {0, 0, 1, -2, -1, -1}};
const IntMatrix kPhi{{-1, -1, -1}, {2, 1, 2}, {0, 0, -1}};

RingPtr ring_of(const IntMatrix& l) {
  return std::make_shared<GradedRing>(present_cohomology(CharMatrix{bundle_polytope(1, 2), l}));
}

RingPtr make(std::vector<std::string> g, std::vector<Polynomial> r) {
  return std::make_shared<GradedRing>(std::move(g), std::move(r));
}

RingPtr cp2cp2() {
  auto x = var(2, 0), y = var(2, 1);
  return make({"x", "y"}, {x * (x + 2 * y), y * (x + y)});
}

// Sign convention of search_iso: first nonzero entry of row 0 positive.
IntMatrix sign_normal(const IntMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(0, j) != 0) return m(0, j) < 0 ? m.negated() : m;
  return m;
}

bool contains(const std::vector<IntMatrix>& v, const IntMatrix& m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

}  // namespace

TEST_CASE("verify the cube isomorphism") {
  auto m = ring_of(kCubeM), n = ring_of(kCubeN);
  auto res = verify_iso({m, n, kPhi});
  CHECK(res.ok());
  CHECK(abs(res.determinant) == 1);
  for (const auto& p : res.reduced_images) CHECK(p.is_zero());
  CHECK(std::string(to_string(res.status)) == "ok");

  // x -> -X - Y - Z
  auto images = generator_images({m, n, kPhi});
  auto X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
  CHECK(images[0] == -X - Y - Z);

  // The inverse is an isomorphism too and composes to the identity.
  auto inv = inverse_unimodular(kPhi);
  REQUIRE(inv);
  CHECK(verify_iso({n, m, *inv}).ok());
  auto id = compose({m, n, kPhi}, {n, m, *inv});
  CHECK(id.matrix == IntMatrix::identity(3));
  CHECK(apply_map({m, n, kPhi}, m->relations()[0]).is_zero());
}

TEST_CASE("verify failures") {
  auto m = ring_of(kCubeM), n = ring_of(kCubeN);
  CHECK(verify_iso({m, m, IntMatrix::identity(3)}).ok());
  CHECK(verify_iso({n, n, IntMatrix::identity(3)}).ok());

  auto d = verify_iso({m, m, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}});
  CHECK(d.status == IsoStatus::NotUnimodular);
  CHECK(d.determinant == 2);

  // Generator counts differ: a shape mismatch. A matrix of the wrong size is an input error.
  CHECK(verify_iso({m, cp2cp2(), IntMatrix(3, 2)}).status == IsoStatus::ShapeMismatch);
  CHECK_THROWS_AS(verify_iso({m, n, IntMatrix::identity(2)}), Error);

  // M and N are different presentations, so the identity fails on a relation.
  auto r = verify_iso({m, n, IntMatrix::identity(3)});
  CHECK(r.status == IsoStatus::RelationNotMapped);
  REQUIRE(r.failed_relation);
  CHECK_FALSE(r.reduced_images[*r.failed_relation].is_zero());

  auto t3 = make({"t"}, {var(1, 0).pow(3)});
  auto t2 = make({"t"}, {var(1, 0).pow(2)});
  CHECK(verify_iso({t3, t2, IntMatrix{{1}}}).status == IsoStatus::HilbertMismatch);
  CHECK(std::string(to_string(IsoStatus::HilbertMismatch)) == "hilbert-mismatch");
}

TEST_CASE("bounded search") {
  auto m = ring_of(kCubeM), n = ring_of(kCubeN);
  SearchOptions o;
  o.bound = 2;
  auto found = search_iso(m, n, o);
  // Listed once per sign pair, so phi shows up as -phi.
  CHECK((contains(found, kPhi) || contains(found, kPhi.negated())));
  CHECK(std::is_sorted(found.begin(), found.end()));
  for (const auto& f : found) {
    CHECK(verify_iso({m, n, f}).ok());
    CHECK(sign_normal(f) == f);
  }
  o.jobs = 4;
  CHECK(search_iso(m, n, o) == found);

  SearchOptions one;
  one.bound = 1;
  CHECK(contains(search_iso(m, m, one), IntMatrix::identity(3)));
  auto cp2 = make({"t"}, {var(1, 0).pow(3)});
  auto x = var(2, 0), y = var(2, 1);
  auto cp1cp1 = make({"x", "y"}, {x * x, y * y});
  CHECK(search_iso(cp2, cp1cp1, o).empty());
  one.bound = 0;
  CHECK_THROWS_AS(search_iso(m, m, one), Error);
}

TEST_CASE("search matches exhaustive enumeration") {
  // Every 3x3 matrix with entries in {-1,0,1}, filtered by verify_iso.
  auto m = ring_of(kCubeM), n = ring_of(kCubeN);
  for (const auto& [a, b] : {std::pair{m, n}, std::pair{m, m}}) {
    std::vector<IntMatrix> brute;
    for (int code = 0; code < 19683; ++code) {
      IntMatrix p(3, 3);
      int c = code;
      for (int k = 0; k < 9; ++k, c /= 3) p(k / 3, k % 3) = c % 3 - 1;
      if (verify_iso({a, b, p}).ok() && sign_normal(p) == p) brute.push_back(p);
    }
    std::sort(brute.begin(), brute.end());
    SearchOptions o;
    o.bound = 1;
    CHECK(search_iso(a, b, o) == brute);
  }
}

TEST_CASE("base preservation") {
  BundleSpec s{cp2cp2(), IntMatrix{{1, 1}}};
  auto p = std::make_shared<GradedRing>(projectivization_ring(s));
  auto id = base_preservation(RingMap{p, p, IntMatrix::identity(3)});
  CHECK(id.preserved);
  CHECK(id.fiber_coefficient == 1);

  auto bad = base_preservation(IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}, 0, 0);
  CHECK_FALSE(bad.preserved);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].row == 1);
  CHECK(bad.violations[0].col == 0);
  CHECK(bad.violations[0].value == 1);

  auto plain = ring_of(kCubeM);
  CHECK_THROWS_AS(base_preservation(RingMap{plain, plain, IntMatrix::identity(3)}), Error);

  // Every isomorphism between CP^1-bundles over CP2#CP2 keeps the base.
  for (const auto& tw : {IntMatrix{{1, 1}}, IntMatrix{{2, 1}}, IntMatrix{{0, 1}}}) {
    BundleSpec a{cp2cp2(), tw};
    auto ra = std::make_shared<GradedRing>(projectivization_ring(a));
    BundleSpec b{cp2cp2(), apply_twist_move(tw, {1, false})};
    auto rb = std::make_shared<GradedRing>(projectivization_ring(b));
    SearchOptions o;
    o.bound = 2;
    for (const auto& [x, y] : {std::pair{ra, ra}, std::pair{ra, rb}}) {
      auto found = search_iso(x, y, o);
      CHECK_FALSE(found.empty());
      for (const auto& f : found) CHECK(base_preservation(RingMap{x, y, f}).preserved);
    }
  }
}

TEST_CASE("fiberwise automorphisms") {
  auto t = var(1, 0);
  auto cp2 = make({"t"}, {t.pow(3)});

  auto zero = fiber_automorphisms({cp2, IntMatrix{{0}}});
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].epsilon == 1);
  CHECK(zero[0].omega.is_zero());
  CHECK(zero[1].epsilon == -1);
  CHECK(zero[1].omega.is_zero());
  for (const auto& c : zero) {
    CHECK(c.identity_holds);
    CHECK(c.ring_map_verified);
  }

  auto two = fiber_automorphisms({cp2, IntMatrix{{2}}});
  REQUIRE(two.size() == 2);
  CHECK(two[1].epsilon == -1);
  CHECK(two[1].omega == -2 * t);
  CHECK(two[1].lhs == Polynomial::constant(1, 1) + 2 * t);
  CHECK(two[1].ring_map_verified);
  CHECK(two[1].ring_map == IntMatrix{{-1, -2}, {0, 1}});

  auto n2 = fiber_automorphisms({cp2, IntMatrix{{1}, {0}}});
  REQUIRE(n2.size() == 1);
  CHECK(n2[0].epsilon == 1);

  // The bound-2 search finds a base-fixing fiber flip, and so does the formula.
  BundleSpec s{cp2cp2(), IntMatrix{{2, 0}}};
  auto autos = fiber_automorphisms(s);
  auto p = std::make_shared<GradedRing>(projectivization_ring(s));
  SearchOptions o;
  o.bound = 2;
  bool flip = false;
  for (const auto& f : search_iso(p, p, o)) {
    const IntMatrix g = f(1, 1) == 1 ? f : f.negated();
    bool base_fixed = true;
    for (std::size_t i = 1; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) base_fixed = base_fixed && g(i, j) == (i == j ? 1 : 0);
    if (base_fixed && g(0, 0) == -1) flip = true;
  }
  CHECK(flip);
  CHECK(flip == (autos.size() == 2));
}

TEST_CASE("characteristic class transport") {
  CharMatrix lm{bundle_polytope(1, 2), kCubeM};
  CharMatrix ln{bundle_polytope(1, 2), kCubeN};
  auto m = std::make_shared<GradedRing>(present_cohomology(lm));
  auto n = std::make_shared<GradedRing>(present_cohomology(ln));
  auto cm = characteristic_classes(lm, *m);
  auto cn = characteristic_classes(ln, *n);
  ClassData dm{cm.w, cm.p}, dn{cn.w, cn.p};

  auto same = characteristic_class_preservation({m, m, IntMatrix::identity(3)}, dm, dm);
  CHECK(same.w_preserved == true);
  CHECK(same.p_preserved == true);
  CHECK_FALSE(same.pairing_congruent);

  auto phi = characteristic_class_preservation({m, n, kPhi}, dm, dn);
  CHECK(phi.w_preserved == true);
  CHECK(phi.p_preserved == true);

  CHECK_THROWS_AS(characteristic_class_preservation({m, n, kPhi}, ClassData{}, dn), Error);

  // In dimension 4 every ring isomorphism is an isometry up to sign.
  auto b = cp2cp2();
  SearchOptions o;
  o.bound = 2;
  auto autos = search_iso(b, b, o);
  CHECK(autos.size() >= 2);
  for (const auto& f : autos) {
    auto rep = pairing_congruence({b, b, f});
    REQUIRE(rep.pairing_congruent);
    CHECK(*rep.pairing_congruent);
    CHECK(rep.g1 == IntMatrix{{-2, 1}, {1, -1}});
  }
  auto x = var(2, 0), y = var(2, 1);
  auto sq = make({"x", "y"}, {x * x, y * y});
  auto swap = pairing_congruence({sq, sq, IntMatrix{{0, 1}, {1, 0}}});
  CHECK(swap.pairing_sign == 1);
  auto neg = pairing_congruence({sq, sq, IntMatrix{{-1, 0}, {0, 1}}});
  CHECK(neg.pairing_sign == -1);
}
