#pragma once

// Projectivizations of Whitney sums C + L_1 + ... + L_n over a base ring.
// Line bundle L_i has first Chern class alpha_i = sum_j a_ij x_j.

#include "qtoric/cohomring.hpp"
#include "qtoric/integer.hpp"
#include "qtoric/polynomial.hpp"

#include <string>
#include <vector>

namespace qtoric {

struct BundleSpec {
  RingPtr base;
  IntMatrix twists;  // n x m, m = base generator count

  int fiber_dim() const noexcept { return static_cast<int>(twists.rows()); }
};

/// Throws InvalidParameter on a missing base, n = 0 or a column mismatch.
void check_spec(const BundleSpec& s);

/// Spec from all n+1 summands (row 0 included, possibly nontrivial); the
/// rows are translated so that the 0-th summand becomes trivial.
BundleSpec spec_from_summands(RingPtr base, const IntMatrix& summands);

/// alpha_1..alpha_n as linear forms in the base generators.
std::vector<Polynomial> first_chern_classes(const BundleSpec& s);

/// c_0..c_n of prod_i (1 + alpha_i), each in base normal form.
std::vector<Polynomial> total_chern(const BundleSpec& s);

/// Base ring with fiber generator x0 adjoined at index 0 and the relation
/// x0 * prod_i (x0 + alpha_i) listed first.
GradedRing projectivization_ring(const BundleSpec& s, const std::string& fiber_name = "x0");

/// Twist move: tensor with L_k^{-1} (translate every row by -a_k, the
/// row k vanishing), optionally followed by dualizing (negate).
struct TwistMove {
  int translate_row = 0;  // 0 = the trivial summand, k = row k-1 of the twist matrix
  bool negate = false;
};

/// Twist matrix after the move with the vanished row dropped (other rows in
/// their original order).
IntMatrix apply_twist_move(const IntMatrix& twists, const TwistMove& move);

/// Ring map matrix (rows = images, fiber generator first in both rings)
/// from projectivization_ring(s) to the ring of the moved spec:
/// x0 -> (+/-) y0 - alpha_k, base generators fixed.
IntMatrix twist_move_map(const IntMatrix& twists, const TwistMove& move);

/// Canonical representative of the orbit of {0, a_1, ..., a_n} under
/// translation, negation and permutation.
IntMatrix normalize_twists(const IntMatrix& twists);

/// The move whose result, after sorting rows, is normalize_twists(twists).
TwistMove normalizing_move(const IntMatrix& twists);

/// Same base, same n and equal total Chern classes. Requires the dimension
/// condition 2(n+1) >= real dimension of the base.
bool chern_isomorphic(const BundleSpec& a, const BundleSpec& b);

/// Structural equality of presentations (generators and relations).
bool same_presentation(const GradedRing& a, const GradedRing& b);

}  // namespace qtoric
