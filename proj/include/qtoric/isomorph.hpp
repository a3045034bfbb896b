#pragma once

// Degree-preserving ring maps between presentations generated in degree 2:
// verification, bounded search, base-subring checks, fiberwise
// automorphisms of projectivizations and characteristic-class transport.

#include "qtoric/bundles.hpp"
#include "qtoric/cohomring.hpp"
#include "qtoric/integer.hpp"
#include "qtoric/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtoric {

/// Row i holds the image of source generator i in the target generators.
struct RingMap {
  RingPtr source;
  RingPtr target;
  IntMatrix matrix;
};

/// Images of the source generators as linear forms over the target.
std::vector<Polynomial> generator_images(const RingMap& m);

/// Image of a source polynomial, reduced in the target.
Polynomial apply_map(const RingMap& m, const Polynomial& p);

/// Composite source(a) -> target(b); needs target(a) == source(b).
RingMap compose(const RingMap& a, const RingMap& b);

enum class IsoStatus { Ok, ShapeMismatch, NotUnimodular, RelationNotMapped, HilbertMismatch };

const char* to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status = IsoStatus::Ok;
  Integer determinant;
  std::optional<std::size_t> failed_relation;  // first relation with nonzero image
  std::vector<Polynomial> reduced_images;      // one per source relation
  std::string message;

  bool ok() const noexcept { return status == IsoStatus::Ok; }
};

IsoResult verify_iso(const RingMap& m);

struct SearchOptions {
  int bound = 3;
  unsigned jobs = 1;
};

/// Every isomorphism with entries in [-bound, bound], listed once per sign
/// pair (first nonzero entry of row 0 positive), sorted lexicographically.
std::vector<IntMatrix> search_iso(const RingPtr& r1, const RingPtr& r2,
                                  const SearchOptions& opts = {});

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

struct BasePreservationReport {
  bool preserved = true;
  Integer fiber_coefficient;              // entry (fiber_source, fiber_target)
  std::vector<MatrixEntry> violations;    // base generators hitting the fiber
};

BasePreservationReport base_preservation(const IntMatrix& map, std::size_t fiber_source,
                                         std::size_t fiber_target);
/// Uses the fiber bookkeeping of both rings.
BasePreservationReport base_preservation(const RingMap& m);

struct AutomorphismCandidate {
  int epsilon = 1;
  Polynomial omega;  // degree-2 base element
  /// Reduced in the base ring. For eps = -1:
  ///   lhs = (1 - omega)(1 - omega - alpha_1)...(1 - omega - alpha_n)
  ///   rhs = (1 + alpha_1)...(1 + alpha_n)
  /// and both equal c(E) for the identity.
  Polynomial lhs;
  Polynomial rhs;
  bool identity_holds = false;
  IntMatrix ring_map;        // x0 -> eps*x0 + omega on the projectivization ring
  bool ring_map_verified = false;
};

/// (+1, 0) always; (-1, omega) when omega = -(2/(n+1)) sum alpha_i is
/// integral and the Chern identity holds after reduction.
std::vector<AutomorphismCandidate> fiber_automorphisms(const BundleSpec& s);

/// Class data of one ring; any field may be absent.
struct ClassData {
  std::optional<std::vector<Polynomial>> w;  // by polynomial degree, mod 2
  std::optional<std::vector<Polynomial>> p;  // by Pontryagin degree
};

struct ClassPreservationReport {
  std::optional<bool> w_preserved;
  std::optional<bool> p_preserved;
  /// Only for rings with top cohomological degree 4 and a generator basis
  /// in degree 2: P G2 P^T = sign * G1.
  std::optional<bool> pairing_congruent;
  int pairing_sign = 0;
  IntMatrix g1, g2, transported;  // transported = P G2 P^T
};

ClassPreservationReport characteristic_class_preservation(const RingMap& m, const ClassData& c1,
                                                          const ClassData& c2);

/// Pairing congruence alone (4-dimensional rings).
ClassPreservationReport pairing_congruence(const RingMap& m);

}  // namespace qtoric
