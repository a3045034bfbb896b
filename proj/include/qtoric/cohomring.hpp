#pragma once

// Graded rings Z[x_1..x_g]/I with all generators in cohomological degree 2,
// and the cohomology presentation of quasitoric manifolds built from them.
//
// Degrees in this interface are polynomial degrees k; the cohomological
// degree is 2k.

#include "qtoric/charmap.hpp"
#include "qtoric/integer.hpp"
#include "qtoric/intlinalg.hpp"
#include "qtoric/polynomial.hpp"
#include "qtoric/polytope.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtoric {

struct HilbertFunction {
  std::vector<std::size_t> ranks;  // ranks[k] = rank of H^{2k}, through the top nonzero degree
  std::map<int, std::vector<Integer>> torsion;  // cohomological degree -> invariant factors > 1
  bool truncated = false;  // the degree cap was hit before the ring vanished

  bool has_torsion() const noexcept { return !torsion.empty(); }
};

class GradedRing {
 public:
  struct Options {
    int max_degree = 24;
  };

  /// Precomputes per-degree reduction tables until the quotient vanishes
  /// (or max_degree). Relations must be homogeneous of degree >= 1.
  GradedRing(std::vector<std::string> generators, std::vector<Polynomial> relations,
             std::optional<std::size_t> fiber_index = std::nullopt);
  GradedRing(std::vector<std::string> generators, std::vector<Polynomial> relations,
             std::optional<std::size_t> fiber_index, Options opts);

  std::size_t ngens() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  /// Index of the fiber generator for projectivization rings.
  std::optional<std::size_t> fiber_index() const noexcept { return fiber_index_; }

  const HilbertFunction& hilbert() const noexcept { return hilbert_; }
  /// Highest polynomial degree with nonzero rank.
  int top_degree() const noexcept { return static_cast<int>(hilbert_.ranks.size()) - 1; }
  /// Highest degree with a reduction table.
  int computed_degree() const noexcept { return static_cast<int>(tables_.size()) - 1; }

  /// Canonical representative of a homogeneous polynomial modulo the ideal;
  /// zero iff the polynomial lies in the ideal.
  Polynomial normal_form(const Polynomial& p) const;
  /// normal_form applied to each homogeneous part.
  Polynomial reduce(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

  /// Canonical representative modulo I + 2.
  Polynomial normal_form_mod2(const Polynomial& p) const;
  bool equal_mod2(const Polynomial& a, const Polynomial& b) const;

  /// Non-pivot monomials of degree k (a Z-basis of the quotient when every
  /// pivot of that degree is 1).
  std::vector<Monomial> standard_monomials(int k) const;
  bool unit_pivots(int k) const;

  /// The fundamental-class functional on the top degree: a primitive
  /// integer functional vanishing on the ideal, positive on the reference
  /// monomial (most distinct variables among monomials not in the ideal,
  /// ties to the graded-lex smallest). Needs top rank 1 and no torsion.
  Integer evaluate_top(const Polynomial& p) const;
  Monomial reference_monomial() const;

  Polynomial zero() const { return Polynomial(ngens()); }
  Polynomial one() const { return Polynomial::constant(ngens(), 1); }
  Polynomial gen(std::size_t i) const { return Polynomial::variable(ngens(), i); }

  std::string to_string() const;

 private:
  struct DegreeTable {
    std::vector<Monomial> monomials;  // graded-lex descending
    std::map<Monomial, std::size_t> index;
    Echelon ideal;
    Echelon ideal_mod2;
  };

  std::vector<Integer> coordinates(const Polynomial& p, const DegreeTable& t) const;
  Polynomial from_coordinates(const std::vector<Integer>& v, const DegreeTable& t) const;
  const DegreeTable* table_for(int k) const;

  std::vector<std::string> generators_;
  std::vector<Polynomial> relations_;
  std::optional<std::size_t> fiber_index_;
  std::vector<DegreeTable> tables_;
  HilbertFunction hilbert_;
  bool vanishes_beyond_ = false;
  std::vector<Integer> top_functional_;  // empty unless top rank 1 and torsion-free
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Minimal non-faces as square-free monomials in d variables.
std::vector<Polynomial> stanley_reisner_ideal(const SimplePolytope& p);

/// theta_i = sum_j lambda_ij v_j, one per row.
std::vector<Polynomial> linear_ideal(const CharMatrix& l);

/// Z[v_1..v_d]/(I_P + J) with the first n generators eliminated. The matrix
/// is brought to normal form first; generators are named v<facet+1>.
GradedRing present_cohomology(const CharMatrix& l);

/// Images of v_1..v_d in the presented ring (eliminated ones as linear forms).
std::vector<Polynomial> facet_classes(const CharMatrix& l);

struct PairingReport {
  std::vector<std::string> basis;  // degree-2 basis labels
  IntMatrix matrix;                // symmetric cup-product pairing
  Integer determinant;
  long long signature = 0;
};

/// Requires top degree 2 (cohomological 4), top rank 1, no torsion.
PairingReport poincare_pairing(const GradedRing& r);

struct SignatureP1 {
  long long signature = 0;
  long long p1 = 0;  // p1 evaluated on the fundamental class, 3 * signature
};

SignatureP1 signature_p1(const GradedRing& r);

/// Graded pieces indexed by polynomial degree.
struct CharacteristicClasses {
  std::vector<Polynomial> w;  // w[k] in H^{2k}(-; Z/2), coefficients in {0, 1}
  std::vector<Polynomial> p;  // p[k] in H^{4k}, integral normal forms
};

/// prod_i (1 + v_i) reduced mod 2, per degree.
std::vector<Polynomial> total_sw_class(const CharMatrix& l, const GradedRing& r);
/// prod_i (1 + v_i^2), per Pontryagin degree.
std::vector<Polynomial> total_pontryagin_class(const CharMatrix& l, const GradedRing& r);
CharacteristicClasses characteristic_classes(const CharMatrix& l, const GradedRing& r);

}  // namespace qtoric
