#pragma once

// Characteristic matrices over simple polytopes: non-singularity, normal
// forms, equivalence, product splits and projective-bundle matrices.

#include "qtoric/integer.hpp"
#include "qtoric/polytope.hpp"

#include <optional>
#include <vector>

namespace qtoric {

/// n x d integer matrix; column i is the vector assigned to facet i.
struct CharMatrix {
  SimplePolytope polytope;
  IntMatrix entries;
};

struct NonsingularResult {
  bool ok = true;
  FacetSet failing_vertex;  // lowest failing vertex in sorted order
  Integer determinant;      // its determinant
};

/// Assignment of product facets to the two factors. The first n_k entries of
/// facets_k are the facets forming the identity block of factor k.
struct ProductSplit {
  int n1 = 0;
  std::vector<int> facets1;
  int n2 = 0;
  std::vector<int> facets2;

  int d1() const noexcept { return static_cast<int>(facets1.size()); }
  int d2() const noexcept { return static_cast<int>(facets2.size()); }
};

/// Block data read off a matrix in split form
///   ( E  O  A11 A12 )
///   ( O  E  A21 A22 ).
/// For a simplex fiber (d1 = n1 + 1) the fiber column A11 is normalized to
/// all -1 first. `base` is (E | A22), `twists` is -A12 and `lower` is -A21
/// (the (b, c) column for a polygon base).
struct BundleMatrixData {
  IntMatrix base;
  IntMatrix twists;
  IntMatrix lower;
  IntMatrix fiber;  // (E | A11)

  bool is_bundle() const;
};

NonsingularResult check_nonsingular(const SimplePolytope& p, const IntMatrix& lambda);

/// (E_n | A^{-1} B) where A is the leading n x n block. Throws
/// NotNormalizable when |det A| != 1.
CharMatrix normal_form(const CharMatrix& l);

/// Same polytope and labeling; equal up to GL_n(Z) and per-facet sign.
bool equivalent(const CharMatrix& l1, const CharMatrix& l2);

/// Split for product(p1, p2) with the identity blocks on the first facets of
/// each factor.
ProductSplit default_split(int n1, int d1, int n2, int d2);

/// The factor polytope (facets numbered by position in facets_k).
SimplePolytope factor_polytope(const SimplePolytope& p, const ProductSplit& split, int which);

/// (E_{n_k} | A_kk) over the factor polytope.
CharMatrix extract_factor_matrix(const CharMatrix& l, const ProductSplit& split, int which);

/// Block data regardless of whether the lower-left block vanishes.
BundleMatrixData read_block_data(const CharMatrix& l, const ProductSplit& split);

/// Bundle data iff the lower-left block A21 vanishes.
std::optional<BundleMatrixData> detect_bundle_structure(const CharMatrix& l,
                                                        const ProductSplit& split);

/// The (m+2)-gon with facets ordered F_{m+1}, F_{m+2}, F_1, ..., F_m, which
/// is the column order expected of 2 x (m+2) base matrices.
SimplePolytope base_polygon(int m);

/// simplex(n) x polygon(m+2) with facets ordered
///   F^1_1..F^1_n, F^2_{m+1}, F^2_{m+2}, F^1_{n+1}, F^2_1..F^2_m
/// and the matching split (fiber = factor 1, base = factor 2).
SimplePolytope bundle_polytope(int n, int m);
ProductSplit bundle_split(int n, int m);

/// Characteristic matrix of P(C + L_1 + ... + L_n) over the base described
/// by `base` (2 x (m+2), leading identity block), twists n x m.
CharMatrix build_bundle_char_matrix(const IntMatrix& base, const IntMatrix& twists);

}  // namespace qtoric
