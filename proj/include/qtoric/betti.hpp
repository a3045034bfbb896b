#pragma once

// Bigraded Betti numbers beta^{-i,2j}(P) of simple polytopes. Entry (i, j)
// of a table holds beta^{-i,2j}.

#include "qtoric/integer.hpp"
#include "qtoric/polytope.hpp"

#include <map>
#include <optional>
#include <utility>

namespace qtoric {

struct BettiTable {
  int dim = 0;         // n; 0 means "no metadata"
  int num_facets = 0;  // d
  std::map<std::pair<int, int>, Integer> entries;  // nonzero entries only

  bool has_metadata() const noexcept { return dim > 0 && num_facets > 0; }
  Integer at(int i, int j) const;
  /// Sets an entry; zero removes it.
  void set(int i, int j, Integer value);

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.dim == b.dim && a.num_facets == b.num_facets && a.entries == b.entries;
  }
};

struct HochsterOptions {
  int facet_cap = 16;
  unsigned jobs = 1;
};

BettiTable hochster_table(const SimplePolytope& p, const HochsterOptions& opts = {});

BettiTable simplex_closed_form(int n);

/// Table of the (m+2)-gon.
BettiTable polygon_closed_form(int m);

/// Bigraded convolution; metadata adds (dim and facet count of a product).
BettiTable product_table(const BettiTable& t1, const BettiTable& t2);

/// Throws InvalidParameter when the table carries no (n, d) metadata.
bool check_duality(const BettiTable& t);

/// (n, m) with n, m >= 1 iff t is the table of simplex(n) x polygon(m+2).
std::optional<std::pair<int, int>> identify_simplex_polygon_product(const BettiTable& t);

struct Recognition {
  enum class Kind { None, Simplex, Polygon, SimplexPolygonProduct };
  Kind kind = Kind::None;
  int n = 0;  // simplex dimension (Simplex, SimplexPolygonProduct)
  int m = 0;  // polygon has m+2 edges (Polygon, SimplexPolygonProduct)
};

/// Tagged recognition including the degenerate single-factor cases.
Recognition recognize_table(const BettiTable& t);

}  // namespace qtoric
