#pragma once

// Simple polytopes stored combinatorially: each vertex is the set of facets
// containing it. Facet indices are 0-based.

#include <cstdint>
#include <string>
#include <vector>

namespace qtoric {

using FacetSet = std::vector<int>;  // sorted, no duplicates

class SimplePolytope {
 public:
  SimplePolytope() = default;
  /// Vertices are sorted internally; validity is not enforced here (see validate).
  SimplePolytope(int dim, int num_facets, std::vector<FacetSet> vertices, std::string label = {});

  int dim() const noexcept { return dim_; }
  int num_facets() const noexcept { return num_facets_; }
  const std::vector<FacetSet>& vertices() const noexcept { return vertices_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// True iff the facet set is contained in some vertex (a nonempty face).
  bool is_face(const FacetSet& facets) const;

  friend bool operator==(const SimplePolytope& a, const SimplePolytope& b) {
    return a.dim_ == b.dim_ && a.num_facets_ == b.num_facets_ && a.vertices_ == b.vertices_;
  }

 private:
  int dim_ = 0;
  int num_facets_ = 0;
  std::vector<FacetSet> vertices_;
  std::string label_;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Non-maximal faces among `faces` are dropped.
  SimplicialComplex(int vertex_count, std::vector<FacetSet> faces);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<FacetSet>& maximal_faces() const noexcept { return maximal_; }
  bool empty() const noexcept { return maximal_.empty(); }

  /// Every face (nonempty), sorted by size then lexicographically.
  std::vector<FacetSet> all_faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.maximal_ == b.maximal_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<FacetSet> maximal_;
};

SimplePolytope build_simplex(int n);
SimplePolytope build_polygon(int k);

/// Facets of p1 keep their indices; facets of p2 are shifted by p1.num_facets().
SimplePolytope product(const SimplePolytope& p1, const SimplePolytope& p2);

/// Renames facet i to new_index[i]; new_index must be a permutation.
SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& new_index);

SimplicialComplex nerve_complex(const SimplePolytope& p);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const FacetSet& sigma);

/// Violated invariants, one message per violation; empty means valid.
std::vector<std::string> validate(const SimplePolytope& p);

/// Throws InvalidParameter listing the diagnostics when p is not valid.
void require_valid(const SimplePolytope& p);

/// Inclusion-minimal facet sets with empty intersection.
std::vector<FacetSet> minimal_non_faces(const SimplePolytope& p);

std::string format_facet_set(const FacetSet& s, bool one_based_names = false);

}  // namespace qtoric
