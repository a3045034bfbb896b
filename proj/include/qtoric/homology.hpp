#pragma once

// Reduced simplicial homology ranks over Q via exact elimination.

#include "qtoric/integer.hpp"
#include "qtoric/polytope.hpp"

#include <cstdint>
#include <vector>

namespace qtoric {

struct ChainComplexRanks {
  /// chain_ranks[k+1] = number of k-faces, k = -1..top (the empty face counts once).
  std::vector<std::size_t> chain_ranks;
  /// boundary_ranks[k] = rank of d_k : C_k -> C_{k-1}, k = 0..top.
  std::vector<std::size_t> boundary_ranks;
};

/// Augmented boundary matrices d_0..d_top. d_k has rows indexed by the
/// (k-1)-faces and columns by the k-faces, both in sorted order.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k);

ChainComplexRanks chain_complex_ranks(const SimplicialComplex& k);

/// Reduced Betti numbers indexed from dimension -1: result[0] is dim H~_{-1}.
std::vector<std::size_t> reduced_betti_ranks(const SimplicialComplex& k);

/// Precomputed faces of a complex on at most 32 vertices, for repeated
/// homology queries on full subcomplexes. Read-only after construction.
class FaceIndex {
 public:
  explicit FaceIndex(const SimplicialComplex& k);

  int vertex_count() const noexcept { return vertex_count_; }

  /// Same contract as reduced_betti_ranks(full_subcomplex(k, sigma)).
  std::vector<std::size_t> reduced_betti_ranks(std::uint32_t sigma_mask) const;

 private:
  int vertex_count_ = 0;
  // faces_[k] holds the k-faces as bit masks, sorted.
  std::vector<std::vector<std::uint32_t>> faces_;
};

}  // namespace qtoric
