#include "qtoric/homology.hpp"

#include "qtoric/error.hpp"
#include "qtoric/intlinalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace qtoric {

namespace {

std::vector<std::vector<FacetSet>> faces_by_dimension(const SimplicialComplex& k) {
  std::vector<std::vector<FacetSet>> out;
  for (auto& f : k.all_faces()) {
    const std::size_t dim = f.size() - 1;
    if (out.size() <= dim) out.resize(dim + 1);
    out[dim].push_back(std::move(f));
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<std::size_t> betti_from_ranks(const ChainComplexRanks& r) {
  std::vector<std::size_t> out(r.chain_ranks.size());
  for (std::size_t idx = 0; idx < r.chain_ranks.size(); ++idx) {
    // idx = k+1 for dimension k; boundary_ranks[k] is d_k.
    const std::size_t outgoing = idx == 0 ? 0 : r.boundary_ranks[idx - 1];
    const std::size_t incoming = idx < r.boundary_ranks.size() ? r.boundary_ranks[idx] : 0;
    out[idx] = r.chain_ranks[idx] - outgoing - incoming;
  }
  return out;
}

}  // namespace

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k) {
  const auto levels = faces_by_dimension(k);
  std::vector<IntMatrix> out;
  std::vector<FacetSet> lower{FacetSet{}};  // the (-1)-face
  for (const auto& level : levels) {
    std::map<FacetSet, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    IntMatrix d(lower.size(), level.size());
    for (std::size_t c = 0; c < level.size(); ++c) {
      const auto& f = level[c];
      for (std::size_t i = 0; i < f.size(); ++i) {
        FacetSet g;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != i) g.push_back(f[j]);
        d(row_of.at(g), c) = (i % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(d));
    lower = level;
  }
  return out;
}

ChainComplexRanks chain_complex_ranks(const SimplicialComplex& k) {
  ChainComplexRanks r;
  r.chain_ranks.push_back(1);
  for (const auto& d : boundary_matrices(k)) {
    r.chain_ranks.push_back(d.cols());
    r.boundary_ranks.push_back(rank(d));
  }
  return r;
}

std::vector<std::size_t> reduced_betti_ranks(const SimplicialComplex& k) {
  return betti_from_ranks(chain_complex_ranks(k));
}

FaceIndex::FaceIndex(const SimplicialComplex& k) : vertex_count_(k.vertex_count()) {
  require(vertex_count_ <= 32, ErrorKind::ResourceLimit,
          "face index supports at most 32 vertices, got " + std::to_string(vertex_count_));
  std::unordered_set<std::uint32_t> seen;
  for (const auto& m : k.maximal_faces()) {
    std::uint32_t full = 0;
    for (int v : m) full |= 1u << v;
    // Enumerate all nonempty submasks of full.
    for (std::uint32_t s = full; s; s = (s - 1) & full) seen.insert(s);
  }
  for (std::uint32_t s : seen) {
    const std::size_t dim = static_cast<std::size_t>(std::popcount(s)) - 1;
    if (faces_.size() <= dim) faces_.resize(dim + 1);
    faces_[dim].push_back(s);
  }
  for (auto& level : faces_) std::sort(level.begin(), level.end());
}

std::vector<std::size_t> FaceIndex::reduced_betti_ranks(std::uint32_t sigma) const {
  ChainComplexRanks r;
  r.chain_ranks.push_back(1);
  std::vector<std::uint32_t> lower{0};
  for (const auto& level : faces_) {
    std::vector<std::uint32_t> cur;
    for (std::uint32_t f : level)
      if ((f & sigma) == f) cur.push_back(f);
    if (cur.empty()) break;
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    row_of.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    // Columns of d become rows here (rank is transpose invariant).
    std::vector<std::vector<std::int64_t>> rows(cur.size(), std::vector<std::int64_t>(lower.size()));
    for (std::size_t c = 0; c < cur.size(); ++c) {
      std::uint32_t rest = cur[c];
      int pos = 0;
      while (rest) {
        const std::uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        rows[c][row_of.at(cur[c] ^ bit)] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    r.chain_ranks.push_back(cur.size());
    r.boundary_ranks.push_back(rank_small(std::move(rows), lower.size()));
    lower = std::move(cur);
  }
  return betti_from_ranks(r);
}

}  // namespace qtoric
