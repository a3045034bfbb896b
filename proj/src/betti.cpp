#include "qtoric/betti.hpp"

#include "qtoric/error.hpp"
#include "qtoric/homology.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <vector>

namespace qtoric {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Integer BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Integer(0) : it->second;
}

void BettiTable::set(int i, int j, Integer value) {
  if (value == 0)
    entries.erase({i, j});
  else
    entries[{i, j}] = std::move(value);
}

BettiTable hochster_table(const SimplePolytope& p, const HochsterOptions& opts) {
  require_valid(p);
  const int d = p.num_facets();
  require(d <= opts.facet_cap, ErrorKind::ResourceLimit,
          "Hochster enumeration over " + std::to_string(d) + " facets exceeds the cap of " +
              std::to_string(opts.facet_cap));
  require(d <= 30, ErrorKind::ResourceLimit, "Hochster enumeration supports at most 30 facets");
  const FaceIndex faces(nerve_complex(p));
  const std::uint32_t total = 1u << d;

  // Per-worker accumulators merged afterwards; addition commutes so the
  // result does not depend on scheduling.
  using Acc = std::map<std::pair<int, int>, Integer>;
  auto work = [&](std::uint32_t begin, std::uint32_t end, Acc& acc) {
    for (std::uint32_t sigma = begin; sigma < end; ++sigma) {
      const int size = std::popcount(sigma);
      const auto ranks = faces.reduced_betti_ranks(sigma);
      for (std::size_t idx = 0; idx < ranks.size(); ++idx) {
        if (ranks[idx] == 0) continue;
        const int hdim = static_cast<int>(idx) - 1;  // j - i - 1 = hdim
        acc[{size - hdim - 1, size}] += ranks[idx];
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, 64));
  std::vector<Acc> partial(jobs);
  if (jobs == 1) {
    work(0, total, partial[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint32_t chunk = (total + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint32_t b = std::min<std::uint32_t>(total, t * chunk);
      const std::uint32_t e = std::min<std::uint32_t>(total, b + chunk);
      threads.emplace_back(work, b, e, std::ref(partial[t]));
    }
    for (auto& th : threads) th.join();
  }

  BettiTable t;
  t.dim = p.dim();
  t.num_facets = d;
  for (const auto& acc : partial)
    for (const auto& [key, v] : acc) t.set(key.first, key.second, t.at(key.first, key.second) + v);
  return t;
}

BettiTable simplex_closed_form(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "simplex dimension must be >= 1");
  BettiTable t;
  t.dim = n;
  t.num_facets = n + 1;
  t.set(0, 0, 1);
  t.set(1, n + 1, 1);
  return t;
}

BettiTable polygon_closed_form(int m) {
  require(m >= 1, ErrorKind::InvalidParameter, "polygon parameter m must be >= 1");
  BettiTable t;
  t.dim = 2;
  t.num_facets = m + 2;
  t.set(0, 0, 1);
  t.set(m, m + 2, 1);
  for (int k = 2; k <= m + 1; ++k) {
    const Integer num = Integer(m + 2) * (k - 1) * binomial(m, k);
    const Integer den = m + 2 - k;
    require(num % den == 0, ErrorKind::Internal, "polygon Betti formula is not integral");
    if (num != 0) t.set(k - 1, k, num / den);
  }
  return t;
}

BettiTable product_table(const BettiTable& t1, const BettiTable& t2) {
  BettiTable t;
  if (t1.has_metadata() && t2.has_metadata()) {
    t.dim = t1.dim + t2.dim;
    t.num_facets = t1.num_facets + t2.num_facets;
  }
  for (const auto& [k1, v1] : t1.entries)
    for (const auto& [k2, v2] : t2.entries) {
      const int i = k1.first + k2.first, j = k1.second + k2.second;
      t.set(i, j, t.at(i, j) + v1 * v2);
    }
  return t;
}

bool check_duality(const BettiTable& t) {
  require(t.has_metadata(), ErrorKind::InvalidParameter,
          "duality check needs the table's dimension and facet count");
  const int codim = t.num_facets - t.dim;
  for (const auto& [key, v] : t.entries)
    if (t.at(codim - key.first, t.num_facets - key.second) != v) return false;
  return true;
}

std::optional<std::pair<int, int>> identify_simplex_polygon_product(const BettiTable& t) {
  const auto r = recognize_table(t);
  if (r.kind != Recognition::Kind::SimplexPolygonProduct) return std::nullopt;
  return std::make_pair(r.n, r.m);
}

Recognition recognize_table(const BettiTable& t) {
  Recognition r;
  if (!t.has_metadata()) return r;
  // The metadata fixes the only candidate: dim n+2 and d - dim = m + 1.
  const int n = t.dim - 2;
  const int m = t.num_facets - t.dim - 1;
  if (n >= 1 && m >= 1 && t == product_table(simplex_closed_form(n), polygon_closed_form(m))) {
    r.kind = Recognition::Kind::SimplexPolygonProduct;
    r.n = n;
    r.m = m;
    return r;
  }
  if (t.num_facets == t.dim + 1 && t == simplex_closed_form(t.dim)) {
    r.kind = Recognition::Kind::Simplex;
    r.n = t.dim;
    return r;
  }
  if (t.dim == 2 && t.num_facets >= 3 && t == polygon_closed_form(t.num_facets - 2)) {
    r.kind = Recognition::Kind::Polygon;
    r.m = t.num_facets - 2;
  }
  return r;
}

}  // namespace qtoric
