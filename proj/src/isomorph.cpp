#include "qtoric/isomorph.hpp"

#include "qtoric/error.hpp"
#include "qtoric/intlinalg.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace qtoric {

namespace {

void check_map_shape(const RingMap& m) {
  require(m.source && m.target, ErrorKind::InvalidParameter, "ring map needs both rings");
  require(m.matrix.rows() == m.source->ngens() && m.matrix.cols() == m.target->ngens(),
          ErrorKind::InvalidParameter,
          "map matrix must be " + std::to_string(m.source->ngens()) + " x " +
              std::to_string(m.target->ngens()));
}

bool same_hilbert(const GradedRing& a, const GradedRing& b) {
  const auto& ha = a.hilbert();
  const auto& hb = b.hilbert();
  return ha.ranks == hb.ranks && ha.torsion == hb.torsion && ha.truncated == hb.truncated;
}

Polynomial linear_image(const std::vector<Integer>& row) { return Polynomial::linear(row); }

// Support of a polynomial as a variable mask.
std::vector<bool> support(const Polynomial& p) {
  std::vector<bool> s(p.nvars(), false);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s[i] = true;
  return s;
}

}  // namespace

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Ok: return "ok";
    case IsoStatus::ShapeMismatch: return "shape-mismatch";
    case IsoStatus::NotUnimodular: return "not-unimodular";
    case IsoStatus::RelationNotMapped: return "relation-not-mapped";
    case IsoStatus::HilbertMismatch: return "hilbert-mismatch";
  }
  return "?";
}

std::vector<Polynomial> generator_images(const RingMap& m) {
  check_map_shape(m);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) out.push_back(linear_image(m.matrix.row(i)));
  return out;
}

Polynomial apply_map(const RingMap& m, const Polynomial& p) {
  return m.target->reduce(p.substitute(generator_images(m)));
}

RingMap compose(const RingMap& a, const RingMap& b) {
  check_map_shape(a);
  check_map_shape(b);
  require(a.target == b.source || same_presentation(*a.target, *b.source),
          ErrorKind::InvalidParameter, "maps are not composable");
  return {a.source, b.target, a.matrix * b.matrix};
}

IsoResult verify_iso(const RingMap& m) {
  check_map_shape(m);
  IsoResult res;
  if (m.matrix.rows() != m.matrix.cols()) {
    res.status = IsoStatus::ShapeMismatch;
    res.message = "generator counts differ (" + std::to_string(m.matrix.rows()) + " vs " +
                  std::to_string(m.matrix.cols()) + ")";
    return res;
  }
  res.determinant = determinant(m.matrix);
  if (abs(res.determinant) != 1) {
    res.status = IsoStatus::NotUnimodular;
    res.message = "determinant " + res.determinant.str();
    return res;
  }
  const auto images = generator_images(m);
  const auto& rels = m.source->relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    res.reduced_images.push_back(m.target->reduce(rels[r].substitute(images)));
    if (!res.reduced_images.back().is_zero() && !res.failed_relation) res.failed_relation = r;
  }
  if (res.failed_relation) {
    res.status = IsoStatus::RelationNotMapped;
    res.message = "relation " + std::to_string(*res.failed_relation + 1) + " (" +
                  rels[*res.failed_relation].to_string(m.source->generators()) +
                  ") maps to " +
                  res.reduced_images[*res.failed_relation].to_string(m.target->generators());
    return res;
  }
  if (!same_hilbert(*m.source, *m.target)) {
    res.status = IsoStatus::HilbertMismatch;
    res.message = "Hilbert functions differ";
    return res;
  }
  return res;
}

std::vector<IntMatrix> search_iso(const RingPtr& r1, const RingPtr& r2,
                                  const SearchOptions& opts) {
  require(opts.bound >= 1, ErrorKind::InvalidParameter, "search bound must be at least 1");
  require(r1 && r2, ErrorKind::InvalidParameter, "search needs two rings");
  const std::size_t g = r1->ngens();
  if (g != r2->ngens() || !same_hilbert(*r1, *r2)) return {};

  const auto& rels = r1->relations();
  std::vector<std::vector<bool>> supp;
  for (const auto& r : rels) supp.push_back(support(r));

  // Greedy row order: take the generator completing the most relations.
  std::vector<std::size_t> order;
  std::vector<bool> assigned(g, false);
  while (order.size() < g) {
    std::size_t best = g;
    long best_done = -1, best_touch = -1;
    for (std::size_t v = 0; v < g; ++v) {
      if (assigned[v]) continue;
      long done = 0, touch = 0;
      for (const auto& s : supp) {
        if (!s[v]) continue;
        ++touch;
        bool complete = true;
        for (std::size_t u = 0; u < g; ++u)
          if (s[u] && !assigned[u] && u != v) complete = false;
        if (complete) ++done;
      }
      if (done > best_done || (done == best_done && touch > best_touch)) {
        best = v;
        best_done = done;
        best_touch = touch;
      }
    }
    assigned[best] = true;
    order.push_back(best);
  }
  // Relations checked once their last generator (in search order) is set.
  std::vector<std::vector<std::size_t>> check_at(g);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::size_t last = 0;
    for (std::size_t pos = 0; pos < g; ++pos)
      if (supp[r][order[pos]]) last = pos;
    check_at[last].push_back(r);
  }

  // Candidate rows: nonzero vectors in [-B, B]^g.
  const long long b = opts.bound;
  std::vector<std::vector<long long>> cands;
  {
    std::vector<long long> cur(g, -b);
    for (;;) {
      if (std::any_of(cur.begin(), cur.end(), [](long long x) { return x != 0; }))
        cands.push_back(cur);
      std::size_t i = g;
      while (i > 0 && cur[i - 1] == b) cur[--i] = -b;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  auto sign_ok = [](const std::vector<long long>& row) {
    for (long long x : row)
      if (x != 0) return x > 0;
    return false;
  };

  std::mutex mu;
  std::vector<IntMatrix> found;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    std::vector<std::vector<long long>> rows(g);
    std::vector<Polynomial> images(g, Polynomial(g));
    std::vector<IntMatrix> local;

    auto independent = [&](std::size_t depth) {
      std::vector<std::vector<std::int64_t>> m;
      for (std::size_t p = 0; p <= depth; ++p)
        m.emplace_back(rows[order[p]].begin(), rows[order[p]].end());
      return rank_small(std::move(m), g) == depth + 1;
    };
    auto relations_ok = [&](std::size_t depth) {
      for (std::size_t r : check_at[depth])
        if (!r2->normal_form(rels[r].substitute(images)).is_zero()) return false;
      return true;
    };
    auto place = [&](std::size_t depth, const std::vector<long long>& c) {
      const std::size_t v = order[depth];
      if (v == 0 && !sign_ok(c)) return false;
      rows[v] = c;
      std::vector<Integer> ci(c.begin(), c.end());
      images[v] = linear_image(ci);
      return independent(depth) && relations_ok(depth);
    };
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
      if (depth == g) {
        IntMatrix mat(g, g);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) mat(i, j) = rows[i][j];
        if (abs(determinant(mat)) == 1) local.push_back(std::move(mat));
        return;
      }
      for (const auto& c : cands) {
        if (place(depth, c)) self(self, depth + 1);
      }
      images[order[depth]] = Polynomial(g);
    };

    for (std::size_t i = next++; i < cands.size(); i = next++) {
      if (place(0, cands[i])) dfs(dfs, 1);
      images[order[0]] = Polynomial(g);
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& m : local) found.push_back(std::move(m));
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(found.begin(), found.end());
  // Hilbert functions agree and relations map into the ideal, so every
  // unimodular survivor is an isomorphism; assert it anyway.
  for (const auto& m : found)
    require(verify_iso({r1, r2, m}).ok(), ErrorKind::Internal,
            "search produced a map that fails verification");
  return found;
}

BasePreservationReport base_preservation(const IntMatrix& map, std::size_t fiber_source,
                                         std::size_t fiber_target) {
  require(fiber_source < map.rows() && fiber_target < map.cols(), ErrorKind::InvalidParameter,
          "fiber index out of range");
  BasePreservationReport rep;
  rep.fiber_coefficient = map(fiber_source, fiber_target);
  for (std::size_t i = 0; i < map.rows(); ++i) {
    if (i == fiber_source || map(i, fiber_target) == 0) continue;
    rep.violations.push_back({i, fiber_target, map(i, fiber_target)});
  }
  rep.preserved = rep.violations.empty() && abs(rep.fiber_coefficient) == 1;
  return rep;
}

BasePreservationReport base_preservation(const RingMap& m) {
  check_map_shape(m);
  require(m.source->fiber_index() && m.target->fiber_index(), ErrorKind::InvalidParameter,
          "base preservation needs fiber bookkeeping on both rings");
  return base_preservation(m.matrix, *m.source->fiber_index(), *m.target->fiber_index());
}

std::vector<AutomorphismCandidate> fiber_automorphisms(const BundleSpec& s) {
  check_spec(s);
  const GradedRing& base = *s.base;
  const auto alphas = first_chern_classes(s);
  const auto n = static_cast<std::size_t>(s.fiber_dim());
  const std::size_t m = base.ngens();
  auto proj = std::make_shared<const GradedRing>(projectivization_ring(s));

  auto product = [&](const Polynomial& shift, int sign) {
    Polynomial acc = base.one() + shift;
    for (const auto& a : alphas) acc = base.reduce(acc * (base.one() + shift + a * Integer(sign)));
    return acc;
  };
  Polynomial chern = base.one();
  for (const auto& a : alphas) chern = base.reduce(chern * (base.one() + a));

  auto ring_map = [&](int eps, const std::vector<Integer>& omega) {
    IntMatrix p = IntMatrix::identity(m + 1);
    p(0, 0) = eps;
    for (std::size_t j = 0; j < m; ++j) p(0, j + 1) = omega[j];
    return p;
  };

  std::vector<AutomorphismCandidate> out;
  {
    AutomorphismCandidate id;
    id.epsilon = 1;
    id.omega = base.zero();
    id.lhs = chern;
    id.rhs = chern;
    id.identity_holds = true;
    id.ring_map = ring_map(1, std::vector<Integer>(m));
    id.ring_map_verified = verify_iso({proj, proj, id.ring_map}).ok();
    out.push_back(std::move(id));
  }

  // omega = -(2/(n+1)) sum alpha_i must be integral.
  std::vector<Integer> sum(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) sum[j] += s.twists(i, j);
  std::vector<Integer> omega(m);
  const Integer den = static_cast<long long>(n + 1);
  for (std::size_t j = 0; j < m; ++j) {
    const Integer num = -2 * sum[j];
    if (num % den != 0) return out;
    omega[j] = num / den;
  }
  AutomorphismCandidate neg;
  neg.epsilon = -1;
  neg.omega = Polynomial::linear(omega);
  neg.lhs = product(-neg.omega, -1);
  neg.rhs = chern;
  neg.identity_holds = neg.lhs == neg.rhs;
  if (!neg.identity_holds) return out;
  neg.ring_map = ring_map(-1, omega);
  neg.ring_map_verified = verify_iso({proj, proj, neg.ring_map}).ok();
  out.push_back(std::move(neg));
  return out;
}

ClassPreservationReport pairing_congruence(const RingMap& m) {
  check_map_shape(m);
  ClassPreservationReport rep;
  const GradedRing& a = *m.source;
  const GradedRing& b = *m.target;
  auto generator_basis = [](const GradedRing& r) {
    const auto basis = r.standard_monomials(1);
    if (basis.size() != r.ngens()) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] != Polynomial::variable(r.ngens(), i).terms().begin()->first) return false;
    return true;
  };
  if (a.top_degree() != 2 || b.top_degree() != 2 || !generator_basis(a) || !generator_basis(b))
    return rep;
  rep.g1 = poincare_pairing(a).matrix;
  rep.g2 = poincare_pairing(b).matrix;
  rep.transported = m.matrix * rep.g2 * m.matrix.transpose();
  if (rep.transported == rep.g1)
    rep.pairing_sign = 1;
  else if (rep.transported == rep.g1.negated())
    rep.pairing_sign = -1;
  rep.pairing_congruent = rep.pairing_sign != 0;
  return rep;
}

ClassPreservationReport characteristic_class_preservation(const RingMap& m, const ClassData& c1,
                                                          const ClassData& c2) {
  check_map_shape(m);
  require((c1.w && c2.w) || (c1.p && c2.p), ErrorKind::InvalidParameter,
          "class data missing: need w or p for both rings");
  ClassPreservationReport rep = pairing_congruence(m);
  if (c1.w && c2.w) {
    require(c1.w->size() == c2.w->size(), ErrorKind::InvalidParameter,
            "Stiefel-Whitney data have different lengths");
    bool ok = true;
    for (std::size_t k = 0; k < c1.w->size(); ++k)
      ok = ok && m.target->equal_mod2(apply_map(m, (*c1.w)[k]), (*c2.w)[k]);
    rep.w_preserved = ok;
  }
  if (c1.p && c2.p) {
    require(c1.p->size() == c2.p->size(), ErrorKind::InvalidParameter,
            "Pontryagin data have different lengths");
    bool ok = true;
    for (std::size_t k = 0; k < c1.p->size(); ++k)
      ok = ok && apply_map(m, (*c1.p)[k]) == m.target->reduce((*c2.p)[k]);
    rep.p_preserved = ok;
  }
  return rep;
}

}  // namespace qtoric
