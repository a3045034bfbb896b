#include "qtoric/bundles.hpp"

#include "qtoric/error.hpp"

#include <algorithm>

namespace qtoric {

namespace {

using Rows = std::vector<std::vector<Integer>>;

// Rows 0..n with the implicit trivial summand at index 0.
Rows summand_rows(const IntMatrix& twists) {
  Rows rows{std::vector<Integer>(twists.cols())};
  for (std::size_t i = 0; i < twists.rows(); ++i) rows.push_back(twists.row(i));
  return rows;
}

Rows moved_rows(const Rows& all, const TwistMove& move) {
  Rows out;
  const auto& shift = all[static_cast<std::size_t>(move.translate_row)];
  for (const auto& row : all) {
    std::vector<Integer> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      r[j] = row[j] - shift[j];
      if (move.negate) r[j] = -r[j];
    }
    out.push_back(std::move(r));
  }
  return out;
}

void check_move(const IntMatrix& twists, const TwistMove& move) {
  require(move.translate_row >= 0 && move.translate_row <= static_cast<int>(twists.rows()),
          ErrorKind::InvalidParameter, "twist move row out of range");
}

}  // namespace

void check_spec(const BundleSpec& s) {
  require(s.base != nullptr, ErrorKind::InvalidParameter, "bundle spec has no base ring");
  require(s.twists.rows() >= 1, ErrorKind::InvalidParameter,
          "bundle spec needs at least one line bundle");
  require(s.twists.cols() == s.base->ngens(), ErrorKind::InvalidParameter,
          "twist matrix has " + std::to_string(s.twists.cols()) + " columns but the base has " +
              std::to_string(s.base->ngens()) + " generators");
}

BundleSpec spec_from_summands(RingPtr base, const IntMatrix& summands) {
  require(summands.rows() >= 2, ErrorKind::InvalidParameter,
          "need the trivial summand plus at least one line bundle");
  IntMatrix twists(summands.rows() - 1, summands.cols());
  for (std::size_t i = 1; i < summands.rows(); ++i)
    for (std::size_t j = 0; j < summands.cols(); ++j)
      twists(i - 1, j) = summands(i, j) - summands(0, j);
  BundleSpec s{std::move(base), std::move(twists)};
  check_spec(s);
  return s;
}

std::vector<Polynomial> first_chern_classes(const BundleSpec& s) {
  check_spec(s);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < s.twists.rows(); ++i)
    out.push_back(Polynomial::linear(s.twists.row(i)));
  return out;
}

std::vector<Polynomial> total_chern(const BundleSpec& s) {
  const auto alphas = first_chern_classes(s);
  const GradedRing& r = *s.base;
  Polynomial c = r.one();
  for (const auto& a : alphas) c = r.reduce(c * (r.one() + a));
  std::vector<Polynomial> out;
  for (int k = 0; k <= s.fiber_dim(); ++k) out.push_back(c.homogeneous_part(k));
  return out;
}

GradedRing projectivization_ring(const BundleSpec& s, const std::string& fiber_name) {
  check_spec(s);
  const GradedRing& base = *s.base;
  const std::size_t m = base.ngens();
  const std::size_t g = m + 1;
  std::vector<std::string> names{fiber_name};
  for (const auto& n : base.generators()) {
    require(n != fiber_name, ErrorKind::InvalidParameter,
            "fiber generator name '" + fiber_name + "' clashes with a base generator");
    names.push_back(n);
  }
  // Base variable j becomes j + 1.
  std::vector<Polynomial> lift;
  for (std::size_t j = 0; j < m; ++j) lift.push_back(Polynomial::variable(g, j + 1));
  const Polynomial x0 = Polynomial::variable(g, 0);

  Polynomial rel = x0;
  for (const auto& a : first_chern_classes(s)) rel = rel * (x0 + a.substitute(lift));
  std::vector<Polynomial> relations{rel};
  for (const auto& br : base.relations()) relations.push_back(br.substitute(lift));
  return GradedRing(std::move(names), std::move(relations), 0);
}

IntMatrix apply_twist_move(const IntMatrix& twists, const TwistMove& move) {
  check_move(twists, move);
  const Rows moved = moved_rows(summand_rows(twists), move);
  IntMatrix out(twists.rows(), twists.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    if (static_cast<int>(i) == move.translate_row) continue;
    for (std::size_t j = 0; j < twists.cols(); ++j) out(r, j) = moved[i][j];
    ++r;
  }
  return out;
}

IntMatrix twist_move_map(const IntMatrix& twists, const TwistMove& move) {
  check_move(twists, move);
  const std::size_t m = twists.cols();
  IntMatrix p = IntMatrix::identity(m + 1);
  if (move.negate) p(0, 0) = -1;
  if (move.translate_row > 0)
    for (std::size_t j = 0; j < m; ++j)
      p(0, j + 1) = -twists(static_cast<std::size_t>(move.translate_row - 1), j);
  return p;
}

TwistMove normalizing_move(const IntMatrix& twists) {
  const Rows all = summand_rows(twists);
  TwistMove best_move;
  Rows best;
  bool have = false;
  for (int k = 0; k < static_cast<int>(all.size()); ++k)
    for (bool neg : {false, true}) {
      TwistMove mv{k, neg};
      Rows cand = moved_rows(all, mv);
      std::sort(cand.begin(), cand.end());
      if (!have || cand < best) {
        best = std::move(cand);
        best_move = mv;
        have = true;
      }
    }
  return best_move;
}

IntMatrix normalize_twists(const IntMatrix& twists) {
  Rows cand = moved_rows(summand_rows(twists), normalizing_move(twists));
  std::sort(cand.begin(), cand.end());
  const std::vector<Integer> zero(twists.cols());
  cand.erase(std::find(cand.begin(), cand.end(), zero));
  return IntMatrix::from_rows(cand, twists.cols());
}

bool same_presentation(const GradedRing& a, const GradedRing& b) {
  return a.generators() == b.generators() && a.relations() == b.relations();
}

bool chern_isomorphic(const BundleSpec& a, const BundleSpec& b) {
  check_spec(a);
  check_spec(b);
  require(a.base == b.base || same_presentation(*a.base, *b.base), ErrorKind::InvalidParameter,
          "bundle specs have different base rings");
  require(a.fiber_dim() == b.fiber_dim(), ErrorKind::InvalidParameter,
          "bundle specs have different fiber dimensions");
  const int base_dim = 2 * a.base->top_degree();
  require(2 * (a.fiber_dim() + 1) >= base_dim, ErrorKind::Precondition,
          "rank " + std::to_string(a.fiber_dim() + 1) +
              " is below the stable range for a base of real dimension " +
              std::to_string(base_dim));
  return total_chern(a) == total_chern(b);
}

}  // namespace qtoric
