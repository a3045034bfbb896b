#include "qtoric/intlinalg.hpp"

#include "qtoric/error.hpp"

#include <algorithm>
#include <utility>

namespace qtoric {

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

RationalRows to_rational(const IntMatrix& m) {
  RationalRows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = Rational(m(r, c));
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct Overflow {};

// Bareiss rank on machine words; throws Overflow when a minor leaves int64.
std::size_t bareiss_rank_i64(std::vector<std::vector<std::int64_t>>& m, std::size_t cols) {
  std::size_t r = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const __int128 piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const __int128 lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 a = piv * m[i][j];
        __int128 b = lead * m[r][j];
        __int128 v = (a - b) / prev;
        if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
        m[i][j] = static_cast<std::int64_t>(v);
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

Integer determinant(const IntMatrix& input) {
  require(input.rows() == input.cols(), ErrorKind::InvalidParameter,
          "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_small(std::vector<std::vector<std::int64_t>> rows, std::size_t cols) {
  auto copy = rows;
  try {
    return bareiss_rank_i64(rows, cols);
  } catch (const Overflow&) {
    IntMatrix m(copy.size(), cols);
    for (std::size_t r = 0; r < copy.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = copy[r][c];
    return rank(m);
  }
}

bool Echelon::all_pivots_unit() const {
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k][pivots[k]] != 1) return false;
  return true;
}

bool Echelon::is_pivot(std::size_t c) const {
  return std::binary_search(pivots.begin(), pivots.end(), c);
}

Echelon hermite_form(std::vector<std::vector<Integer>> a, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      std::swap(a[best], a[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& v : a[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      Integer q = floor_div(a[i][c], a[r][c]);
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

void reduce_against(const Echelon& e, std::vector<Integer>& v) {
  require(v.size() == e.cols, ErrorKind::Internal, "reduction vector length mismatch");
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const std::size_t c = e.pivots[k];
    if (v[c] == 0) continue;
    Integer q = floor_div(v[c], e.rows[k][c]);
    if (q == 0) continue;
    const auto& row = e.rows[k];
    for (std::size_t j = c; j < e.cols; ++j)
      if (row[j] != 0) v[j] -= q * row[j];
  }
}

std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return diag;
      std::swap(a[bi], a[t]);
      for (auto& row : a) std::swap(row[bj], row[t]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidParameter, "inverse of a non-square matrix");
  if (abs(determinant(m)) != 1) return std::nullopt;
  const std::size_t n = m.rows();
  RationalRows aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(m(r, c));
    aug[r][n + r] = 1;
  }
  rref(aug, 2 * n);
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = aug[r][n + c];
      require(denominator(v) == 1, ErrorKind::Internal, "non-integral unimodular inverse");
      inv(r, c) = numerator(v);
    }
  return inv;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  RationalRows a = to_rational(m);
  const auto pivots = rref(a, m.cols());
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
    std::vector<Rational> x(m.cols());
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][free];
    Integer lcm = 1;
    for (const auto& v : x) {
      const Integer d = denominator(v);
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Integer> xi(m.cols());
    Integer g = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      xi[j] = numerator(Rational(x[j] * lcm));
      g = gcd(g, xi[j]);
    }
    if (g > 1)
      for (auto& v : xi) v /= g;
    auto last = std::find_if(xi.rbegin(), xi.rend(), [](const Integer& v) { return v != 0; });
    if (last != xi.rend() && *last < 0)
      for (auto& v : xi) v = -v;
    basis.push_back(std::move(xi));
  }
  return basis;
}

Inertia inertia(const IntMatrix& s) {
  require(s.rows() == s.cols(), ErrorKind::InvalidParameter, "inertia of a non-square matrix");
  require(s == s.transpose(), ErrorKind::InvalidParameter, "inertia of a non-symmetric matrix");
  RationalRows a = to_rational(s);
  const std::size_t n = s.rows();
  Inertia out;
  // Congruence a -> E a E^T; block k is eliminated once a[k][k] != 0.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) ++p;
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && a[k][q] == 0) ++q;
        if (q == n) {
          ++out.zero;
          continue;
        }
        // a[k][k] = a[q][q] = 0, a[k][q] != 0: adding row q makes 2 a[k][q].
        add_multiple(k, q, Rational(1));
      }
    }
    const Rational piv = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      add_multiple(i, k, -a[i][k] / piv);
    }
    if (piv > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  return out;
}

}  // namespace qtoric
