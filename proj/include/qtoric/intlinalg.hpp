#pragma once

// Exact integer and rational linear algebra used throughout: determinants,
// Hermite and Smith forms, kernels and inertia of symmetric forms.

#include "qtoric/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qtoric {

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Rank over the rationals of a small matrix with machine-word entries.
/// Runs Bareiss elimination in 64-bit arithmetic with overflow detection and
/// falls back to arbitrary precision when an intermediate minor does not fit.
std::size_t rank_small(std::vector<std::vector<std::int64_t>> rows, std::size_t cols);

/// Row-style Hermite normal form: nonzero rows only, strictly increasing
/// pivot columns, positive pivots, entries above each pivot reduced into
/// [0, pivot).
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
  bool all_pivots_unit() const;
  bool is_pivot(std::size_t c) const;
};

Echelon hermite_form(std::vector<std::vector<Integer>> rows, std::size_t cols);

/// Reduces v to the canonical representative of v + lattice: each pivot
/// coordinate ends up in [0, pivot). The result is zero iff v lies in the lattice.
void reduce_against(const Echelon& e, std::vector<Integer>& v);

/// Nonzero invariant factors (Smith normal form diagonal), ascending by
/// divisibility.
std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> rows,
                                       std::size_t cols);

/// Inverse of a matrix with determinant +1 or -1.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m);

/// Basis of the rational right kernel {x : m x = 0}, each vector scaled to a
/// primitive integer vector whose last nonzero entry is positive.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
};

/// Inertia of a symmetric integer matrix by exact congruence diagonalization.
Inertia inertia(const IntMatrix& symmetric);

}  // namespace qtoric
