#pragma once

#include "qtoric/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtoric {

using Monomial = std::vector<int>;  // exponent per generator

int monomial_degree(const Monomial& m);

/// Graded-lexicographic order, larger first: higher total degree wins, ties
/// broken lexicographically on the exponent vector.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of the given degree in `nvars` variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Integer polynomial in a fixed number of variables. Terms are kept in
/// graded-lex order without zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Integer& c);
  /// sum_i coeffs[i] * x_i
  static Polynomial linear(const std::vector<Integer>& coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int degree) const;
  Integer coefficient(const Monomial& m) const;
  /// Linear coefficients of a degree-1 homogeneous polynomial.
  std::vector<Integer> linear_coefficients() const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Integer(-1); }
  Polynomial pow(int e) const;

  /// Replaces x_i by images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Reduces every coefficient into {0, 1}.
  Polynomial mod2() const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace qtoric
