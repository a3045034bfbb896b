#include "qtoric/polynomial.hpp"

#include "qtoric/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtoric {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;  // generated in descending lex order already
}

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  require(index < nvars, ErrorKind::InvalidParameter, "variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return term(m, 1);
}

Polynomial Polynomial::term(const Monomial& m, const Integer& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(const std::vector<Integer>& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  return out;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Integer> Polynomial::linear_coefficients() const {
  std::vector<Integer> out(nvars_);
  for (const auto& [m, c] : terms_) {
    require(monomial_degree(m) == 1, ErrorKind::InvalidParameter,
            "expected a homogeneous linear polynomial");
    out[std::find(m.begin(), m.end(), 1) - m.begin()] = c;
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  require(m.size() == nvars_, ErrorKind::InvalidParameter, "monomial has wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require(o.nvars_ == nvars_, ErrorKind::InvalidParameter, "polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require(o.nvars_ == nvars_, ErrorKind::InvalidParameter, "polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.nvars_ == b.nvars_, ErrorKind::InvalidParameter, "polynomial variable counts differ");
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  require(e >= 0, ErrorKind::InvalidParameter, "negative polynomial power");
  Polynomial result = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  require(images.size() == nvars_, ErrorKind::InvalidParameter,
          "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    require(im.nvars() == target, ErrorKind::InvalidParameter, "substitution images disagree");
  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t = t * power(i, m[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::mod2() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (c % 2 != 0) out.terms_.emplace(m, 1);
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool is_const = monomial_degree(m) == 0;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || is_const) os << mag;
    bool need_sep = mag != 1 && !is_const;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (need_sep) os << '*';
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m[i] > 1) os << '^' << m[i];
      need_sep = true;
    }
  }
  return os.str();
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return GrlexGreater{}(x.first, y.first);
        return x.second < y.second;
      });
}

}  // namespace qtoric
