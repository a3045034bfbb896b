#include "qtoric/cohomring.hpp"

#include "qtoric/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

int distinct_variables(const Monomial& m) {
  return static_cast<int>(std::count_if(m.begin(), m.end(), [](int e) { return e > 0; }));
}

}  // namespace

GradedRing::GradedRing(std::vector<std::string> generators, std::vector<Polynomial> relations,
                       std::optional<std::size_t> fiber_index)
    : GradedRing(std::move(generators), std::move(relations), fiber_index, Options{}) {}

GradedRing::GradedRing(std::vector<std::string> generators, std::vector<Polynomial> relations,
                       std::optional<std::size_t> fiber_index, Options opts)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      fiber_index_(fiber_index) {
  const std::size_t g = generators_.size();
  require(g >= 1, ErrorKind::InvalidParameter, "a ring needs at least one generator");
  require(opts.max_degree >= 1, ErrorKind::InvalidParameter, "max_degree must be positive");
  if (fiber_index_)
    require(*fiber_index_ < g, ErrorKind::InvalidParameter, "fiber index out of range");
  {
    std::set<std::string> seen(generators_.begin(), generators_.end());
    require(seen.size() == g, ErrorKind::InvalidParameter, "duplicate generator names");
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& rel = relations_[r];
    require(rel.nvars() == g, ErrorKind::InvalidParameter,
            "relation " + std::to_string(r + 1) + " has the wrong variable count");
    require(!rel.is_zero(), ErrorKind::InvalidParameter,
            "relation " + std::to_string(r + 1) + " is zero");
    require(rel.is_homogeneous(), ErrorKind::InvalidParameter,
            "relation " + std::to_string(r + 1) + " is not homogeneous");
    require(rel.degree() >= 1, ErrorKind::InvalidParameter,
            "relation " + std::to_string(r + 1) + " is a constant");
  }

  for (int k = 0; k <= opts.max_degree; ++k) {
    DegreeTable t;
    t.monomials = monomials_of_degree(g, k);
    for (std::size_t i = 0; i < t.monomials.size(); ++i) t.index.emplace(t.monomials[i], i);
    const std::size_t n = t.monomials.size();

    std::vector<std::vector<Integer>> rows;
    if (k > 0) {
      // I_k = sum_i x_i I_{k-1} + span of the degree-k relations.
      const DegreeTable& prev = tables_.back();
      for (const auto& prow : prev.ideal.rows)
        for (std::size_t v = 0; v < g; ++v) {
          std::vector<Integer> row(n);
          for (std::size_t c = 0; c < prow.size(); ++c) {
            if (prow[c] == 0) continue;
            Monomial m = prev.monomials[c];
            ++m[v];
            row[t.index.at(m)] = prow[c];
          }
          rows.push_back(std::move(row));
        }
      for (const auto& rel : relations_) {
        if (rel.degree() != k) continue;
        std::vector<Integer> row(n);
        for (const auto& [m, c] : rel.terms()) row[t.index.at(m)] = c;
        rows.push_back(std::move(row));
      }
    }
    t.ideal = hermite_form(std::move(rows), n);

    std::vector<std::vector<Integer>> mod2_rows = t.ideal.rows;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Integer> row(n);
      row[c] = 2;
      mod2_rows.push_back(std::move(row));
    }
    t.ideal_mod2 = hermite_form(std::move(mod2_rows), n);

    const std::size_t rank = n - t.ideal.rank();
    std::vector<Integer> tors;
    if (!t.ideal.all_pivots_unit())
      for (const auto& f : invariant_factors(t.ideal.rows, n))
        if (f > 1) tors.push_back(f);
    if (!tors.empty()) hilbert_.torsion.emplace(2 * k, tors);
    tables_.push_back(std::move(t));

    if (rank == 0) {
      vanishes_beyond_ = tors.empty();
      hilbert_.truncated = !tors.empty();
      break;
    }
    hilbert_.ranks.push_back(rank);
    if (k == opts.max_degree) hilbert_.truncated = true;
  }

  // Fundamental-class functional.
  const int top = top_degree();
  if (top >= 0 && hilbert_.ranks[top] == 1 && !hilbert_.has_torsion() && !hilbert_.truncated) {
    const DegreeTable& t = tables_[top];
    std::vector<Integer> f;
    if (t.ideal.rank() == 0) {
      f = {1};
    } else {
      auto ker = kernel_basis(IntMatrix::from_rows(t.ideal.rows, t.monomials.size()));
      require(ker.size() == 1, ErrorKind::Internal, "top-degree kernel is not one-dimensional");
      f = ker.front();
    }
    // Reference monomial: most distinct variables, then graded-lex smallest.
    std::size_t best = t.monomials.size();
    for (std::size_t i = 0; i < t.monomials.size(); ++i) {
      if (f[i] == 0) continue;
      if (best == t.monomials.size() ||
          distinct_variables(t.monomials[i]) >= distinct_variables(t.monomials[best]))
        best = i;  // later monomials are graded-lex smaller
    }
    require(best < t.monomials.size(), ErrorKind::Internal, "zero fundamental functional");
    if (f[best] < 0)
      for (auto& v : f) v = -v;
    top_functional_ = std::move(f);
  }
}

const GradedRing::DegreeTable* GradedRing::table_for(int k) const {
  if (k < 0) return nullptr;
  if (k < static_cast<int>(tables_.size())) return &tables_[k];
  if (vanishes_beyond_) return nullptr;
  fail(ErrorKind::ResourceLimit, "degree " + std::to_string(k) +
                                     " exceeds the precomputed range (up to " +
                                     std::to_string(computed_degree()) + ")");
}

std::vector<Integer> GradedRing::coordinates(const Polynomial& p, const DegreeTable& t) const {
  std::vector<Integer> v(t.monomials.size());
  for (const auto& [m, c] : p.terms()) v[t.index.at(m)] = c;
  return v;
}

Polynomial GradedRing::from_coordinates(const std::vector<Integer>& v,
                                        const DegreeTable& t) const {
  Polynomial p(ngens());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add_term(t.monomials[i], v[i]);
  return p;
}

Polynomial GradedRing::normal_form(const Polynomial& p) const {
  require(p.nvars() == ngens(), ErrorKind::InvalidParameter,
          "polynomial has the wrong variable count for this ring");
  require(p.is_homogeneous(), ErrorKind::InvalidParameter,
          "normal_form expects a homogeneous polynomial");
  if (p.is_zero()) return p;
  const DegreeTable* t = table_for(p.degree());
  if (!t) return zero();
  auto v = coordinates(p, *t);
  reduce_against(t->ideal, v);
  return from_coordinates(v, *t);
}

Polynomial GradedRing::reduce(const Polynomial& p) const {
  Polynomial out(ngens());
  for (int k = 0; k <= p.degree(); ++k) {
    auto part = p.homogeneous_part(k);
    if (!part.is_zero()) out += normal_form(part);
  }
  return out;
}

Polynomial GradedRing::normal_form_mod2(const Polynomial& p) const {
  require(p.nvars() == ngens(), ErrorKind::InvalidParameter,
          "polynomial has the wrong variable count for this ring");
  Polynomial out(ngens());
  for (int k = 0; k <= p.degree(); ++k) {
    auto part = p.homogeneous_part(k);
    if (part.is_zero()) continue;
    const DegreeTable* t = table_for(k);
    if (!t) continue;
    auto v = coordinates(part, *t);
    reduce_against(t->ideal_mod2, v);
    out += from_coordinates(v, *t);
  }
  return out;
}

bool GradedRing::equal_mod2(const Polynomial& a, const Polynomial& b) const {
  return normal_form_mod2(a - b).is_zero();
}

std::vector<Monomial> GradedRing::standard_monomials(int k) const {
  const DegreeTable* t = table_for(k);
  if (!t) return {};
  std::vector<Monomial> out;
  for (std::size_t c = 0; c < t->monomials.size(); ++c)
    if (!t->ideal.is_pivot(c)) out.push_back(t->monomials[c]);
  return out;
}

bool GradedRing::unit_pivots(int k) const {
  const DegreeTable* t = table_for(k);
  return !t || t->ideal.all_pivots_unit();
}

Integer GradedRing::evaluate_top(const Polynomial& p) const {
  require(!top_functional_.empty(), ErrorKind::InvalidRing,
          "ring has no fundamental class (top rank must be 1 without torsion)");
  const DegreeTable& t = tables_[top_degree()];
  const Polynomial top = p.homogeneous_part(top_degree());
  Integer sum = 0;
  for (const auto& [m, c] : top.terms())
    sum += c * top_functional_[t.index.at(m)];
  return sum;
}

Monomial GradedRing::reference_monomial() const {
  require(!top_functional_.empty(), ErrorKind::InvalidRing,
          "ring has no fundamental class (top rank must be 1 without torsion)");
  const DegreeTable& t = tables_[top_degree()];
  std::size_t best = t.monomials.size();
  for (std::size_t i = 0; i < t.monomials.size(); ++i) {
    if (top_functional_[i] == 0) continue;
    if (best == t.monomials.size() ||
        distinct_variables(t.monomials[i]) >= distinct_variables(t.monomials[best]))
      best = i;
  }
  return t.monomials[best];
}

std::string GradedRing::to_string() const {
  std::ostringstream os;
  os << "Z[";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << "]/<";
  for (std::size_t i = 0; i < relations_.size(); ++i)
    os << (i ? ", " : "") << relations_[i].to_string(generators_);
  os << ">";
  return os.str();
}

std::vector<Polynomial> stanley_reisner_ideal(const SimplePolytope& p) {
  require_valid(p);
  const std::size_t d = static_cast<std::size_t>(p.num_facets());
  std::vector<Polynomial> out;
  for (const auto& nf : minimal_non_faces(p)) {
    Monomial m(d, 0);
    for (int f : nf) m[f] = 1;
    out.push_back(Polynomial::term(m, 1));
  }
  return out;
}

std::vector<Polynomial> linear_ideal(const CharMatrix& l) {
  require(static_cast<int>(l.entries.cols()) == l.polytope.num_facets() &&
              static_cast<int>(l.entries.rows()) == l.polytope.dim(),
          ErrorKind::InvalidParameter, "matrix shape does not match the polytope");
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < l.entries.rows(); ++r)
    out.push_back(Polynomial::linear(l.entries.row(r)));
  return out;
}

std::vector<Polynomial> facet_classes(const CharMatrix& l) {
  CharMatrix nf;
  try {
    nf = normal_form(l);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotNormalizable) fail(ErrorKind::Precondition, e.what());
    throw;
  }
  const auto n = static_cast<std::size_t>(l.polytope.dim());
  const auto d = static_cast<std::size_t>(l.polytope.num_facets());
  const std::size_t g = d - n;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial v(g);
    for (std::size_t j = n; j < d; ++j) v -= Polynomial::variable(g, j - n) * nf.entries(i, j);
    images.push_back(std::move(v));
  }
  for (std::size_t j = n; j < d; ++j) images.push_back(Polynomial::variable(g, j - n));
  return images;
}

GradedRing present_cohomology(const CharMatrix& l) {
  require_valid(l.polytope);
  const auto ns = check_nonsingular(l.polytope, l.entries);
  require(ns.ok, ErrorKind::Precondition,
          "matrix fails non-singularity at vertex " +
              format_facet_set(ns.failing_vertex, true) + " (det " +
              ns.determinant.str() + ")");
  const auto images = facet_classes(l);
  const auto n = static_cast<std::size_t>(l.polytope.dim());
  const auto d = static_cast<std::size_t>(l.polytope.num_facets());
  std::vector<std::string> names;
  for (std::size_t j = n; j < d; ++j) names.push_back("v" + std::to_string(j + 1));
  std::vector<Polynomial> relations;
  for (const auto& mono : stanley_reisner_ideal(l.polytope)) {
    Polynomial rel = mono.substitute(images);
    if (rel.is_zero()) continue;
    if (std::find(relations.begin(), relations.end(), rel) == relations.end())
      relations.push_back(std::move(rel));
  }
  return GradedRing(std::move(names), std::move(relations));
}

PairingReport poincare_pairing(const GradedRing& r) {
  require(!r.hilbert().has_torsion() && !r.hilbert().truncated, ErrorKind::InvalidRing,
          "pairing needs a torsion-free ring that vanishes in high degree");
  require(r.top_degree() == 2, ErrorKind::InvalidRing,
          "pairing needs top cohomological degree 4, found " +
              std::to_string(2 * r.top_degree()));
  require(r.hilbert().ranks[2] == 1, ErrorKind::InvalidRing,
          "pairing needs top rank 1, found " + std::to_string(r.hilbert().ranks[2]));
  require(r.unit_pivots(1), ErrorKind::InvalidRing, "degree-2 component has no monomial basis");
  PairingReport rep;
  const auto basis = r.standard_monomials(1);
  std::vector<Polynomial> elems;
  for (const auto& m : basis) {
    elems.push_back(Polynomial::term(m, 1));
    rep.basis.push_back(elems.back().to_string(r.generators()));
  }
  rep.matrix = IntMatrix(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Integer v = r.evaluate_top(r.normal_form(elems[i] * elems[j]));
      rep.matrix(i, j) = v;
      rep.matrix(j, i) = v;
    }
  rep.determinant = determinant(rep.matrix);
  rep.signature = inertia(rep.matrix).signature();
  return rep;
}

SignatureP1 signature_p1(const GradedRing& r) {
  const auto rep = poincare_pairing(r);
  return {rep.signature, 3 * rep.signature};
}

namespace {

std::vector<Polynomial> graded_pieces(const Polynomial& p, int top) {
  std::vector<Polynomial> out;
  for (int k = 0; k <= top; ++k) out.push_back(p.homogeneous_part(k));
  return out;
}

void check_ring_matches(const CharMatrix& l, const GradedRing& r) {
  require(static_cast<int>(r.ngens()) == l.polytope.num_facets() - l.polytope.dim(),
          ErrorKind::InvalidParameter, "ring does not belong to this characteristic matrix");
}

}  // namespace

std::vector<Polynomial> total_sw_class(const CharMatrix& l, const GradedRing& r) {
  check_ring_matches(l, r);
  Polynomial w = r.one();
  for (const auto& v : facet_classes(l)) w = r.normal_form_mod2(w * (r.one() + v));
  return graded_pieces(w, r.top_degree());
}

std::vector<Polynomial> total_pontryagin_class(const CharMatrix& l, const GradedRing& r) {
  check_ring_matches(l, r);
  Polynomial p = r.one();
  for (const auto& v : facet_classes(l)) p = r.reduce(p * (r.one() + v * v));
  std::vector<Polynomial> out;
  for (int k = 0; 2 * k <= r.top_degree(); ++k) out.push_back(p.homogeneous_part(2 * k));
  return out;
}

CharacteristicClasses characteristic_classes(const CharMatrix& l, const GradedRing& r) {
  return {total_sw_class(l, r), total_pontryagin_class(l, r)};
}

}  // namespace qtoric
