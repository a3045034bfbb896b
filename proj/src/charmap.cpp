#include "qtoric/charmap.hpp"

#include "qtoric/error.hpp"
#include "qtoric/intlinalg.hpp"

#include <algorithm>
#include <set>

namespace qtoric {

namespace {

void require_shape(const SimplePolytope& p, const IntMatrix& l) {
  require(static_cast<int>(l.rows()) == p.dim() && static_cast<int>(l.cols()) == p.num_facets(),
          ErrorKind::InvalidParameter,
          "characteristic matrix is " + std::to_string(l.rows()) + "x" + std::to_string(l.cols()) +
              " but the polytope needs " + std::to_string(p.dim()) + "x" +
              std::to_string(p.num_facets()));
}

std::vector<std::size_t> as_columns(const FacetSet& s) { return {s.begin(), s.end()}; }

void validate_split(const SimplePolytope& p, const ProductSplit& split) {
  require(split.n1 >= 1 && split.n2 >= 1 && split.n1 <= split.d1() && split.n2 <= split.d2() &&
              split.n1 + split.n2 == p.dim() && split.d1() + split.d2() == p.num_facets(),
          ErrorKind::InvalidParameter, "split sizes do not match the polytope");
  std::vector<int> all = split.facets1;
  all.insert(all.end(), split.facets2.begin(), split.facets2.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < p.num_facets(); ++i)
    require(all[i] == i, ErrorKind::InvalidParameter, "split does not partition the facets");
}

// A^{-1} L where A holds the identity-block columns of both factors.
IntMatrix split_normalized(const CharMatrix& l, const ProductSplit& split) {
  validate_split(l.polytope, split);
  require_shape(l.polytope, l.entries);
  std::vector<std::size_t> lead;
  for (int k = 0; k < split.n1; ++k) lead.push_back(split.facets1[k]);
  for (int k = 0; k < split.n2; ++k) lead.push_back(split.facets2[k]);
  auto inv = inverse_unimodular(l.entries.select_columns(lead));
  require(inv.has_value(), ErrorKind::Precondition,
          "identity-block facets of the split do not form a unimodular block");
  return *inv * l.entries;
}

IntMatrix block(const IntMatrix& m, std::size_t r0, std::size_t r1, const std::vector<int>& cols,
                std::size_t c0) {
  IntMatrix out(r1 - r0, cols.size() - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < cols.size(); ++c) out(r - r0, c - c0) = m(r, cols[c]);
  return out;
}

}  // namespace

bool BundleMatrixData::is_bundle() const {
  for (std::size_t r = 0; r < lower.rows(); ++r)
    for (std::size_t c = 0; c < lower.cols(); ++c)
      if (lower(r, c) != 0) return false;
  return true;
}

NonsingularResult check_nonsingular(const SimplePolytope& p, const IntMatrix& lambda) {
  require_shape(p, lambda);
  NonsingularResult res;
  for (const auto& v : p.vertices()) {
    Integer det = determinant(lambda.select_columns(as_columns(v)));
    if (abs(det) != 1) {
      res.ok = false;
      res.failing_vertex = v;
      res.determinant = std::move(det);
      return res;
    }
  }
  return res;
}

CharMatrix normal_form(const CharMatrix& l) {
  require_shape(l.polytope, l.entries);
  const std::size_t n = l.entries.rows();
  std::vector<std::size_t> lead(n);
  for (std::size_t i = 0; i < n; ++i) lead[i] = i;
  const IntMatrix a = l.entries.select_columns(lead);
  auto inv = inverse_unimodular(a);
  if (!inv)
    fail(ErrorKind::NotNormalizable,
         "leading block has determinant " + determinant(a).str() +
             "; reorder facets so the first n share a vertex");
  return {l.polytope, *inv * l.entries};
}

namespace {

// Canonical representative under GL_n(Z) and per-column sign changes.
IntMatrix canonical_form(const CharMatrix& l) {
  const auto& p = l.polytope;
  require(!p.vertices().empty(), ErrorKind::InvalidParameter, "polytope has no vertices");
  const FacetSet& basis = p.vertices().front();
  auto inv = inverse_unimodular(l.entries.select_columns(as_columns(basis)));
  require(inv.has_value(), ErrorKind::InvalidParameter,
          "matrix is singular at vertex " + format_facet_set(basis));
  const IntMatrix normal = *inv * l.entries;
  std::vector<std::size_t> rest;
  for (int f = 0; f < p.num_facets(); ++f)
    if (!std::binary_search(basis.begin(), basis.end(), f)) rest.push_back(f);
  const IntMatrix tail = normal.select_columns(rest);
  const std::size_t n = tail.rows();
  require(n < 20, ErrorKind::ResourceLimit, "sign canonicalization limited to 19 rows");

  std::optional<IntMatrix> best;
  // Row flips come from negating identity columns; the all-flip pattern is
  // absorbed by column canonicalization, so row 0 stays fixed.
  for (std::uint32_t mask = 0; mask < (1u << (n ? n - 1 : 0)); ++mask) {
    IntMatrix cand = tail;
    for (std::size_t r = 1; r < n; ++r)
      if (mask >> (r - 1) & 1)
        for (std::size_t c = 0; c < cand.cols(); ++c) cand(r, c) = -cand(r, c);
    for (std::size_t c = 0; c < cand.cols(); ++c) {
      std::size_t r = 0;
      while (r < n && cand(r, c) == 0) ++r;
      if (r < n && cand(r, c) < 0)
        for (std::size_t k = 0; k < n; ++k) cand(k, c) = -cand(k, c);
    }
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

}  // namespace

bool equivalent(const CharMatrix& l1, const CharMatrix& l2) {
  require(l1.polytope == l2.polytope, ErrorKind::InvalidParameter,
          "equivalence needs the same labeled polytope");
  require_shape(l1.polytope, l1.entries);
  require_shape(l2.polytope, l2.entries);
  return canonical_form(l1) == canonical_form(l2);
}

ProductSplit default_split(int n1, int d1, int n2, int d2) {
  ProductSplit s;
  s.n1 = n1;
  s.n2 = n2;
  for (int i = 0; i < d1; ++i) s.facets1.push_back(i);
  for (int i = 0; i < d2; ++i) s.facets2.push_back(d1 + i);
  return s;
}

SimplePolytope factor_polytope(const SimplePolytope& p, const ProductSplit& split, int which) {
  require(which == 1 || which == 2, ErrorKind::InvalidParameter, "factor must be 1 or 2");
  validate_split(p, split);
  const auto& facets = which == 1 ? split.facets1 : split.facets2;
  std::set<FacetSet> verts;
  for (const auto& v : p.vertices()) {
    FacetSet local;
    for (int f : v) {
      auto it = std::find(facets.begin(), facets.end(), f);
      if (it != facets.end()) local.push_back(static_cast<int>(it - facets.begin()));
    }
    std::sort(local.begin(), local.end());
    verts.insert(std::move(local));
  }
  SimplePolytope out(which == 1 ? split.n1 : split.n2, static_cast<int>(facets.size()),
                     {verts.begin(), verts.end()});
  require_valid(out);
  return out;
}

CharMatrix extract_factor_matrix(const CharMatrix& l, const ProductSplit& split, int which) {
  const IntMatrix normal = split_normalized(l, split);
  CharMatrix out;
  out.polytope = factor_polytope(l.polytope, split, which);
  if (which == 1)
    out.entries = block(normal, 0, split.n1, split.facets1, 0);
  else
    out.entries = block(normal, split.n1, normal.rows(), split.facets2, 0);
  const auto check = check_nonsingular(out.polytope, out.entries);
  require(check.ok, ErrorKind::Precondition,
          "factor matrix is singular at vertex " + format_facet_set(check.failing_vertex) +
              "; the input is not a characteristic matrix");
  return out;
}

BundleMatrixData read_block_data(const CharMatrix& l, const ProductSplit& split) {
  IntMatrix normal = split_normalized(l, split);
  const std::size_t n1 = split.n1;
  if (split.d1() == split.n1 + 1) {
    const int fiber_col = split.facets1[n1];
    for (std::size_t i = 0; i < n1; ++i) {
      const Integer v = normal(i, fiber_col);
      require(abs(v) == 1, ErrorKind::Precondition,
              "fiber column entry " + v.str() + " is not +-1; the input is singular");
      if (v == 1) {
        for (std::size_t c = 0; c < normal.cols(); ++c) normal(i, c) = -normal(i, c);
        const int id_col = split.facets1[i];
        for (std::size_t r = 0; r < normal.rows(); ++r) normal(r, id_col) = -normal(r, id_col);
      }
    }
  }
  BundleMatrixData data;
  data.fiber = block(normal, 0, n1, split.facets1, 0);
  data.base = block(normal, n1, normal.rows(), split.facets2, 0);
  data.twists = block(normal, 0, n1, split.facets2, split.n2).negated();
  data.lower = block(normal, n1, normal.rows(), split.facets1, split.n1).negated();
  return data;
}

std::optional<BundleMatrixData> detect_bundle_structure(const CharMatrix& l,
                                                        const ProductSplit& split) {
  auto data = read_block_data(l, split);
  if (!data.is_bundle()) return std::nullopt;
  return data;
}

SimplePolytope base_polygon(int m) {
  require(m >= 1, ErrorKind::InvalidParameter, "base polygon needs m >= 1");
  std::vector<int> new_index(m + 2);
  for (int i = 0; i < m + 2; ++i) new_index[i] = i < m ? i + 2 : i - m;
  auto p = relabel(build_polygon(m + 2), new_index);
  p.set_label("polygon(" + std::to_string(m + 2) + ") base order");
  return p;
}

SimplePolytope bundle_polytope(int n, int m) {
  require(n >= 1 && m >= 1, ErrorKind::InvalidParameter, "bundle polytope needs n, m >= 1");
  const auto prod = product(build_simplex(n), build_polygon(m + 2));
  std::vector<int> new_index(n + m + 3);
  for (int k = 0; k < n; ++k) new_index[k] = k;  // F^1_1..F^1_n
  new_index[n] = n + 2;                          // F^1_{n+1}
  for (int j = 0; j < m; ++j) new_index[n + 1 + j] = n + 3 + j;  // F^2_1..F^2_m
  new_index[n + 1 + m] = n;                      // F^2_{m+1}
  new_index[n + 2 + m] = n + 1;                  // F^2_{m+2}
  auto p = relabel(prod, new_index);
  p.set_label("simplex(" + std::to_string(n) + ") x polygon(" + std::to_string(m + 2) + ")");
  return p;
}

ProductSplit bundle_split(int n, int m) {
  ProductSplit s;
  s.n1 = n;
  for (int k = 0; k < n; ++k) s.facets1.push_back(k);
  s.facets1.push_back(n + 2);
  s.n2 = 2;
  s.facets2 = {n, n + 1};
  for (int j = 0; j < m; ++j) s.facets2.push_back(n + 3 + j);
  return s;
}

CharMatrix build_bundle_char_matrix(const IntMatrix& base, const IntMatrix& twists) {
  require(base.rows() == 2 && base.cols() >= 3, ErrorKind::InvalidParameter,
          "base matrix must be 2 x (m+2) with m >= 1");
  const std::size_t m = base.cols() - 2;
  require(base(0, 0) == 1 && base(0, 1) == 0 && base(1, 0) == 0 && base(1, 1) == 1,
          ErrorKind::InvalidParameter, "base matrix must start with the 2x2 identity block");
  require(twists.rows() >= 1 && twists.cols() == m, ErrorKind::InvalidParameter,
          "twist matrix must be n x " + std::to_string(m) + " with n >= 1");
  const auto base_check = check_nonsingular(base_polygon(static_cast<int>(m)), base);
  require(base_check.ok, ErrorKind::InvalidParameter,
          "base matrix is singular at polygon vertex " + format_facet_set(base_check.failing_vertex));

  const std::size_t n = twists.rows();
  IntMatrix l(n + 2, n + m + 3);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1;
    l(i, n + 2) = -1;
    for (std::size_t j = 0; j < m; ++j) l(i, n + 3 + j) = -twists(i, j);
  }
  for (std::size_t r = 0; r < 2; ++r) {
    l(n + r, n + r) = 1;
    for (std::size_t j = 0; j < m; ++j) l(n + r, n + 3 + j) = base(r, 2 + j);
  }
  CharMatrix out{bundle_polytope(static_cast<int>(n), static_cast<int>(m)), std::move(l)};
  const auto check = check_nonsingular(out.polytope, out.entries);
  require(check.ok, ErrorKind::Internal,
          "bundle matrix is singular at vertex " + format_facet_set(check.failing_vertex));
  return out;
}

}  // namespace qtoric
