#include "qtoric/polytope.hpp"

#include "qtoric/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

bool is_subset(const FacetSet& a, const FacetSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<FacetSet> k_subsets(int n, int k) {
  std::vector<FacetSet> out;
  FacetSet cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<FacetSet> drop_non_maximal(std::vector<FacetSet> faces) {
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FacetSet> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j)
      if (i != j && faces[j].size() > faces[i].size() && is_subset(faces[i], faces[j]))
        maximal = false;
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace

SimplePolytope::SimplePolytope(int dim, int num_facets, std::vector<FacetSet> vertices,
                               std::string label)
    : dim_(dim), num_facets_(num_facets), vertices_(std::move(vertices)), label_(std::move(label)) {
  for (auto& v : vertices_) std::sort(v.begin(), v.end());
  std::sort(vertices_.begin(), vertices_.end());
}

bool SimplePolytope::is_face(const FacetSet& facets) const {
  FacetSet s = facets;
  std::sort(s.begin(), s.end());
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [&](const FacetSet& v) { return is_subset(s, v); });
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<FacetSet> faces)
    : vertex_count_(vertex_count) {
  faces.erase(std::remove_if(faces.begin(), faces.end(), [](const FacetSet& f) { return f.empty(); }),
              faces.end());
  maximal_ = drop_non_maximal(std::move(faces));
}

std::vector<FacetSet> SimplicialComplex::all_faces() const {
  std::set<FacetSet> seen;
  for (const auto& m : maximal_) {
    const std::size_t s = m.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      FacetSet f;
      for (std::size_t i = 0; i < s; ++i)
        if (mask >> i & 1) f.push_back(m[i]);
      seen.insert(std::move(f));
    }
  }
  std::vector<FacetSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FacetSet& a, const FacetSet& b) { return a.size() < b.size(); });
  return out;
}

SimplePolytope build_simplex(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "simplex dimension must be >= 1, got " + std::to_string(n));
  return SimplePolytope(n, n + 1, k_subsets(n + 1, n), "simplex(" + std::to_string(n) + ")");
}

SimplePolytope build_polygon(int k) {
  require(k >= 3, ErrorKind::InvalidParameter, "polygon needs >= 3 edges, got " + std::to_string(k));
  std::vector<FacetSet> vs;
  for (int i = 0; i < k; ++i) vs.push_back({i, (i + 1) % k});
  return SimplePolytope(2, k, std::move(vs), "polygon(" + std::to_string(k) + ")");
}

SimplePolytope product(const SimplePolytope& p1, const SimplePolytope& p2) {
  require_valid(p1);
  require_valid(p2);
  std::vector<FacetSet> vs;
  vs.reserve(p1.vertices().size() * p2.vertices().size());
  for (const auto& a : p1.vertices())
    for (const auto& b : p2.vertices()) {
      FacetSet v = a;
      for (int f : b) v.push_back(f + p1.num_facets());
      vs.push_back(std::move(v));
    }
  std::string label;
  if (!p1.label().empty() && !p2.label().empty()) label = p1.label() + " x " + p2.label();
  return SimplePolytope(p1.dim() + p2.dim(), p1.num_facets() + p2.num_facets(), std::move(vs),
                        std::move(label));
}

SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& new_index) {
  require(static_cast<int>(new_index.size()) == p.num_facets(), ErrorKind::InvalidParameter,
          "relabeling has wrong length");
  std::vector<int> check = new_index;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < p.num_facets(); ++i)
    require(check[i] == i, ErrorKind::InvalidParameter, "relabeling is not a permutation");
  std::vector<FacetSet> vs;
  for (const auto& v : p.vertices()) {
    FacetSet w;
    for (int f : v) w.push_back(new_index[f]);
    vs.push_back(std::move(w));
  }
  return SimplePolytope(p.dim(), p.num_facets(), std::move(vs), p.label());
}

SimplicialComplex nerve_complex(const SimplePolytope& p) {
  require_valid(p);
  return SimplicialComplex(p.num_facets(), p.vertices());
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const FacetSet& sigma) {
  for (int v : sigma)
    require(v >= 0 && v < k.vertex_count(), ErrorKind::InvalidParameter,
            "vertex " + std::to_string(v) + " out of range for restriction");
  FacetSet s = sigma;
  std::sort(s.begin(), s.end());
  std::vector<FacetSet> faces;
  for (const auto& m : k.maximal_faces()) {
    FacetSet f;
    std::set_intersection(m.begin(), m.end(), s.begin(), s.end(), std::back_inserter(f));
    if (!f.empty()) faces.push_back(std::move(f));
  }
  return SimplicialComplex(k.vertex_count(), std::move(faces));
}

std::vector<std::string> validate(const SimplePolytope& p) {
  std::vector<std::string> issues;
  const int n = p.dim(), d = p.num_facets();
  if (n < 1) issues.push_back("dimension " + std::to_string(n) + " < 1");
  if (d < n + 1)
    issues.push_back("facet count " + std::to_string(d) + " < dim+1 = " + std::to_string(n + 1));
  std::vector<int> seen(std::max(d, 0), 0);
  bool cardinality_ok = true;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& v = p.vertices()[i];
    if (static_cast<int>(v.size()) != n) {
      cardinality_ok = false;
      issues.push_back("vertex " + format_facet_set(v) + " has " + std::to_string(v.size()) +
                       " facets, expected " + std::to_string(n));
    }
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      issues.push_back("vertex " + format_facet_set(v) + " repeats a facet");
    if (i > 0 && p.vertices()[i - 1] == v)
      issues.push_back("vertex " + format_facet_set(v) + " listed twice");
    for (int f : v) {
      if (f < 0 || f >= d)
        issues.push_back("vertex " + format_facet_set(v) + " uses facet " + std::to_string(f) +
                         " outside 0.." + std::to_string(d - 1));
      else
        seen[f] = 1;
    }
  }
  for (int f = 0; f < d; ++f)
    if (!seen[f]) issues.push_back("facet " + std::to_string(f) + " lies on no vertex");
  if (cardinality_ok && n >= 1) {
    std::map<FacetSet, int> ridges;
    for (const auto& v : p.vertices())
      for (std::size_t drop = 0; drop < v.size(); ++drop) {
        FacetSet r;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (i != drop) r.push_back(v[i]);
        ++ridges[r];
      }
    for (const auto& [r, count] : ridges)
      if (count != 2)
        issues.push_back("ridge " + format_facet_set(r) + " lies in " + std::to_string(count) +
                         " vertices, expected 2");
  }
  return issues;
}

void require_valid(const SimplePolytope& p) {
  auto issues = validate(p);
  if (issues.empty()) return;
  std::string msg = "invalid polytope";
  if (!p.label().empty()) msg += " '" + p.label() + "'";
  for (const auto& s : issues) msg += "; " + s;
  fail(ErrorKind::InvalidParameter, msg);
}

std::vector<FacetSet> minimal_non_faces(const SimplePolytope& p) {
  require_valid(p);
  const int d = p.num_facets();
  require(d <= 30, ErrorKind::ResourceLimit, "minimal non-face scan limited to 30 facets");
  std::vector<std::uint32_t> vmasks;
  for (const auto& v : p.vertices()) {
    std::uint32_t m = 0;
    for (int f : v) m |= 1u << f;
    vmasks.push_back(m);
  }
  auto is_face = [&](std::uint32_t s) {
    return std::any_of(vmasks.begin(), vmasks.end(), [&](std::uint32_t v) { return (s & v) == s; });
  };
  std::vector<FacetSet> out;
  // A non-face is minimal iff dropping any single facet yields a face; faces
  // of simple polytopes have at most n facets so only sizes <= n+1 matter.
  for (int size = 1; size <= std::min(d, p.dim() + 1); ++size)
    for (const auto& s : k_subsets(d, size)) {
      std::uint32_t m = 0;
      for (int f : s) m |= 1u << f;
      if (is_face(m)) continue;
      bool minimal = true;
      for (int f : s)
        if (!is_face(m & ~(1u << f))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(s);
    }
  return out;
}

std::string format_facet_set(const FacetSet& s, bool one_based_names) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    if (one_based_names)
      os << 'F' << s[i] + 1;
    else
      os << s[i];
  }
  os << '}';
  return os.str();
}

}  // namespace qtoric
