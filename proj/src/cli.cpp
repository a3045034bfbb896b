#include "qtoric/cli.hpp"

#include "qtoric/betti.hpp"
#include "qtoric/bundles.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cohomring.hpp"
#include "qtoric/error.hpp"
#include "qtoric/io.hpp"
#include "qtoric/isomorph.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qtoric::cli {

namespace {

using io::Json;

struct Reply {
  Json json;
  std::string human;
  int code = kSuccess;
};

std::string join_ints(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string matrix_lines(const IntMatrix& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t w = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r].push_back(m(r, c).str());
      w = std::max(w, cells[r].back().size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent << "(";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::setw(int(w)) << row[c];
    os << ")\n";
  }
  return os.str();
}

RingPtr load_ring(const std::string& arg) {
  return std::make_shared<const GradedRing>(io::ring_from_json(io::load_json_arg(arg)));
}

std::filesystem::path dir_of(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return {};
  return std::filesystem::path(arg).parent_path();
}

std::string hilbert_line(const GradedRing& r) {
  std::ostringstream os;
  os << "ranks by degree (H^0, H^2, ...): " << join_ints(r.hilbert().ranks);
  for (const auto& [deg, fs] : r.hilbert().torsion) {
    os << "\ntorsion in H^" << deg << ":";
    for (const auto& f : fs) os << " Z/" << f;
  }
  if (r.hilbert().truncated) os << "\n(computation stopped before the ring vanished)";
  return os.str();
}

Json hilbert_json(const GradedRing& r) {
  Json j;
  j["ranks"] = r.hilbert().ranks;
  Json t = Json::object();
  for (const auto& [deg, fs] : r.hilbert().torsion) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(io::integer_to_json(f));
    t[std::to_string(deg)] = a;
  }
  j["torsion"] = t;
  j["truncated"] = r.hilbert().truncated;
  return j;
}

// ---- betti ----------------------------------------------------------------

BettiTable closed_table(const Json& pj) {
  const std::string kind = pj.value("kind", "");
  if (kind == "simplex") return simplex_closed_form(pj.at("n").get<int>());
  if (kind == "polygon") {
    const int k = pj.at("edges").get<int>();
    require(k >= 3, ErrorKind::InvalidParameter, "polygon needs at least 3 edges");
    return polygon_closed_form(k - 2);
  }
  if (kind == "product") {
    const auto& fs = pj.at("factors");
    BettiTable t = closed_table(fs.at(0));
    for (std::size_t i = 1; i < fs.size(); ++i) t = product_table(t, closed_table(fs[i]));
    return t;
  }
  fail(ErrorKind::InvalidParameter,
       "closed forms need a simplex, polygon or product description, got \"" + kind + "\"");
}

std::string betti_human(const BettiTable& t) {
  std::ostringstream os;
  os << "bigraded Betti numbers beta^{-i,2j}";
  if (t.has_metadata()) os << " (dim " << t.dim << ", " << t.num_facets << " facets)";
  os << "\n    i    j  value\n";
  for (const auto& [ij, v] : t.entries)
    os << std::setw(5) << ij.first << std::setw(5) << ij.second << "  " << v << "\n";
  return os.str();
}

Reply do_betti(const std::string& poly, const std::string& method, int cap, unsigned jobs) {
  const Json pj = io::load_json_arg(poly);
  const SimplePolytope p = io::polytope_from_json(pj);
  HochsterOptions opts{cap, jobs};
  BettiTable t;
  if (method == "hochster") {
    t = hochster_table(p, opts);
  } else if (method == "closed") {
    t = closed_table(pj);
  } else {
    require(pj.value("kind", "") == "product", ErrorKind::InvalidParameter,
            "--method product needs a product description");
    const auto& fs = pj.at("factors");
    t = hochster_table(io::polytope_from_json(fs.at(0)), opts);
    for (std::size_t i = 1; i < fs.size(); ++i)
      t = product_table(t, hochster_table(io::polytope_from_json(fs[i]), opts));
  }
  return {io::betti_to_json(t), betti_human(t)};
}

// ---- nonsingular / cohomology ---------------------------------------------

Reply do_nonsingular(const std::string& poly, const std::string& mat) {
  const auto p = io::polytope_from_json(io::load_json_arg(poly));
  const auto m = io::matrix_from_json(io::load_json_arg(mat));
  const auto res = check_nonsingular(p, m);
  Reply r;
  r.json["nonsingular"] = res.ok;
  if (res.ok) {
    r.human = "non-singular: every vertex has determinant +1 or -1\n";
  } else {
    r.json["vertex"] = res.failing_vertex;
    r.json["determinant"] = io::integer_to_json(res.determinant);
    r.human = "singular at vertex " + format_facet_set(res.failing_vertex, true) + ": det " +
              res.determinant.str() + "\n";
    r.code = kNegative;
  }
  return r;
}

Reply do_cohomology(const std::string& poly, const std::string& mat) {
  const auto p = io::polytope_from_json(io::load_json_arg(poly));
  const auto m = io::matrix_from_json(io::load_json_arg(mat));
  const GradedRing ring = present_cohomology({p, m});
  Json j = io::ring_to_json(ring);
  j["hilbert"] = hilbert_json(ring);
  return {j, ring.to_string() + "\n" + hilbert_line(ring) + "\n"};
}

// ---- iso ------------------------------------------------------------------

Reply do_iso_verify(const std::string& s, const std::string& t, const std::string& map) {
  RingMap m{load_ring(s), load_ring(t), io::map_from_json(io::load_json_arg(map))};
  const auto res = verify_iso(m);
  Reply r;
  r.json["status"] = to_string(res.status);
  r.json["determinant"] = io::integer_to_json(res.determinant);
  r.json["failed_relation"] =
      res.failed_relation ? Json(*res.failed_relation) : Json(nullptr);
  r.json["reduced_images"] = Json::array();
  for (const auto& p : res.reduced_images)
    r.json["reduced_images"].push_back(io::polynomial_to_json(p));
  r.json["message"] = res.message;
  if (res.ok()) {
    r.human = "isomorphism verified (det " + res.determinant.str() +
              "; every relation maps into the ideal; Hilbert functions agree)\n";
  } else {
    r.human = std::string("not an isomorphism: ") + to_string(res.status) + ": " + res.message +
              "\n";
    r.code = kNegative;
  }
  return r;
}

Reply do_iso_search(const std::string& s, const std::string& t, int bound, unsigned jobs) {
  const auto found = search_iso(load_ring(s), load_ring(t), {bound, jobs});
  Reply r;
  r.json["bound"] = bound;
  r.json["maps"] = Json::array();
  for (const auto& m : found) r.json["maps"].push_back(io::map_to_json(m));
  std::ostringstream os;
  if (found.empty()) {
    os << "none found up to bound " << bound << "\n";
    r.code = kNegative;
  } else {
    os << found.size() << " isomorphism(s) with entries in [-" << bound << ", " << bound
       << "], one per sign pair\n";
    for (std::size_t i = 0; i < found.size(); ++i)
      os << "map " << i + 1 << ":\n" << matrix_lines(found[i]);
  }
  r.human = os.str();
  return r;
}

// ---- bundle ---------------------------------------------------------------

Reply do_bundle_build(const std::string& base, const std::string& twists,
                      const std::string& polytope_out) {
  const auto b = io::matrix_from_json(io::load_json_arg(base));
  const auto a = io::matrix_from_json(io::load_json_arg(twists));
  const CharMatrix c = build_bundle_char_matrix(b, a);
  if (!polytope_out.empty()) {
    std::ofstream f(polytope_out);
    require(bool(f), ErrorKind::InvalidParameter, "cannot write " + polytope_out);
    f << io::polytope_to_json(c.polytope).dump(2) << "\n";
  }
  const int n = static_cast<int>(a.rows()), m = static_cast<int>(a.cols());
  std::ostringstream os;
  os << "characteristic matrix over simplex(" << n << ") x polygon(" << m + 2 << "), "
     << c.entries.rows() << " x " << c.entries.cols() << "\n"
     << matrix_lines(c.entries) << "split: " << io::split_to_json(bundle_split(n, m)).dump()
     << "\n";
  return {io::matrix_to_json(c.entries), os.str()};
}

Reply do_bundle_ring(const std::string& base, const std::string& twists,
                     const std::string& fiber_name) {
  BundleSpec s{load_ring(base), io::matrix_from_json(io::load_json_arg(twists))};
  const GradedRing r = projectivization_ring(s, fiber_name);
  return {io::ring_to_json(r),
          r.to_string() + "\nfiber generator: " + r.generators()[0] + "\n" + hilbert_line(r) +
              "\n"};
}

Json chern_json(const std::vector<Polynomial>& c) {
  Json a = Json::array();
  for (const auto& p : c) a.push_back(io::polynomial_to_json(p));
  return a;
}

std::string chern_human(const std::vector<Polynomial>& c, const GradedRing& base) {
  std::ostringstream os;
  for (std::size_t k = 0; k < c.size(); ++k)
    os << "  c" << k << " = " << c[k].to_string(base.generators()) << "\n";
  return os.str();
}

Reply do_bundle_chern(const std::string& spec1, const std::string& spec2) {
  const auto s1 = io::bundle_spec_from_json(io::load_json_arg(spec1), dir_of(spec1));
  const auto c1 = total_chern(s1);
  Reply r;
  if (spec2.empty()) {
    r.json["chern"] = chern_json(c1);
    r.human = "total Chern class:\n" + chern_human(c1, *s1.base);
    return r;
  }
  auto s2 = io::bundle_spec_from_json(io::load_json_arg(spec2), dir_of(spec2));
  if (same_presentation(*s1.base, *s2.base)) s2.base = s1.base;
  const auto c2 = total_chern(s2);
  const bool iso = chern_isomorphic(s1, s2);
  r.json["chern1"] = chern_json(c1);
  r.json["chern2"] = chern_json(c2);
  r.json["isomorphic"] = iso;
  r.human = "spec 1:\n" + chern_human(c1, *s1.base) + "spec 2:\n" + chern_human(c2, *s2.base) +
            (iso ? "total Chern classes agree: the bundles are isomorphic\n"
                 : "total Chern classes differ: the bundles are not isomorphic\n");
  r.code = iso ? kSuccess : kNegative;
  return r;
}

Reply do_bundle_normalize(const std::string& twists) {
  const auto a = io::matrix_from_json(io::load_json_arg(twists));
  const auto norm = normalize_twists(a);
  const auto mv = normalizing_move(a);
  std::ostringstream os;
  os << "canonical twists:\n"
     << matrix_lines(norm) << "reached by tensoring with the inverse of summand "
     << mv.translate_row << (mv.negate ? " then dualizing" : "") << "\n";
  return {io::matrix_to_json(norm), os.str()};
}

// ---- rigidity -------------------------------------------------------------

Reply do_rigidity(const std::string& table) {
  const auto t = io::betti_from_json(io::load_json_arg(table));
  const auto rec = recognize_table(t);
  Reply r;
  std::ostringstream os;
  switch (rec.kind) {
    case Recognition::Kind::SimplexPolygonProduct:
      r.json["kind"] = "simplex-polygon-product";
      r.json["n"] = rec.n;
      r.json["m"] = rec.m;
      os << "table of simplex(" << rec.n << ") x polygon(" << rec.m + 2 << ")\n";
      break;
    case Recognition::Kind::Simplex:
      r.json["kind"] = "simplex";
      r.json["n"] = rec.n;
      os << "table of simplex(" << rec.n << ")\n";
      break;
    case Recognition::Kind::Polygon:
      r.json["kind"] = "polygon";
      r.json["m"] = rec.m;
      os << "table of polygon(" << rec.m + 2 << ")\n";
      break;
    case Recognition::Kind::None:
      r.json["kind"] = "none";
      os << "not the table of a simplex, a polygon or simplex x polygon\n";
      r.code = kNegative;
      break;
  }
  r.human = os.str();
  return r;
}

// ---- classes --------------------------------------------------------------

std::string graded_human(const char* name, const std::vector<Polynomial>& v,
                         const std::vector<std::string>& gens, int step) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k)
    os << "  " << name << k * step << " = " << v[k].to_string(gens) << "\n";
  return os.str();
}

Reply pairing_reply(const GradedRing& ring) {
  const auto rep = poincare_pairing(ring);
  Reply r;
  r.json["basis"] = rep.basis;
  r.json["pairing"] = io::matrix_to_json(rep.matrix);
  r.json["determinant"] = io::integer_to_json(rep.determinant);
  r.json["signature"] = rep.signature;
  r.json["p1"] = 3 * rep.signature;
  std::ostringstream os;
  os << "pairing on";
  for (const auto& b : rep.basis) os << " " << b;
  os << " (fundamental class: " << Polynomial::term(ring.reference_monomial(), 1).to_string(ring.generators())
     << " = +1)\n"
     << matrix_lines(rep.matrix) << "determinant " << rep.determinant << ", signature "
     << rep.signature << ", p1 = " << 3 * rep.signature << "\n";
  r.human = os.str();
  return r;
}

Reply do_classes(const std::string& poly, const std::string& mat, const std::string& ring_arg,
                 const std::string& map_arg, const std::string& target_arg,
                 const std::string& classes_arg, const std::string& target_classes_arg) {
  if (!poly.empty() || !mat.empty()) {
    require(!poly.empty() && !mat.empty(), ErrorKind::InvalidParameter,
            "classes needs both --polytope and --matrix");
    const auto p = io::polytope_from_json(io::load_json_arg(poly));
    const auto m = io::matrix_from_json(io::load_json_arg(mat));
    const CharMatrix l{p, m};
    const GradedRing ring = present_cohomology(l);
    const auto cc = characteristic_classes(l, ring);
    const ClassData data{cc.w, cc.p};
    Reply r{io::class_data_to_json(data), ""};
    std::ostringstream os;
    os << ring.to_string() << "\nStiefel-Whitney classes (mod 2):\n"
       << graded_human("w", cc.w, ring.generators(), 2) << "Pontryagin classes:\n"
       << graded_human("p", cc.p, ring.generators(), 1);
    if (ring.top_degree() == 2) os << pairing_reply(ring).human;
    r.human = os.str();
    return r;
  }
  require(!ring_arg.empty(), ErrorKind::InvalidParameter,
          "classes needs --ring, or --polytope with --matrix");
  const RingPtr ring = load_ring(ring_arg);
  if (map_arg.empty()) return pairing_reply(*ring);

  require(!target_arg.empty(), ErrorKind::InvalidParameter, "--map needs --target");
  const RingMap m{ring, load_ring(target_arg), io::map_from_json(io::load_json_arg(map_arg))};
  const auto iso = verify_iso(m);
  require(iso.ok(), ErrorKind::Precondition,
          std::string("map is not a verified isomorphism: ") + to_string(iso.status));
  ClassPreservationReport rep;
  if (!classes_arg.empty() || !target_classes_arg.empty()) {
    require(!classes_arg.empty() && !target_classes_arg.empty(), ErrorKind::InvalidParameter,
            "--classes and --target-classes go together");
    const auto c1 = io::class_data_from_json(io::load_json_arg(classes_arg), m.source->ngens());
    const auto c2 =
        io::class_data_from_json(io::load_json_arg(target_classes_arg), m.target->ngens());
    rep = characteristic_class_preservation(m, c1, c2);
  } else {
    rep = pairing_congruence(m);
  }
  Reply r;
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  r.json["w_preserved"] = opt(rep.w_preserved);
  r.json["p_preserved"] = opt(rep.p_preserved);
  r.json["pairing_congruent"] = opt(rep.pairing_congruent);
  r.json["pairing_sign"] = rep.pairing_sign;
  std::ostringstream os;
  auto line = [&](const char* what, const std::optional<bool>& b) {
    os << what << ": " << (!b ? "not checked" : *b ? "preserved" : "NOT preserved") << "\n";
  };
  line("Stiefel-Whitney classes", rep.w_preserved);
  line("Pontryagin classes", rep.p_preserved);
  line("intersection form", rep.pairing_congruent);
  if (rep.pairing_congruent && *rep.pairing_congruent)
    os << "  P G2 P^T = " << (rep.pairing_sign > 0 ? "+" : "-") << "G1\n";
  r.human = os.str();
  for (const auto& b : {rep.w_preserved, rep.p_preserved, rep.pairing_congruent})
    if (b && !*b) r.code = kNegative;
  return r;
}

// ---- automorphisms --------------------------------------------------------

Reply do_automorphisms(const std::string& spec) {
  const auto s = io::bundle_spec_from_json(io::load_json_arg(spec), dir_of(spec));
  const auto cands = fiber_automorphisms(s);
  Reply r;
  r.json["candidates"] = Json::array();
  std::ostringstream os;
  os << cands.size() << " fiberwise automorphism candidate(s):\n";
  for (const auto& c : cands) {
    Json j;
    j["epsilon"] = c.epsilon;
    j["omega"] = io::polynomial_to_json(c.omega);
    j["identity_holds"] = c.identity_holds;
    j["ring_map"] = io::map_to_json(c.ring_map)["matrix"];
    j["ring_map_verified"] = c.ring_map_verified;
    r.json["candidates"].push_back(std::move(j));
    os << "  epsilon = " << (c.epsilon > 0 ? "+1" : "-1")
       << ", omega = " << c.omega.to_string(s.base->generators())
       << "; Chern identity " << (c.identity_holds ? "holds" : "fails") << ", ring map "
       << (c.ring_map_verified ? "verified" : "NOT verified") << "\n";
  }
  r.human = os.str();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of quasitoric manifolds and projective bundles", "qtoric"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  std::string format, output;
  app.add_option("--format", format, "Output format: human (default) or json")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("-o,--output", output,
                 "Write the result to a file (JSON unless --format says otherwise)");

  std::string poly, mat, method = "hochster", ring_s, ring_t, map, table, base_matrix, twists,
                         base_ring, spec1, spec2, spec, polytope_out, fiber_name = "x0",
                         ring_arg, target_arg, classes_arg, target_classes_arg;
  int bound = 3, cap = 16;
  unsigned jobs = 1;

  auto* betti = app.add_subcommand("betti", "Bigraded Betti numbers of a polytope");
  betti->add_option("-p,--polytope", poly, "Polytope file or inline JSON")->required();
  betti->add_option("--method", method, "hochster, closed or product")
      ->check(CLI::IsMember({"hochster", "closed", "product"}));
  betti->add_option("--facet-cap", cap, "Refuse Hochster enumeration above this many facets");
  betti->add_option("--jobs", jobs, "Worker threads");

  auto* nonsing = app.add_subcommand("nonsingular", "Check the non-singularity condition");
  nonsing->add_option("-p,--polytope", poly)->required();
  nonsing->add_option("-m,--matrix", mat)->required();

  auto* cohom = app.add_subcommand("cohomology", "Cohomology ring presentation");
  cohom->add_option("-p,--polytope", poly)->required();
  cohom->add_option("-m,--matrix", mat)->required();

  auto* iso = app.add_subcommand("iso", "Ring isomorphisms");
  iso->require_subcommand(1);
  auto* verify = iso->add_subcommand("verify", "Verify a ring map");
  verify->add_option("-s,--source", ring_s)->required();
  verify->add_option("-t,--target", ring_t)->required();
  verify->add_option("--map", map)->required();
  auto* search = iso->add_subcommand("search", "Search isomorphisms with bounded entries");
  search->add_option("-s,--source", ring_s)->required();
  search->add_option("-t,--target", ring_t)->required();
  search->add_option("--bound", bound, "Entry bound (default 3)");
  search->add_option("--jobs", jobs, "Worker threads");

  auto* bundle = app.add_subcommand("bundle", "Projective bundles");
  bundle->require_subcommand(1);
  auto* build = bundle->add_subcommand("build", "Characteristic matrix of a projective bundle");
  build->add_option("--base-matrix", base_matrix, "2 x (m+2) base matrix")->required();
  build->add_option("--twists", twists, "n x m twist matrix")->required();
  build->add_option("--polytope-out", polytope_out, "Also write the polytope here");
  auto* bring = bundle->add_subcommand("ring", "Cohomology ring of a projectivization");
  bring->add_option("--base-ring", base_ring)->required();
  bring->add_option("--twists", twists)->required();
  bring->add_option("--fiber-name", fiber_name, "Name of the fiber generator (default x0)");
  auto* chern = bundle->add_subcommand("chern", "Total Chern classes and comparison");
  chern->add_option("--spec1", spec1)->required();
  chern->add_option("--spec2", spec2);
  auto* normalize = bundle->add_subcommand("normalize", "Canonical twist matrix");
  normalize->add_option("--twists", twists)->required();

  auto* rigidity = app.add_subcommand("rigidity", "Recognize simplex x polygon Betti tables");
  rigidity->add_option("--table", table)->required();

  auto* classes = app.add_subcommand("classes", "Characteristic classes and their transport");
  classes->add_option("-p,--polytope", poly);
  classes->add_option("-m,--matrix", mat);
  classes->add_option("--ring", ring_arg);
  classes->add_option("--map", map);
  classes->add_option("--target", target_arg);
  classes->add_option("--classes", classes_arg);
  classes->add_option("--target-classes", target_classes_arg);

  auto* autos = app.add_subcommand("automorphisms", "Fiberwise automorphisms of a bundle");
  autos->add_option("--spec", spec)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Reply reply;
  try {
    if (*betti)
      reply = do_betti(poly, method, cap, jobs);
    else if (*nonsing)
      reply = do_nonsingular(poly, mat);
    else if (*cohom)
      reply = do_cohomology(poly, mat);
    else if (*verify)
      reply = do_iso_verify(ring_s, ring_t, map);
    else if (*search)
      reply = do_iso_search(ring_s, ring_t, bound, jobs);
    else if (*build)
      reply = do_bundle_build(base_matrix, twists, polytope_out);
    else if (*bring)
      reply = do_bundle_ring(base_ring, twists, fiber_name);
    else if (*chern)
      reply = do_bundle_chern(spec1, spec2);
    else if (*normalize)
      reply = do_bundle_normalize(twists);
    else if (*rigidity)
      reply = do_rigidity(table);
    else if (*classes)
      reply = do_classes(poly, mat, ring_arg, map, target_arg, classes_arg, target_classes_arg);
    else if (*autos)
      reply = do_automorphisms(spec);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? kInternalError : kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error (invalid-parameter): " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  const bool json = format == "json" || (format.empty() && !output.empty());
  const std::string text = json ? reply.json.dump(2) + "\n" : reply.human;
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error (invalid-parameter): cannot write " << output << "\n";
      return kInputError;
    }
    f << text;
  }
  return reply.code;
}

}  // namespace qtoric::cli
