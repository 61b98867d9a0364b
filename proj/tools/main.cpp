/*
  Command-line surface: exact root sets of monomial-ideal b-polynomials from
  Newton-polyhedron data, product checks, the b-polynomial algebra, and the
  oracle verification harness.

  Exit codes: 0 success, 2 input error, 3 stabilization failure,
  1 verification mismatch (oracle-verify only).  Reports are JSON on stdout
  (deterministic for fixed input and flags); --table switches to a human
  layout; timing goes to stderr.
*/
#include <CLI11.hpp>
#include <json.hpp>

#include "bsroots/bpoly.hpp"
#include "bsroots/oracle.hpp"
#include "bsroots/residues.hpp"

#include <chrono>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace bsr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitStabilization = 3;

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a-%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

json ideal_json(const MonomialIdeal& ideal) {
  return json::parse(ideal_to_json(ideal));
}

json rational_list(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const Rational& r : v) arr.push_back(to_string(r));
  return arr;
}

json vertex_list(const std::vector<ZVec>& vs) {
  json arr = json::array();
  for (const ZVec& v : vs) {
    json row = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i].get_si());
    arr.push_back(row);
  }
  return arr;
}

json face_json(const NewtonPolyhedron& P, const std::vector<Face>& faces,
               std::size_t index) {
  const Face& f = faces[index];
  json j;
  j["index"] = index;
  j["dim"] = f.dim;
  j["whole"] = f.whole;
  j["in_coordinate_hyperplane"] = f.in_coordinate_hyperplane;
  j["active_facets"] = f.active;
  j["vertices"] = vertex_list(f.vertices);
  j["rays"] = f.rays;
  if (f.functional) {
    json L = json::array();
    for (Eigen::Index i = 0; i < P.dim; ++i) L.push_back(to_string((*f.functional)[i]));
    j["functional"] = L;
  } else {
    j["functional"] = nullptr;
  }
  if (f.dim == P.dim - 1 && !f.whole && !f.in_coordinate_hyperplane) {
    const FacetData& facet = P.facets[static_cast<std::size_t>(f.active.front())];
    j["m"] = facet_m(facet).get_si();
  } else {
    j["m"] = nullptr;
  }
  return j;
}

struct CommonFlags {
  std::string cap;
  long box = 0;
  int jobs = 1;
  bool table = false;
};

Rational cap_of(const CommonFlags& flags) {
  if (flags.cap.empty()) return Rational(0);
  Rational c = parse_rational(flags.cap);
  if (c <= 0) throw std::invalid_argument("--cap must be positive");
  return c;
}

void emit(const json& report, bool table, const std::string& table_text) {
  if (table)
    std::cout << table_text;
  else
    std::cout << report.dump(2) << "\n";
}

int run_roots(const std::string& spec, const CommonFlags& flags) {
  MonomialIdeal ideal = parse_ideal(spec);
  if (!ideal.is_nontrivial_proper())
    throw std::invalid_argument("ideal must be nontrivial and proper");
  NewtonPolyhedron P = build_polyhedron(ideal);
  std::vector<Face> faces = enumerate_faces(P);
  RootsResult r = roots(ideal, P, faces, cap_of(flags), flags.box, flags.jobs);

  json report;
  report["command"] = "roots";
  report["input"] = ideal_json(ideal);
  report["digest"] = fnv1a(ideal_to_json(ideal));
  report["cap"] = to_string(r.cap);
  report["roots"] = rational_list(r.roots);
  report["cap_hit"] = r.cap_hit;
  json contribs = json::array();
  for (const FaceContribution& c : r.contributions) {
    json cj;
    cj["face"] = face_json(P, faces, c.face_index);
    cj["roots"] = rational_list(c.roots);
    cj["certificate"] = {{"box", c.certificate.box},
                         {"budget", c.certificate.budget}};
    contribs.push_back(cj);
  }
  report["contributions"] = contribs;
  if (!r.failed_faces.empty()) {
    report["stabilization_failures"] = r.failed_faces;
    report["partial"] = true;
  }

  std::string table;
  if (flags.table) {
    table += "roots of the b-polynomial (cap " + to_string(r.cap) + "):\n";
    for (const Rational& root : r.roots) table += "  " + to_string(root) + "\n";
    if (r.cap_hit)
      table += "note: a value met the cap exactly; re-run with a larger --cap to be sure\n";
    if (!r.failed_faces.empty()) table += "warning: stabilization failed on some faces\n";
  }
  emit(report, flags.table, table);
  return r.failed_faces.empty() ? kExitOk : kExitStabilization;
}

int run_modz(const std::string& spec, const CommonFlags& flags) {
  MonomialIdeal ideal = parse_ideal(spec);
  if (!ideal.is_nontrivial_proper())
    throw std::invalid_argument("ideal must be nontrivial and proper");
  NewtonPolyhedron P = build_polyhedron(ideal);
  ModZClasses c = roots_mod_z(P);

  json report;
  report["command"] = "modz";
  report["input"] = ideal_json(ideal);
  report["digest"] = fnv1a(ideal_to_json(ideal));
  json ms = json::array();
  for (const Integer& m : c.facet_ms) ms.push_back(m.get_si());
  report["facet_m"] = ms;
  report["subgroup_generators"] = rational_list(c.generators);
  report["classes"] = rational_list(c.classes);

  std::string table;
  if (flags.table) {
    table += "facet m values:";
    for (const Integer& m : c.facet_ms) table += " " + m.get_str();
    table += "\nclasses mod Z:";
    for (const Rational& r : c.classes) table += " " + to_string(r);
    table += "\n";
  }
  emit(report, flags.table, table);
  return kExitOk;
}

int run_faces(const std::string& spec, const CommonFlags& flags) {
  MonomialIdeal ideal = parse_ideal(spec);
  if (!ideal.is_nontrivial_proper())
    throw std::invalid_argument("ideal must be nontrivial and proper");
  NewtonPolyhedron P = build_polyhedron(ideal);
  std::vector<Face> faces = enumerate_faces(P);

  json report;
  report["command"] = "faces";
  report["input"] = ideal_json(ideal);
  report["digest"] = fnv1a(ideal_to_json(ideal));
  json facets = json::array();
  for (const FacetData& f : P.facets) {
    json fj;
    json n = json::array();
    for (Eigen::Index i = 0; i < P.dim; ++i) n.push_back(f.normal[i].get_si());
    fj["normal"] = n;
    fj["constant"] = f.constant.get_si();
    fj["is_coordinate"] = f.is_coordinate;
    fj["m"] = f.is_coordinate ? json(nullptr) : json(facet_m(f).get_si());
    facets.push_back(fj);
  }
  report["facets"] = facets;
  json fl = json::array();
  for (std::size_t i = 0; i < faces.size(); ++i) fl.push_back(face_json(P, faces, i));
  report["faces"] = fl;

  std::string table;
  if (flags.table) {
    table += "faces (" + std::to_string(faces.size()) + "):\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Face& f = faces[i];
      table += "  #" + std::to_string(i) + " dim " + std::to_string(f.dim);
      if (f.whole) table += " (whole polyhedron)";
      if (f.in_coordinate_hyperplane) table += " (coordinate hyperplane)";
      if (f.functional) {
        table += "  L = (";
        for (Eigen::Index k = 0; k < P.dim; ++k) {
          if (k) table += ", ";
          table += to_string((*f.functional)[k]);
        }
        table += ")";
      }
      table += "\n";
    }
  }
  emit(report, flags.table, table);
  return kExitOk;
}

int run_check_ts(const std::string& spec_a, const std::string& spec_b,
                 const CommonFlags& flags) {
  MonomialIdeal a = parse_ideal(spec_a);
  MonomialIdeal b = parse_ideal(spec_b);
  CheckTsResult r = check_ts(a, b, cap_of(flags), flags.box, flags.jobs);

  json report;
  report["command"] = "check-ts";
  report["input_a"] = ideal_json(a);
  report["input_b"] = ideal_json(b);
  report["digest"] = fnv1a(ideal_to_json(a) + "|" + ideal_to_json(b));
  report["cap"] = to_string(r.cap);
  report["wa"] = rational_list(r.wa.roots);
  report["wb"] = rational_list(r.wb.roots);
  report["wab"] = rational_list(r.wab);
  report["inclusion_holds"] = r.inclusion;
  report["extra_roots"] = rational_list(r.extra_roots);
  json modz;
  modz["classes_a"] = rational_list(r.classes_a.classes);
  modz["classes_b"] = rational_list(r.classes_b.classes);
  modz["classes_product"] = rational_list(r.classes_product.classes);
  modz["union_equals_product"] = r.modz_equal;
  report["modz"] = modz;
  json pairs = json::array();
  for (const PairContribution& pc : r.pair_contributions) {
    json pj;
    pj["face_a"] = pc.face_a;
    pj["face_b"] = pc.face_b;
    pj["roots"] = rational_list(pc.roots);
    pairs.push_back(pj);
  }
  report["pairs"] = pairs;

  std::string table;
  if (flags.table) {
    auto line = [](const std::string& name, const std::vector<Rational>& v) {
      std::string s = name + " = {";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
      }
      return s + "}\n";
    };
    table += line("W_a ", r.wa.roots);
    table += line("W_b ", r.wb.roots);
    table += line("W_ab", r.wab);
    table += std::string("inclusion W_a ∪ W_b ⊆ W_ab: ") +
             (r.inclusion ? "holds" : "FAILS") + "\n";
    table += line("extra roots", r.extra_roots);
    table += std::string("classes mod Z agree: ") +
             (r.modz_equal ? "yes" : "NO") + "\n";
  }
  emit(report, flags.table, table);
  return kExitOk;
}

int run_bpoly(const std::string& expr, const CommonFlags& flags) {
  BPoly b = parse_bpoly_expression(expr);
  json report;
  report["command"] = "bpoly";
  report["expression"] = expr;
  report["digest"] = fnv1a(expr);
  report["factored"] = b.factored();
  report["degree"] = b.degree();
  report["roots"] = json::parse(b.serialize());
  json coeffs = json::array();
  for (const Rational& c : b.coefficients()) coeffs.push_back(to_string(c));
  report["coefficients"] = coeffs;

  std::string table;
  if (flags.table) table = b.factored() + "\n";
  emit(report, flags.table, table);
  return kExitOk;
}

int run_oracle_verify(long two_gen_max, long three_gen_max, std::size_t limit,
                      const CommonFlags& flags) {
  long box = flags.box > 0 ? flags.box : 20;
  Rational cap = flags.cap.empty() ? Rational(2) : parse_rational(flags.cap);
  auto catalog = two_variable_catalog(two_gen_max, three_gen_max);
  if (limit > 0 && catalog.size() > limit) catalog.resize(limit);

  // three-variable fixtures ride along at a smaller box
  catalog.push_back({"fixture_xyz", parse_ideal("x*y*z")});
  catalog.push_back({"fixture_x2_y3_z5", parse_ideal("x^2, y^3, z^5")});
  catalog.push_back({"fixture_cyclic_x2y_y3z_z2x", parse_ideal("x^2*y, y^3*z, z^2*x")});

  std::size_t passed = 0, failed = 0;
  for (const CatalogEntry& e : catalog) {
    VerifyOutcome out = e.ideal.dim > 2
                            ? verify_entry(e, 14, Rational(3))
                            : verify_entry(e, box, cap);
    json line;
    line["entry"] = out.name;
    line["pass"] = out.pass;
    if (!out.detail.empty()) line["detail"] = out.detail;
    std::cout << line.dump() << "\n";
    (out.pass ? passed : failed)++;
  }

  // product cross-checks: the residue path against the dense saturation in
  // the joined space, including pencil invariance
  struct ProductCase {
    const char* name;
    const char* a;
    const char* b;
    long box;
  };
  for (ProductCase pc : {ProductCase{"product_2_7_x_14_1", "x^2, y^7", "z^14, w", 16},
                         ProductCase{"product_2_3_x_2_2", "x^2, y^3", "z^2, w^2", 12},
                         ProductCase{"product_1_4_3_1_x_2", "x^1*y^4, x^3*y^1", "z^2", 12}}) {
    json line;
    line["entry"] = pc.name;
    try {
      MonomialIdeal a = parse_ideal(pc.a);
      MonomialIdeal b = parse_ideal(pc.b);
      auto A = build_polyhedron(a);
      auto B = build_polyhedron(b);
      ProductPolyhedron prod = product_polyhedron(A, B);
      Rational pcap(static_cast<long>(a.dim + b.dim));
      OracleScale scale;
      scale.max_exponent = 14;
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < prod.faces_a.size() && ok; ++i) {
        for (std::size_t j = 0; j < prod.faces_b.size() && ok; ++j) {
          const Face& qa = prod.faces_a[i];
          const Face& qb = prod.faces_b[j];
          if (qa.in_coordinate_hyperplane || qb.in_coordinate_hyperplane)
            continue;
          if (qa.whole && qb.whole) continue;
          FaceValueData da = face_values(a, A, qa, pcap, flags.box);
          FaceValueData db = face_values(b, B, qb, pcap, flags.box);
          ResidueSet smart = product_face_residues(da, db, pcap);
          std::set<Rational> smart_vals;
          for (const Rational& v : smart.values) smart_vals.insert(-v);
          // the pencil degenerates when one side is the whole polyhedron
          std::vector<Rational> ts{Rational(1, 2)};
          if (!qa.whole && !qb.whole) ts = {Rational(0), Rational(1, 2), Rational(1)};
          auto dense = oracle_product_residues_multi(a, A, qa, b, B, qb,
                                                     pc.box, pcap, ts, scale);
          for (std::size_t k = 0; k < ts.size(); ++k) {
            if (dense[k] != smart_vals) {
              ok = false;
              detail = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") t=" + to_string(ts[k]);
            }
          }
        }
      }
      line["pass"] = ok;
      if (!ok) line["detail"] = detail;
      (ok ? passed : failed)++;
    } catch (const std::exception& ex) {
      line["pass"] = false;
      line["detail"] = ex.what();
      ++failed;
    }
    std::cout << line.dump() << "\n";
  }

  json summary;
  summary["summary"] = true;
  summary["passed"] = passed;
  summary["failed"] = failed;
  std::cout << summary.dump() << "\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact b-polynomial root sets of monomial ideals"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string spec, spec_b, expr;
  long two_gen_max = 8, three_gen_max = 5;
  std::size_t limit = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", flags.cap, "value cap for root enumeration (rational)");
    cmd->add_option("--box", flags.box, "working box override");
    cmd->add_option("--jobs", flags.jobs, "worker threads");
    cmd->add_flag("--table", flags.table, "human-readable output");
  };

  CLI::App* roots_cmd = app.add_subcommand("roots", "root set of b_a");
  roots_cmd->add_option("ideal", spec, "ideal spec (term string or JSON)")->required();
  add_common(roots_cmd);

  CLI::App* modz_cmd = app.add_subcommand("modz", "root classes mod Z");
  modz_cmd->add_option("ideal", spec)->required();
  add_common(modz_cmd);

  CLI::App* faces_cmd = app.add_subcommand("faces", "face lattice of the Newton polyhedron");
  faces_cmd->add_option("ideal", spec)->required();
  add_common(faces_cmd);

  CLI::App* ts_cmd = app.add_subcommand("check-ts", "product root-set comparison");
  ts_cmd->add_option("ideal_a", spec)->required();
  ts_cmd->add_option("ideal_b", spec_b)->required();
  add_common(ts_cmd);

  CLI::App* bp_cmd = app.add_subcommand("bpoly", "b-polynomial algebra");
  bp_cmd->add_option("expression", expr)->required();
  add_common(bp_cmd);

  CLI::App* ov_cmd = app.add_subcommand("oracle-verify", "dense-oracle verification");
  ov_cmd->add_option("--two-gen-max", two_gen_max, "exponent bound for 1- and 2-generator entries");
  ov_cmd->add_option("--three-gen-max", three_gen_max, "exponent bound for 3-generator entries");
  ov_cmd->add_option("--limit", limit, "verify only the first N entries");
  add_common(ov_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (roots_cmd->parsed()) rc = run_roots(spec, flags);
    else if (modz_cmd->parsed()) rc = run_modz(spec, flags);
    else if (faces_cmd->parsed()) rc = run_faces(spec, flags);
    else if (ts_cmd->parsed()) rc = run_check_ts(spec, spec_b, flags);
    else if (bp_cmd->parsed()) rc = run_bpoly(expr, flags);
    else if (ov_cmd->parsed())
      rc = run_oracle_verify(two_gen_max, three_gen_max, limit, flags);
  } catch (const StabilizationError& e) {
    std::cerr << "stabilization failure: " << e.what() << "\n";
    return kExitStabilization;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "elapsed_ms=" << elapsed << "\n";
  return rc;
}
