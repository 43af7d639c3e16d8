#include "trioperad/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "trioperad/combinatorics.hpp"
#include "trioperad/complexes.hpp"
#include "trioperad/dendriform_algebra.hpp"
#include "trioperad/koszul_duality.hpp"
#include "trioperad/series.hpp"
#include "trioperad/simplex_algebra.hpp"

namespace trioperad {

using nlohmann::json;

json Report::to_json() const {
  return json{{"command", command}, {"pass", pass}, {"witnesses", witnesses}, {"payload", payload}};
}

std::string Report::render() const {
  if (text) return *text;
  return to_json().dump(2) + "\n";
}

namespace {

json check_json(const CheckReport& r) {
  json j{{"pass", r.pass}, {"cases", r.cases}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

void absorb(Report& report, const CheckReport& r) {
  if (!r.pass) {
    report.pass = false;
    report.witnesses.push_back(r.witness.value_or("check failed"));
  }
}

void absorb(Report& report, bool ok, const std::string& what) {
  if (!ok) {
    report.pass = false;
    report.witnesses.push_back(what);
  }
}

TriOp parse_tri_op(const std::string& s) {
  if (s == "left") return TriOp::Left;
  if (s == "right") return TriOp::Right;
  if (s == "mid") return TriOp::Middle;
  throw ParseError("unknown operation '" + s + "' (expected left|right|mid)");
}

DendOp parse_dend_op(const std::string& s) {
  if (s == "prec") return DendOp::Prec;
  if (s == "succ") return DendOp::Succ;
  if (s == "mid") return DendOp::Mid;
  if (s == "star") return DendOp::Star;
  throw ParseError("unknown operation '" + s + "' (expected prec|succ|mid|star)");
}

// --- section builders shared by subcommands and certify-all --------------

json dg_json(const DgReport& r, bool& discovery_ok) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) {
    json j{{"family", to_string(o.family)},
           {"op", to_string(o.op)},
           {"degree_convention", to_string(o.convention)},
           {"universal", o.universal},
           {"holds_on_generator_pair", o.holds_on_generator_pair},
           {"cases", o.cases}};
    if (o.family != DgRuleFamily::Printed) j["eps"] = {o.eps_right, o.eps_left};
    j["counterexample"] = o.counterexample ? json(*o.counterexample) : json(nullptr);
    outcomes.push_back(std::move(j));
  }
  json corrections = json::array();
  for (const auto* o : r.universal_corrections()) corrections.push_back(o->describe());

  const bool left = r.printed_rule_universal(TriOp::Left);
  const bool right = r.printed_rule_universal(TriOp::Right);
  const bool mid = r.printed_rule_universal(TriOp::Middle);
  const bool mid_fails_on_gen = r.printed_rule_fails_on_generator(TriOp::Middle);
  discovery_ok = r.universal_corrections().size() == 1 && !mid && mid_fails_on_gen;
  return json{{"max_arity", r.max_arity},
              {"printed_left_universal", left},
              {"printed_right_universal", right},
              {"printed_mid_universal", mid},
              {"printed_mid_fails_on_generator_pair", mid_fails_on_gen},
              {"universal_corrections", corrections},
              {"unique_correction", r.universal_corrections().size() == 1},
              {"outcomes", outcomes}};
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json duality_json(bool with_matrix, bool& ok) {
  const DualityCertificate cert = certify_duality();
  const DualityCertificate control =
      certify_duality(perturbed_trialgebra_relations(), dendriform_relation_vectors());
  const AssociativeDiagonalReport diag = check_associative_diagonal();
  json tried = json::array();
  for (const auto& c : cert.tried) tried.push_back(to_string(c));
  json j{{"pairing_convention", to_string(cert.convention)},
         {"conventions_tried", tried},
         {"ranks", {{"trialgebra", cert.trialgebra_rank}, {"dendriform", cert.dendriform_rank}}},
         {"space_dimension", cert.space_dimension},
         {"pairing_nondegenerate", cert.pairing_nondegenerate},
         {"orthogonal", cert.orthogonal},
         {"complement_dimension", cert.complement_dimension},
         {"complement_matches", cert.complement_matches},
         {"zero_matrix_checksum", to_string(cert.zero_matrix_checksum())},
         {"negative_control_orthogonal", control.orthogonal},
         {"associative_diagonal",
          {{"trialgebra_collapses", diag.trialgebra_collapses},
           {"star_associativity_in_span", diag.star_associativity_in_span},
           {"associative_self_dual", diag.associative_self_dual}}}};
  if (with_matrix) j["pairing_matrix"] = matrix_json(cert.pairing_matrix);
  ok = cert.pass && !control.orthogonal && diag.pass();
  j["pass"] = ok;
  return j;
}

json complex_json(ComplexFamily family, unsigned w, const ComplexOptions& opts, bool want_dims,
                  bool want_d2, bool want_betti, bool& ok, std::string& witness) {
  const GradedComplex c = build_complex(family, w, opts);
  json j{{"family", to_string(family)}, {"weight", w}};
  std::optional<HomologyRanks> h;
  if (c.d_squared_zero && (want_dims || want_betti)) h = homology_ranks(c);
  if (want_dims) {
    json per_n = json::array();
    for (unsigned n = 1; n <= w; ++n) {
      json e{{"n", n}, {"dim", c.dims[n]}};
      if (h) e["rank_d"] = h->rank_d[n];
      per_n.push_back(std::move(e));
    }
    j["per_n"] = per_n;
  }
  ok = c.d_squared_zero;
  if (want_d2) j["d_squared_zero"] = c.d_squared_zero;
  if (!c.d_squared_zero) witness = c.d_squared_witness.value_or("d^2 != 0");
  if (want_betti) {
    if (h) {
      j["betti"] = std::vector<std::size_t>(h->betti.begin() + 1, h->betti.end());
      j["koszul_profile"] = koszul_profile(w, *h);
      if (!koszul_profile(w, *h)) {
        ok = false;
        witness = "homology of the " + to_string(family) + " complex at weight " +
                  std::to_string(w) + " is not concentrated at (n, w) = (1, 1)";
      }
    } else {
      j["betti"] = nullptr;
    }
  }
  return j;
}

json series_identities_json(const SeriesIdentities& s) {
  auto strings = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
  };
  return json{{"order", s.order},
              {"delta_after_stasheff", s.delta_after_stasheff},
              {"stasheff_after_delta", s.stasheff_after_delta},
              {"closed_form_is_inverse", s.closed_form_is_inverse},
              {"cube_self_inverse", s.cube_self_inverse},
              {"invert_involutive", s.invert_involutive},
              {"catalan_t0", strings(s.catalan)},
              {"super_catalan_t1", strings(s.super_catalan)},
              {"pass", s.pass()}};
}

std::string one_line(const Report& r) {
  std::string s = std::string(r.pass ? "pass" : "FAIL");
  for (const auto& w : r.witnesses) s += "\n  " + w;
  return s + "\n";
}

// --- subcommands ---------------------------------------------------------

Report cmd_cells(const std::string& family, unsigned n, const std::string& format) {
  Report r;
  json cells = json::array();
  std::vector<std::size_t> by_degree;
  std::string text;
  auto emit = [&](const std::string& lit) {
    cells.push_back(lit);
    text += lit + "\n";
  };
  if (family == "simplex") {
    auto v = enumerate_subset_cells(n);
    for (const auto& c : v) emit(to_string(c));
    by_degree = count_by_degree(std::span<const SubsetCell>(v));
  } else if (family == "tree") {
    auto v = enumerate_planar_trees(n + 1);
    for (const auto& t : v) emit(to_string(t));
    by_degree = count_by_degree(std::span<const PlanarTree>(v));
  } else {
    auto v = enumerate_cube_cells(n);
    for (const auto& c : v) emit(to_string(c));
    by_degree = count_by_degree(std::span<const CubeCell>(v));
  }
  r.payload = json{{"family", family}, {"arity", n}, {"count", cells.size()},
                   {"by_degree", by_degree}, {"cells", cells}};
  if (format == "text") r.text = text;
  return r;
}

Report cmd_tri_mul(const std::string& op, const std::string& xs, const std::string& ys,
                   const std::string& format) {
  Report r;
  const SubsetCell x = parse_subset(xs), y = parse_subset(ys);
  const SubsetCell z = tri_product(parse_tri_op(op), x, y);
  r.payload = json{{"op", op}, {"x", to_string(x)}, {"y", to_string(y)}, {"result", to_string(z)}};
  if (format == "text") r.text = to_string(z) + "\n";
  return r;
}

Report cmd_tri_gamma(const std::vector<std::string>& literals, const std::string& format) {
  Report r;
  if (literals.empty()) throw ParseError("gamma needs X followed by one cell per element of [n]");
  const SubsetCell x = parse_subset(literals[0]);
  std::vector<SubsetCell> args;
  for (std::size_t k = 1; k < literals.size(); ++k) args.push_back(parse_subset(literals[k]));
  const SubsetCell z = gamma(x, args);
  r.payload = json{{"x", to_string(x)}, {"args", std::vector<std::string>(literals.begin() + 1,
                                                                          literals.end())},
                   {"result", to_string(z)}};
  if (format == "text") r.text = to_string(z) + "\n";
  return r;
}

Report cmd_tri_boundary(const std::string& xs, const std::string& format) {
  Report r;
  const SubsetCell x = parse_subset(xs);
  const TriElem d = boundary(x);
  json terms = json::array();
  for (const auto& [c, q] : d) terms.push_back({{"cell", to_string(c)}, {"coeff", to_string(q)}});
  r.payload = json{{"x", to_string(x)}, {"boundary", to_string(d)}, {"terms", terms}};
  if (format == "text") r.text = to_string(d) + "\n";
  return r;
}

Report cmd_check(const CheckReport& c, const std::string& key, unsigned bound,
                 const std::string& format) {
  Report r;
  absorb(r, c);
  r.payload = check_json(c);
  r.payload[key] = bound;
  if (format == "text") r.text = one_line(r);
  return r;
}

Report cmd_tri_check_dg(unsigned max_arity, const std::string& format) {
  Report r;
  bool ok = false;
  r.payload = dg_json(check_dg_rules(max_arity), ok);
  absorb(r, ok, "dg-rule discovery did not isolate a unique universal correction");
  if (format == "text") {
    std::ostringstream s;
    const auto& p = r.payload;
    s << "printed -| rule universal: " << p["printed_left_universal"] << "\n"
      << "printed |- rule universal: " << p["printed_right_universal"] << "\n"
      << "printed _|_ rule universal: " << p["printed_mid_universal"]
      << " (fails on generator pair: " << p["printed_mid_fails_on_generator_pair"] << ")\n";
    for (const auto& c : p["universal_corrections"]) s << "universal: " << c.get<std::string>() << "\n";
    r.text = s.str() + one_line(r);
  }
  return r;
}

Report cmd_dend_mul(const std::string& op, const std::string& ts, const std::string& us,
                    const std::string& format) {
  Report r;
  const PlanarTree x = parse_tree(ts), y = parse_tree(us);
  const DendOp o = parse_dend_op(op);
  const DendElem z = o == DendOp::Star ? star(x, y) : dend_product(o, x, y);
  json terms = json::array();
  for (const auto& [t, q] : z) terms.push_back({{"tree", to_string(t)}, {"coeff", to_string(q)}});
  r.payload = json{{"op", op}, {"x", to_string(x)}, {"y", to_string(y)},
                   {"result", to_string(z)}, {"terms", terms}};
  if (format == "text") r.text = to_string(z) + "\n";
  return r;
}

Report cmd_dend_power(unsigned n, const std::string& format) {
  Report r;
  const DendElem p = star_power(n);
  const auto trees = enumerate_planar_trees(n + 1);
  DendElem all;
  for (const auto& t : trees) all.add(t, 1);
  const bool equal = p == all;
  absorb(r, equal, "a^*" + std::to_string(n) + " is not the sum of all trees with " +
                       std::to_string(n + 1) + " leaves");
  r.payload = json{{"n", n}, {"terms", p.size()}, {"tree_count", trees.size()},
                   {"equals_sum_of_all_trees", equal}, {"result", to_string(p)}};
  if (format == "text") r.text = to_string(p) + "\n";
  return r;
}

Report cmd_koszul(const std::string& format) {
  Report r;
  bool ok = false;
  r.payload = duality_json(true, ok);
  absorb(r, ok, "duality certificate failed");
  if (format == "text") r.text = one_line(r);
  return r;
}

Report cmd_complex_build(const std::string& family, unsigned w, const std::string& parts,
                         const ComplexOptions& opts, const std::string& format) {
  Report r;
  bool want_dims = false, want_d2 = false, want_betti = false;
  std::stringstream ss(parts);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "dims") want_dims = true;
    else if (item == "d2") want_d2 = true;
    else if (item == "betti") want_betti = true;
    else throw ParseError("unknown report item '" + item + "' (expected dims,d2,betti)");
  }
  bool ok = false;
  std::string witness;
  r.payload = complex_json(parse_family(family), w, opts, want_dims, want_d2, want_betti, ok,
                           witness);
  r.payload["simplex_table"] = to_string(opts.simplex_table);
  r.payload["tree_convention"] = to_string(opts.tree_convention);
  absorb(r, ok, witness);
  if (format == "text") r.text = r.payload.dump() + "\n";
  return r;
}

Report cmd_complex_sweep(unsigned max_weight, const std::string& format) {
  Report r;
  const ConventionSweep sweep = sweep_conventions(max_weight);
  json cands = json::array();
  for (const auto& c : sweep.candidates)
    cands.push_back({{"family", to_string(c.family)},
                     {"label", c.label},
                     {"d_squared_failures", c.d_squared_failures},
                     {"homology_failures", c.homology_failures},
                     {"valid", c.valid()}});
  r.payload = json{{"max_weight", max_weight}, {"candidates", cands}};
  r.payload["selected_simplex_table"] =
      sweep.simplex_table ? json(to_string(*sweep.simplex_table)) : json(nullptr);
  r.payload["selected_tree_convention"] =
      sweep.tree_convention ? json(to_string(*sweep.tree_convention)) : json(nullptr);
  absorb(r, sweep.simplex_table.has_value(), "no unique valid simplex face table");
  absorb(r, sweep.tree_convention.has_value(), "no unique valid tree face convention");
  if (format == "text") {
    std::string s;
    for (const auto& c : sweep.candidates)
      s += c.label + ": " + (c.valid() ? "valid" : "invalid") + "\n";
    r.text = s + one_line(r);
  }
  return r;
}

Report cmd_series(const std::string& family, unsigned order, const std::optional<std::string>& t_eval,
                  const std::string& format) {
  Report r;
  if (order < 1) throw DomainError("--order must be >= 1");
  const TSeries f = make_series(parse_series_family(family), order);
  json coeffs = json::array();
  std::string csv = "n,coefficient\n", text;
  if (t_eval) {
    const Rational q = parse_rational(*t_eval);
    const auto values = f.evaluate(q);
    for (unsigned n = 1; n <= order; ++n) {
      coeffs.push_back(to_string(values[n]));
      csv += std::to_string(n) + "," + to_string(values[n]) + "\n";
      text += (n > 1 ? " " : "") + to_string(values[n]);
    }
    r.payload["t_eval"] = to_string(q);
  } else {
    for (unsigned n = 1; n <= order; ++n) {
      json tc = json::array();
      for (const auto& c : f[n].coefficients()) tc.push_back(to_string(c));
      coeffs.push_back({{"poly", to_string(f[n])}, {"t_coefficients", tc}});
      csv += std::to_string(n) + "," + to_string(f[n]) + "\n";
      text += "x^" + std::to_string(n) + ": " + to_string(f[n]) + "\n";
    }
  }
  r.payload["family"] = family;
  r.payload["order"] = order;
  r.payload["coefficients"] = coeffs;
  if (format == "csv") r.text = csv;
  if (format == "text") r.text = t_eval ? text + "\n" : text;
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

Report certify_all(CertifyLevel level) {
  Report r;
  json sections = json::array();
  auto section = [&](const std::string& name, json details, bool ok, const std::string& witness) {
    details["name"] = name;
    details["pass"] = ok;
    sections.push_back(std::move(details));
    absorb(r, ok, name + ": " + witness);
  };
  auto check = [&](const std::string& name, const CheckReport& c) {
    section(name, check_json(c), c.pass, c.witness.value_or(""));
  };

  check("operad_axioms", check_operad_axioms(6));
  check("trialgebra_relations", check_trialgebra_relations(9));
  check("dendriform_relations", check_dendriform_relations(10));
  check("star_associativity", star_associativity(9));

  bool dg_ok = false;
  json dg = dg_json(check_dg_rules(6), dg_ok);
  dg.erase("outcomes");
  section("dg_rule_discovery", dg, dg_ok, "no unique universal correction");

  bool duality_ok = false;
  json duality = duality_json(false, duality_ok);
  section("duality_certificate", duality, duality_ok, "duality certificate failed");

  const unsigned max_w = level == CertifyLevel::Quick ? 4 : 5;
  for (ComplexFamily fam : {ComplexFamily::SimplexCoeff, ComplexFamily::TreeCoeff})
    for (unsigned w = 1; w <= max_w; ++w) {
      bool ok = false;
      std::string witness;
      json c = complex_json(fam, w, {}, false, true, true, ok, witness);
      section("complex_" + to_string(fam) + "_w" + std::to_string(w), c, ok, witness);
    }

  const SeriesIdentities s = check_series_identities(12);
  section("series_identities", series_identities_json(s), s.pass(), "series identity failed");

  r.payload = json{{"level", level == CertifyLevel::Quick ? "quick" : "full"},
                   {"sections", sections}};
  return r;
}

Report run(const std::vector<std::string>& args) {
  Report report;
  const std::string command = join(args);

  CLI::App app{"Exact checks for associative and dendriform trialgebras", "trioperad"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format;
  auto add_format = [&](CLI::App* sub, const std::string& def, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->default_str(def);
  };
  std::string family, op, x, y, parts = "dims,d2,betti", table = "swapped", level = "quick";
  std::optional<std::string> t_eval;
  std::vector<std::string> literals;
  unsigned n = 0, rel_arity = 9, dg_arity = 6, operad_arity = 6, max_leaves = 10, weight = 0,
           order = 12, leaf_offset = 1, max_weight = 3;
  bool mirrored = false;

  auto* cells = app.add_subcommand("cells", "Enumerate cells of the simplex, associahedron or cube");
  cells->add_option("--family", family, "simplex|tree|cube")
      ->required()
      ->check(CLI::IsMember({"simplex", "tree", "cube"}));
  cells->add_option("--n", n, "Arity n (trees have n+1 leaves)")->required();
  add_format(cells, "json", {"json", "text"});

  auto* tri = app.add_subcommand("tri", "Free associative trialgebra");
  tri->require_subcommand(1);
  auto* tri_mul = tri->add_subcommand("mul", "x -| y, x |- y or x _|_ y on subset cells");
  tri_mul->add_option("--op", op, "left|right|mid")->required();
  tri_mul->add_option("X", x)->required();
  tri_mul->add_option("Y", y)->required();
  add_format(tri_mul, "text", {"json", "text"});
  auto* tri_rel = tri->add_subcommand("check-relations", "The eleven relations, exhaustively");
  tri_rel->add_option("--max-arity", rel_arity, "Bound on the arity sum")->capture_default_str();
  add_format(tri_rel, "json", {"json", "text"});
  auto* tri_dg = tri->add_subcommand("check-dg", "Differential-graded rule discovery");
  tri_dg->add_option("--max-arity", dg_arity, "Bound on the arity sum")->capture_default_str();
  add_format(tri_dg, "json", {"json", "text"});
  auto* tri_bd = tri->add_subcommand("boundary", "Simplicial boundary of a cell");
  tri_bd->add_option("X", x)->required();
  add_format(tri_bd, "text", {"json", "text"});
  auto* tri_op = tri->add_subcommand("check-operad", "Operad axioms of gamma, exhaustively");
  tri_op->add_option("--max-arity", operad_arity, "Bound on the total arity")->capture_default_str();
  add_format(tri_op, "json", {"json", "text"});
  auto* tri_gamma = tri->add_subcommand("gamma", "gamma(X; Y1, ..., Yn)");
  tri_gamma->add_option("cells", literals, "X followed by Y1 .. Yn")->required();
  add_format(tri_gamma, "text", {"json", "text"});

  auto* dend = app.add_subcommand("dend", "Free dendriform trialgebra");
  dend->require_subcommand(1);
  auto* dend_mul = dend->add_subcommand("mul", "x < y, x > y, x . y or x * y on planar trees");
  dend_mul->add_option("--op", op, "prec|succ|mid|star")->required();
  dend_mul->add_option("T1", x)->required();
  dend_mul->add_option("T2", y)->required();
  add_format(dend_mul, "text", {"json", "text"});
  auto* dend_rel = dend->add_subcommand("check-relations", "The seven relations, exhaustively");
  dend_rel->add_option("--max-leaves", max_leaves, "Bound on the total leaf count")->capture_default_str();
  add_format(dend_rel, "json", {"json", "text"});
  auto* dend_pow = dend->add_subcommand("power", "The n-fold * power of the generator");
  dend_pow->add_option("--n", n, "Number of factors")->required();
  add_format(dend_pow, "text", {"json", "text"});

  auto* koszul = app.add_subcommand("koszul", "Quadratic duality");
  koszul->require_subcommand(1);
  auto* certify = koszul->add_subcommand("certify", "Orthogonality certificate of the relations");
  add_format(certify, "json", {"json", "text"});

  auto* complex = app.add_subcommand("complex", "Koszul chain complexes on free algebras");
  complex->require_subcommand(1);
  auto* build = complex->add_subcommand("build", "Build one weight of a complex");
  build->add_option("--family", family, "simplex|tree")
      ->required()
      ->check(CLI::IsMember({"simplex", "tree"}));
  build->add_option("--weight", weight, "Weight w >= 1")->required();
  build->add_option("--report", parts, "Comma-separated subset of dims,d2,betti");
  build->add_option("--simplex-table", table, "Simplex face table")
      ->check(CLI::IsMember({"printed", "swapped"}));
  build->add_option("--leaf-offset", leaf_offset, "Tree face d_i removes leaf i + offset");
  build->add_flag("--mirrored", mirrored, "Swap the Left/Right leaf assignment");
  add_format(build, "json", {"json", "text"});
  auto* sweep = complex->add_subcommand("sweep", "Test every face convention candidate");
  sweep->add_option("--max-weight", max_weight, "Largest weight tested")->capture_default_str();
  add_format(sweep, "json", {"json", "text"});

  auto* series = app.add_subcommand("series", "Generating series");
  series->add_option("--family", family, "delta|stasheff|cube")
      ->required()
      ->check(CLI::IsMember({"delta", "stasheff", "cube"}));
  series->add_option("--order", order, "Truncation order N")->capture_default_str();
  series->add_option("--t-eval", t_eval, "Evaluate the coefficients at t = q");
  add_format(series, "json", {"json", "csv", "text"});

  auto* all = app.add_subcommand("certify-all", "Run every check");
  all->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
  add_format(all, "json", {"json", "text"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.text = app.help();
    report.command = command;
    return report;
  } catch (const CLI::CallForAllHelp&) {
    report.text = app.help("", CLI::AppFormatMode::All);
    report.command = command;
    return report;
  } catch (const CLI::ParseError& e) {
    report.command = command;
    report.pass = false;
    std::string msg = e.what();
    // Name the tokens that matched nothing, on the deepest parsed level.
    CLI::App* level = &app;
    for (bool deeper = true; deeper;) {
      deeper = false;
      for (auto* sub : level->get_subcommands())
        if (sub->parsed()) {
          level = sub;
          deeper = true;
          break;
        }
    }
    for (const auto& token : level->remaining()) msg += "\nunexpected token '" + token + "'";
    report.usage_error = msg + "\nRun with --help for usage.";
    return report;
  }

  // The format option is shared; fall back to each subcommand's default.
  auto fmt = [&](CLI::App* sub) {
    return format.empty() ? sub->get_option("--format")->get_default_str() : format;
  };

  try {
    if (cells->parsed()) {
      report = cmd_cells(family, n, fmt(cells));
    } else if (tri_mul->parsed()) {
      report = cmd_tri_mul(op, x, y, fmt(tri_mul));
    } else if (tri_rel->parsed()) {
      report = cmd_check(check_trialgebra_relations(rel_arity), "max_arity", rel_arity, fmt(tri_rel));
    } else if (tri_dg->parsed()) {
      report = cmd_tri_check_dg(dg_arity, fmt(tri_dg));
    } else if (tri_bd->parsed()) {
      report = cmd_tri_boundary(x, fmt(tri_bd));
    } else if (tri_op->parsed()) {
      report = cmd_check(check_operad_axioms(operad_arity), "max_arity", operad_arity, fmt(tri_op));
    } else if (tri_gamma->parsed()) {
      report = cmd_tri_gamma(literals, fmt(tri_gamma));
    } else if (dend_mul->parsed()) {
      report = cmd_dend_mul(op, x, y, fmt(dend_mul));
    } else if (dend_rel->parsed()) {
      report = cmd_check(check_dendriform_relations(max_leaves), "max_leaves", max_leaves,
                         fmt(dend_rel));
    } else if (dend_pow->parsed()) {
      report = cmd_dend_power(n, fmt(dend_pow));
    } else if (certify->parsed()) {
      report = cmd_koszul(fmt(certify));
    } else if (build->parsed()) {
      ComplexOptions opts;
      opts.simplex_table = table == "printed" ? SimplexFaceTable::Printed : SimplexFaceTable::Swapped;
      opts.tree_convention = TreeFaceConvention{leaf_offset, mirrored};
      report = cmd_complex_build(family, weight, parts, opts, fmt(build));
    } else if (sweep->parsed()) {
      report = cmd_complex_sweep(max_weight, fmt(sweep));
    } else if (series->parsed()) {
      report = cmd_series(family, order, t_eval, fmt(series));
    } else if (all->parsed()) {
      report = certify_all(level == "full" ? CertifyLevel::Full : CertifyLevel::Quick);
      if (fmt(all) == "text") report.text = one_line(report);
    }
  } catch (const ParseError& e) {
    report = Report{};
    report.pass = false;
    report.usage_error = e.what();
  } catch (const DomainError& e) {
    report = Report{};
    report.pass = false;
    report.usage_error = e.what();
  }
  report.command = command;
  return report;
}

}  // namespace trioperad
