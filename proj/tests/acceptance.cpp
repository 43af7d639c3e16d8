// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff every
// selected criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "trioperad/complexes.hpp"
#include "trioperad/dendriform_algebra.hpp"
#include "trioperad/koszul_duality.hpp"
#include "trioperad/series.hpp"
#include "trioperad/simplex_algebra.hpp"

using namespace trioperad;

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> body;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

Outcome operad_axioms_criterion() {
  const auto r = check_operad_axioms(6);
  return {r.pass, std::to_string(r.cases) + " cases, arity <= 6" +
                      (r.witness ? "; " + *r.witness : "")};
}

Outcome trialgebra_relations_criterion() {
  const auto r = check_trialgebra_relations(9);
  return {r.pass, "11 relations, " + std::to_string(r.cases) + " cases, arity <= 9" +
                      (r.witness ? "; " + *r.witness : "")};
}

Outcome dendriform_relations_criterion() {
  const auto r = check_dendriform_relations(10);
  const auto s = star_associativity(10);
  std::string d = "7 relations, " + std::to_string(r.cases) + " cases; * associative on " +
                  std::to_string(s.cases) + " cases; leaves <= 10";
  if (r.witness) d += "; " + *r.witness;
  if (s.witness) d += "; " + *s.witness;
  return {r.pass && s.pass, d};
}

Outcome free_dimensions_criterion() {
  // Span of the generator under the three products, arity by arity.
  std::vector<std::set<SubsetCell>> level(11);
  level[1].insert(simplex_unit());
  bool ok = true;
  std::string bad;
  for (unsigned n = 2; n <= 10; ++n)
    for (unsigned a = 1; a < n; ++a)
      for (const auto& x : level[a])
        for (const auto& y : level[n - a])
          for (TriOp op : {TriOp::Left, TriOp::Right, TriOp::Middle})
            level[n].insert(tri_product(op, x, y));
  const TPoly t = TPoly::t();
  TPoly pow(1);
  for (unsigned n = 1; n <= 10; ++n) {
    pow *= 1 + t;
    std::vector<Rational> counts(n);
    for (const auto& c : level[n]) counts[c.elements().size() - 1] += 1;
    const TPoly poincare(counts);
    if (level[n].size() != (std::size_t{1} << n) - 1 || poincare != (pow - 1).divide_exact(t)) {
      ok = false;
      bad = "arity " + std::to_string(n) + " has " + std::to_string(level[n].size()) +
            " cells, polynomial " + to_string(poincare);
      break;
    }
  }
  std::vector<std::size_t> dend;
  for (unsigned n = 1; n <= 5; ++n) dend.push_back(generated_rank(n));
  const bool dend_ok = dend == std::vector<std::size_t>{1, 3, 11, 45, 197};
  std::string d = "trialgebra 2^n-1 cells with ((1+t)^n-1)/t for n <= 10";
  if (!ok) d += " FAILED at " + bad;
  d += "; dendriform ranks for 2..6 leaves " + join(dend);
  return {ok && dend_ok, d};
}

Outcome duality_criterion() {
  const auto c = certify_duality();
  const auto neg = certify_duality(perturbed_trialgebra_relations(), dendriform_relation_vectors());
  const bool zero = c.pairing_matrix.rows() == 11 && c.pairing_matrix.cols() == 7 &&
                    c.pairing_matrix.is_zero();
  const bool ok = c.pass && c.trialgebra_rank == 11 && c.dendriform_rank == 7 &&
                  c.space_dimension == 18 && zero && !neg.orthogonal;
  return {ok, "ranks " + std::to_string(c.trialgebra_rank) + "+" + std::to_string(c.dendriform_rank) +
                  "=" + std::to_string(c.space_dimension) + ", 11x7 pairing " +
                  (zero ? "zero" : "nonzero") + " under " + to_string(c.convention) +
                  ", perturbed relation 8 " + (neg.orthogonal ? "still orthogonal" : "breaks orthogonality")};
}

Outcome chain_complexes_criterion() {
  bool pinned_ok = true;
  std::string d = "pinned tables: d^2 = 0 for w <= 5 in both families";
  for (unsigned w = 1; w <= 5; ++w)
    for (auto f : {ComplexFamily::SimplexCoeff, ComplexFamily::TreeCoeff})
      if (!build_complex(f, w).d_squared_zero) {
        pinned_ok = false;
        d = "pinned tables: d^2 != 0 for " + to_string(f) + " at w = " + std::to_string(w);
      }
  // The as-written case table for the simplex face must itself give d^2 = 0.
  ComplexOptions printed;
  printed.simplex_table = SimplexFaceTable::Printed;
  unsigned first_bad = 0;
  for (unsigned w = 1; w <= 5 && !first_bad; ++w)
    if (!build_complex(ComplexFamily::SimplexCoeff, w, printed).d_squared_zero) first_bad = w;
  const bool tree_matches = kTreeFaceConvention == TreeFaceConvention{1, false};
  if (first_bad)
    d += "; printed simplex table (i not in X, i+1 in X -> <) gives d^2 != 0 at w = " +
         std::to_string(first_bad) + ", only the swapped table works";
  else
    d += "; printed simplex table gives d^2 = 0";
  d += tree_matches ? "; tree table (left leaf -> -|) matches" : "; tree table differs";
  return {pinned_ok && !first_bad && tree_matches, d};
}

Outcome koszulness_criterion() {
  bool ok = true;
  std::string d;
  for (auto f : {ComplexFamily::SimplexCoeff, ComplexFamily::TreeCoeff}) {
    for (unsigned w = 1; w <= 5; ++w) {
      const auto c = build_complex(f, w);
      if (!c.d_squared_zero) {
        ok = false;
        d += to_string(f) + " w=" + std::to_string(w) + " d^2 != 0; ";
        continue;
      }
      const auto h = homology_ranks(c);
      if (!koszul_profile(w, h)) {
        ok = false;
        d += to_string(f) + " w=" + std::to_string(w) + " betti " +
             join(std::vector<std::size_t>(h.betti.begin() + 1, h.betti.end())) + "; ";
      }
    }
  }
  if (ok) d = "betti = 1 at (1,1), 0 elsewhere, both families, w <= 5";
  return {ok, d};
}

Outcome series_identities_criterion() {
  const auto s = check_series_identities(12);
  std::string d = std::string("compose both ways ") +
                  (s.delta_after_stasheff && s.stasheff_after_delta ? "= x" : "!= x") +
                  ", closed form " + (s.closed_form_is_inverse ? "=" : "!=") + " inverse, cube " +
                  (s.cube_self_inverse ? "self-inverse" : "not self-inverse") +
                  ", order 12; t=0 gives " + join(s.catalan) + "; t=1 gives " + join(s.super_catalan);
  return {s.pass(), d};
}

Outcome dg_discovery_criterion() {
  const DgReport r = check_dg_rules(6);
  const bool left = r.printed_rule_universal(TriOp::Left);
  const bool right = r.printed_rule_universal(TriOp::Right);
  const bool mid_fails = !r.printed_rule_universal(TriOp::Middle) &&
                         r.printed_rule_fails_on_generator(TriOp::Middle);
  const auto fixes = r.universal_corrections();
  std::string d = std::string("printed -| ") + (left ? "universal" : "fails") + ", printed |- " +
                  (right ? "universal" : "fails");
  if (!right)
    for (const auto& o : r.outcomes)
      if (o.family == DgRuleFamily::Printed && o.op == TriOp::Right && o.counterexample) {
        d += " (" + *o.counterexample + ")";
        break;
      }
  d += std::string(", printed _|_ ") + (mid_fails ? "fails on the generator pair" : "not refuted");
  d += ", " + std::to_string(fixes.size()) + " universal correction";
  if (fixes.size() == 1) d += ": " + fixes[0]->describe();
  return {left && right && mid_fails && fixes.size() == 1, d};
}

Outcome star_powers_criterion() {
  bool ok = true;
  std::string d;
  for (unsigned n = 1; n <= 5; ++n) {
    DendElem all;
    for (const auto& t : enumerate_planar_trees(n + 1)) all.add(t, 1);
    const DendElem p = star_power(n);
    if (p != all) ok = false;
    d += (n > 1 ? "," : "") + std::to_string(p.size());
  }
  return {ok && star_power(3).size() == 11, "term counts for n = 1..5: " + d};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run only this criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "operad axioms", 10, operad_axioms_criterion},
      {2, "trialgebra relations", 60, trialgebra_relations_criterion},
      {3, "dendriform relations", 60, dendriform_relations_criterion},
      {4, "free-algebra dimensions", 0, free_dimensions_criterion},
      {5, "duality certificate", 1, duality_criterion},
      {6, "chain complexes", 0, chain_complexes_criterion},
      {7, "koszulness", 300, koszulness_criterion},
      {8, "series identities", 1, series_identities_criterion},
      {9, "dg-rule discovery", 0, dg_discovery_criterion},
      {10, "star powers", 0, star_powers_criterion},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || s < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::string timing = seconds(s);
    if (c.limit_seconds > 0) timing += " (limit " + seconds(c.limit_seconds) + ")";
    if (!in_time) timing += " over limit";
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << o.details
              << ", " << timing << std::endl;
  }
  return all ? 0 : 1;
}
