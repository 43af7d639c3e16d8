#include "doctest.h"
#include "trioperad/errors.hpp"
#include "oracles.hpp"
#include "trioperad/dendriform_algebra.hpp"

using namespace trioperad;

namespace {

PlanarTree tree(const char* s) { return parse_tree(s); }

DendElem sum_of(std::initializer_list<const char*> trees) {
  DendElem out;
  for (const char* t : trees) out.add(parse_tree(t), 1);
  return out;
}

oracle::Sum as_sum(const DendElem& x) {
  oracle::Sum out;
  for (const auto& [t, c] : x) out[to_string(t)] = c.get_num().get_si();
  return out;
}

}  // namespace

TEST_SUITE("dendriform_algebra") {

TEST_CASE("products of the generator") {
  const PlanarTree a = dendriform_generator();
  CHECK(dend_product(DendOp::Mid, a, a) == DendElem(tree("(|,|,|)")));
  CHECK(dend_product(DendOp::Prec, a, a) == DendElem(tree("(|,(|,|))")));
  CHECK(dend_product(DendOp::Succ, a, a) == DendElem(tree("((|,|),|)")));
  CHECK(dend_product(DendOp::Star, a, a) == sum_of({"(|,|,|)", "(|,(|,|))", "((|,|),|)"}));
}

TEST_CASE("hand expansions of weight-3 products") {
  const DendElem a(dendriform_generator());
  const DendElem lhs = prec(prec(a, a), a);
  const DendElem rhs = prec(a, dend_product(DendOp::Star, a, a));
  CHECK(lhs == rhs);
  CHECK(lhs == sum_of({"(|,(|,(|,|)))", "(|,((|,|),|))", "(|,(|,|,|))"}));
  CHECK(mid(mid(a, a), a) == DendElem(PlanarTree::corolla(4)));
  CHECK(mid(a, mid(a, a)) == DendElem(PlanarTree::corolla(4)));
}

TEST_CASE("the unit is only usable inside *") {
  const PlanarTree leaf = PlanarTree::leaf(), a = dendriform_generator();
  CHECK_THROWS_AS(dend_product(DendOp::Prec, leaf, a), DomainError);
  CHECK_THROWS_AS(dend_product(DendOp::Mid, a, leaf), DomainError);
  CHECK(star(leaf, a) == DendElem(a));
  CHECK(star(a, leaf) == DendElem(a));
  CHECK(star(leaf, leaf) == DendElem(leaf));
}

TEST_CASE("engine agrees with a string-based reference") {
  std::vector<PlanarTree> trees;
  for (unsigned l = 2; l <= 5; ++l)
    for (auto& t : enumerate_planar_trees(l)) trees.push_back(t);
  for (const auto& x : trees)
    for (const auto& y : trees) {
      if (x.leaves() + y.leaves() > 8) continue;
      const std::string xs = to_string(x), ys = to_string(y);
      CHECK(as_sum(dend_product(DendOp::Prec, x, y)) == oracle::prec(xs, ys));
      CHECK(as_sum(dend_product(DendOp::Succ, x, y)) == oracle::succ(xs, ys));
      CHECK(as_sum(dend_product(DendOp::Mid, x, y)) == oracle::mid(xs, ys));
      CHECK(as_sum(dend_product(DendOp::Star, x, y)) == oracle::star(xs, ys));
    }
}

TEST_CASE("the seven relations and associativity of *") {
  auto r = check_dendriform_relations(8);
  CHECK(r.pass);
  CHECK(r.cases > 0);
  CHECK(star_associativity(8).pass);
}

TEST_CASE("a wrong relation is caught") {
  const DendRelation wrong[] = {{DendOp::Prec, DendOp::Prec, DendOp::Prec, DendOp::Prec}};
  DendriformEngine engine;
  auto r = check_relations(wrong, 6, engine);
  CHECK_FALSE(r.pass);
  CHECK(r.witness);
}

TEST_CASE("dialgebra on binary trees") {
  CHECK(check_dendriform_dialgebra(9).pass);
  DendriformEngine engine(false);
  const PlanarTree a = dendriform_generator();
  CHECK(engine.product(DendOp::Mid, a, a).is_zero());
  CHECK(engine.product(DendOp::Star, a, a) == sum_of({"(|,(|,|))", "((|,|),|)"}));
}

TEST_CASE("products add weights") {
  // Every term of x op y has leaves(x) + leaves(y) - 1 leaves; only the middle
  // product always merges the two roots.
  for (unsigned l = 2; l <= 4; ++l)
    for (const auto& x : enumerate_planar_trees(l))
      for (unsigned m = 2; m <= 4; ++m)
        for (const auto& y : enumerate_planar_trees(m)) {
          for (DendOp op : {DendOp::Prec, DendOp::Succ, DendOp::Mid})
            for (const auto& [t, c] : dend_product(op, x, y)) {
              CHECK(t.leaves() == l + m - 1);
              CHECK(c == 1);
            }
          for (const auto& [t, c] : dend_product(DendOp::Mid, x, y))
            CHECK(t.internal_vertices() < x.internal_vertices() + y.internal_vertices() + 1);
        }
}

TEST_CASE("powers of the generator are sums of all trees") {
  for (unsigned n = 1; n <= 5; ++n) {
    DendElem all;
    for (const auto& t : enumerate_planar_trees(n + 1)) all.add(t, 1);
    CHECK(star_power(n) == all);
  }
  CHECK(star_power(3).size() == 11);
  CHECK_THROWS_AS(star_power(0), DomainError);
}

TEST_CASE("the generator generates everything") {
  const auto counts = oracle::super_catalan_by_leaves(6);
  for (unsigned n = 1; n <= 5; ++n) CHECK(mpz_class(generated_rank(n)) == counts[n + 1]);
}

}  // TEST_SUITE
