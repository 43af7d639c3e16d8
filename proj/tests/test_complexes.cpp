#include "doctest.h"
#include "trioperad/errors.hpp"
#include "oracles.hpp"
#include "trioperad/complexes.hpp"

using namespace trioperad;

namespace {

const PlanarTree a = dendriform_generator();
const SubsetCell g = simplex_unit();

// Number of n-tuples of free-algebra basis elements of total weight w, given
// the count per weight of a single factor.
template <typename PerWeight>
mpz_class tuples(unsigned n, unsigned w, PerWeight&& per) {
  if (n == 0) return w == 0 ? 1 : 0;
  mpz_class total = 0;
  for (unsigned k = 1; k + (n - 1) <= w; ++k) total += per(k) * tuples(n - 1, w - k, per);
  return total;
}

mpz_class simplex_dim(unsigned n, unsigned w, const std::vector<mpz_class>& sc) {
  const mpz_class cells = (mpz_class(1) << n) - 1;
  return cells * tuples(n, w, [&](unsigned k) -> mpz_class { return sc[k + 1]; });
}

mpz_class tree_dim(unsigned n, unsigned w, const std::vector<mpz_class>& sc) {
  return sc[n + 1] * tuples(n, w, [](unsigned k) -> mpz_class { return (mpz_class(1) << k) - 1; });
}

}  // namespace

TEST_SUITE("complexes") {

TEST_CASE("simplex faces on hand examples") {
  const SimplexChain both{parse_subset("{1,2}@2"), {a, a}};
  CHECK(face_map_simplex_coeff(1, both) ==
        LinComb<SimplexChain>(SimplexChain{g, {PlanarTree::corolla(3)}}));

  const SimplexChain second{parse_subset("{2}@2"), {a, a}};
  CHECK(face_map_simplex_coeff(1, second, SimplexFaceTable::Printed) ==
        LinComb<SimplexChain>(SimplexChain{g, {parse_tree("(|,(|,|))")}}));
  CHECK(face_map_simplex_coeff(1, second, SimplexFaceTable::Swapped) ==
        LinComb<SimplexChain>(SimplexChain{g, {parse_tree("((|,|),|)")}}));

  // Neither 1 nor 2 in X: the factors multiply by *.
  const SimplexChain neither{parse_subset("{3}@3"), {a, a, a}};
  const auto f = face_map_simplex_coeff(1, neither);
  CHECK(f.size() == 3);
  for (const auto& [c, q] : f) {
    CHECK(c.cell == parse_subset("{2}@2"));
    CHECK(q == 1);
  }
  CHECK(to_string(both) == "[{1,2}@2; (|,|) (|,|)]");
  CHECK_THROWS_AS(face_map_simplex_coeff(2, both), DomainError);
  CHECK_THROWS_AS(face_map_simplex_coeff(0, both), DomainError);
}

TEST_CASE("tree faces on hand examples") {
  const TreeChain c{PlanarTree::corolla(3), {g, g}};
  CHECK(face_map_tree_coeff(1, c) ==
        LinComb<TreeChain>(TreeChain{PlanarTree::corolla(2), {parse_subset("{1,2}@2")}}));
  const TreeChain right{parse_tree("(|,(|,|))"), {g, g}};
  // Leaf 2 is a left leaf of its vertex.
  CHECK(face_map_tree_coeff(1, right) ==
        LinComb<TreeChain>(TreeChain{PlanarTree::corolla(2), {parse_subset("{1}@2")}}));
  CHECK(face_map_tree_coeff(1, right, {1, true}) ==
        LinComb<TreeChain>(TreeChain{PlanarTree::corolla(2), {parse_subset("{2}@2")}}));
  CHECK_THROWS_AS(face_map_tree_coeff(2, c), DomainError);
}

TEST_CASE("the differential preserves weight") {
  for (unsigned w = 1; w <= 4; ++w)
    for (unsigned n = 1; n <= w; ++n) {
      for (const auto& c : simplex_chain_basis(n, w)) {
        CHECK(weight(c) == w);
        for (const auto& [t, q] : differential(c)) {
          CHECK(weight(t) == w);
          CHECK(t.factors.size() == n - 1);
        }
      }
      for (const auto& c : tree_chain_basis(n, w)) {
        CHECK(weight(c) == w);
        for (const auto& [t, q] : differential(c)) {
          CHECK(weight(t) == w);
          CHECK(t.factors.size() == n - 1);
        }
      }
    }
}

TEST_CASE("dimensions against the counting formula") {
  const auto sc = oracle::super_catalan_by_leaves(8);
  for (unsigned w = 1; w <= 5; ++w) {
    const auto s = build_complex(ComplexFamily::SimplexCoeff, w);
    const auto t = build_complex(ComplexFamily::TreeCoeff, w);
    for (unsigned n = 1; n <= w; ++n) {
      CHECK(mpz_class(s.dims[n]) == simplex_dim(n, w, sc));
      CHECK(mpz_class(t.dims[n]) == tree_dim(n, w, sc));
    }
  }
  CHECK(build_complex(ComplexFamily::SimplexCoeff, 3).dims == std::vector<std::size_t>{0, 11, 18, 7});
  CHECK(build_complex(ComplexFamily::TreeCoeff, 3).dims == std::vector<std::size_t>{0, 7, 18, 11});
}

TEST_CASE("weight 2 is an isomorphism") {
  for (auto family : {ComplexFamily::SimplexCoeff, ComplexFamily::TreeCoeff}) {
    const auto c = build_complex(family, 2);
    CHECK(c.dims == std::vector<std::size_t>{0, 3, 3});
    const auto h = homology_ranks(c);
    CHECK(h.rank_d[2] == 3);
  }
}

TEST_CASE("d squared is zero") {
  for (unsigned w = 1; w <= 5; ++w) {
    CHECK(build_complex(ComplexFamily::SimplexCoeff, w).d_squared_zero);
    CHECK(build_complex(ComplexFamily::TreeCoeff, w).d_squared_zero);
  }
}

TEST_CASE("homology is concentrated at weight 1") {
  for (unsigned w = 1; w <= 4; ++w)
    for (auto family : {ComplexFamily::SimplexCoeff, ComplexFamily::TreeCoeff}) {
      const auto h = homology_ranks(build_complex(family, w));
      CHECK(koszul_profile(w, h));
      for (unsigned n = 1; n <= w; ++n) CHECK(h.betti[n] == (n == 1 && w == 1 ? 1u : 0u));
    }
}

TEST_CASE("the printed simplex table fails d squared") {
  ComplexOptions printed;
  printed.simplex_table = SimplexFaceTable::Printed;
  const auto c = build_complex(ComplexFamily::SimplexCoeff, 3, printed);
  CHECK_FALSE(c.d_squared_zero);
  CHECK(c.d_squared_witness);
  CHECK_THROWS_AS(homology_ranks(c), DomainError);
}

TEST_CASE("convention sweep selects the pinned conventions") {
  const auto sweep = sweep_conventions(3);
  REQUIRE(sweep.simplex_table);
  REQUIRE(sweep.tree_convention);
  CHECK(*sweep.simplex_table == kSimplexFaceTable);
  CHECK(*sweep.tree_convention == kTreeFaceConvention);
  std::size_t valid = 0;
  for (const auto& c : sweep.candidates) {
    if (c.valid()) ++valid;
    if (c.family == ComplexFamily::SimplexCoeff && c.simplex_table == SimplexFaceTable::Printed)
      CHECK(c.d_squared_failures == std::vector<unsigned>{3});
  }
  CHECK(valid == 2);
  CHECK(sweep.candidates.size() == 6);
}

TEST_CASE("invalid weights and families") {
  CHECK_THROWS_AS(build_complex(ComplexFamily::SimplexCoeff, 0), DomainError);
  CHECK(parse_family("tree") == ComplexFamily::TreeCoeff);
  CHECK_THROWS(parse_family("cube"));
}

}  // TEST_SUITE
