#include "doctest.h"
#include "trioperad/errors.hpp"
#include "oracles.hpp"
#include "trioperad/combinatorics.hpp"
#include "trioperad/series.hpp"

using namespace trioperad;

namespace {

const TPoly t = TPoly::t();

TPoly power(const TPoly& p, unsigned k) {
  TPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

// (-1)^n times the degree polynomial sum_d #cells(d) t^d.
template <typename Cell>
TPoly signed_poincare(const std::vector<Cell>& cells, unsigned n) {
  auto counts = count_by_degree(std::span<const Cell>(cells));
  std::vector<Rational> c;
  for (auto k : counts) c.emplace_back(static_cast<long>(k) * (n % 2 ? -1 : 1));
  return TPoly(std::move(c));
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("polynomials in t") {
  const TPoly p = 1 + t;
  CHECK(p.degree() == 1);
  CHECK(TPoly().degree() == -1);
  CHECK(power(p, 2) == TPoly({1, 2, 1}));
  CHECK(p - p == TPoly());
  CHECK(to_string(-(3 + 3 * t + t * t)) == "-3 - 3*t - t^2");
  CHECK(to_string(TPoly()) == "0");
  CHECK(power(p, 3).evaluate(1) == 8);
  CHECK((power(p, 3) - 1).divide_exact(t) == TPoly({3, 3, 1}));
  CHECK_THROWS_AS(power(p, 2).divide_exact(t), DomainError);
  CHECK_THROWS_AS(p.divide_exact(TPoly()), DomainError);
  CHECK(TPoly(Rational(1, 2)).is_unit());
}

TEST_CASE("series arithmetic") {
  const TSeries x = TSeries::identity(5);
  const TSeries one(5, {1});
  const TSeries inv = reciprocal(one + x);
  for (unsigned k = 0; k <= 5; ++k) CHECK(inv[k] == TPoly(k % 2 ? -1 : 1));
  CHECK((inv * (one + x)) == one);
  CHECK(derivative(x * x).order() == 4);
  CHECK(derivative(x * x)[1] == 2);
  const TSeries s = sqrt(one + x);
  CHECK(s * s == one + x);
  CHECK(s[2] == TPoly(Rational(-1, 8)));
  CHECK_THROWS_AS(reciprocal(x), DomainError);
  CHECK_THROWS_AS(sqrt(x), DomainError);
}

TEST_CASE("composition and inversion") {
  const TSeries x = TSeries::identity(8);
  CHECK(compose(x, x) == x);
  CHECK(invert(x) == x);
  const TSeries f = x + x * x;
  CHECK(compose(f, invert(f)) == x);
  CHECK(compose(invert(f), f) == x);
  CHECK_THROWS_AS(compose(f, TSeries::identity(7)), DomainError);
  CHECK_THROWS_AS(compose(f, TSeries(8, {1, 1})), DomainError);
  CHECK_THROWS_AS(invert(x * x), DomainError);
  CHECK_THROWS_AS(invert(TSeries(8, {0, t})), DomainError);
}

TEST_CASE("f_delta coefficients") {
  const TSeries f = f_delta(10);
  CHECK(f[0].is_zero());
  for (unsigned n = 1; n <= 10; ++n) {
    const TPoly expect = (power(1 + t, n) - 1).divide_exact(t) * (n % 2 ? -1 : 1);
    CHECK(f[n] == expect);
    CHECK(f[n] == signed_poincare(enumerate_subset_cells(n), n));
  }
}

TEST_CASE("f_cube coefficients") {
  const TSeries f = f_cube(10);
  for (unsigned n = 1; n <= 10; ++n) CHECK(f[n] == power(2 + t, n - 1) * (n % 2 ? -1 : 1));
  for (unsigned n = 1; n <= 7; ++n) CHECK(f[n] == signed_poincare(enumerate_cube_cells(n), n));
}

TEST_CASE("f_stasheff is the inverse of f_delta") {
  const TSeries d = f_delta(12), k = f_stasheff(12), x = TSeries::identity(12);
  CHECK(compose(d, k) == x);
  CHECK(compose(k, d) == x);
  CHECK(invert(d) == k);
  CHECK(invert(k) == d);
  for (unsigned n = 1; n <= 7; ++n) CHECK(k[n] == signed_poincare(enumerate_planar_trees(n + 1), n));
}

TEST_CASE("f_cube is an involution") {
  const TSeries c = f_cube(12);
  CHECK(compose(c, c) == TSeries::identity(12));
  CHECK(invert(c) == c);
}

TEST_CASE("Catalan and super-Catalan specialisations") {
  const TSeries k = f_stasheff(12);
  const auto zero = k.evaluate(0), one = k.evaluate(1);
  const auto sc = oracle::super_catalan_by_leaves(13);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(abs(zero[n]) == oracle::catalan(n));
    CHECK(abs(one[n]) == sc[n + 1]);
  }
  const auto r = check_series_identities(12);
  CHECK(r.pass());
  CHECK(r.catalan.size() == 6);
  CHECK_THROWS_AS(check_series_identities(5), DomainError);
}

TEST_CASE("family names") {
  CHECK(parse_series_family("cube") == SeriesFamily::Cube);
  CHECK(make_series(SeriesFamily::Delta, 4) == f_delta(4));
  CHECK_THROWS(parse_series_family("x"));
}

}  // TEST_SUITE
