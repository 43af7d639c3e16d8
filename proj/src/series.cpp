#include "trioperad/series.hpp"

#include <algorithm>

namespace trioperad {

// --- TPoly ---------------------------------------------------------------

TPoly::TPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

TPoly::TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t() { return TPoly(std::vector<Rational>{0, 1}); }

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational TPoly::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

TPoly operator-(TPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

TPoly TPoly::divide_exact(const TPoly& d) const {
  if (d.is_zero()) throw DomainError("TPoly division by zero");
  std::vector<Rational> rem = c_;
  if (rem.size() < d.c_.size()) {
    if (is_zero()) return TPoly();
    throw DomainError("TPoly division is not exact: " + to_string(*this) + " by " + to_string(d));
  }
  std::vector<Rational> q(rem.size() - d.c_.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + d.c_.size() - 1] / d.c_.back();
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q[k] * d.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0)
      throw DomainError("TPoly division is not exact: " + to_string(*this) + " by " + to_string(d));
  return TPoly(std::move(q));
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out;
}

// --- TSeries -------------------------------------------------------------

TSeries::TSeries(unsigned order) : order_(order), c_(order + 1) {}

TSeries::TSeries(unsigned order, std::vector<TPoly> coeffs) : order_(order), c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TSeries TSeries::identity(unsigned order) {
  TSeries x(order);
  if (order >= 1) x.c_[1] = 1;
  return x;
}

TSeries TSeries::truncated(unsigned m) const {
  if (m > order_)
    throw DomainError("cannot truncate a series of order " + std::to_string(order_) + " to order " +
                      std::to_string(m));
  return TSeries(m, std::vector<TPoly>(c_.begin(), c_.begin() + m + 1));
}

namespace {
void require_same_order(const TSeries& a, const TSeries& b, const char* op) {
  if (a.order() != b.order())
    throw DomainError(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                      " vs " + std::to_string(b.order()) + ")");
}

// Pads with zero coefficients; only sound where the caller knows the extra
// coefficients do not influence the result.
TSeries padded(const TSeries& f, unsigned order) {
  return TSeries(order, f.coefficients());
}
}  // namespace

TSeries& TSeries::operator+=(const TSeries& o) {
  require_same_order(*this, o, "series addition");
  for (std::size_t k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  require_same_order(*this, o, "series subtraction");
  for (std::size_t k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  require_same_order(a, b, "series multiplication");
  TSeries out(a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j)
      if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TSeries operator*(const TPoly& s, TSeries a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

std::vector<Rational> TSeries::evaluate(const Rational& q) const {
  std::vector<Rational> out;
  for (const auto& c : c_) out.push_back(c.evaluate(q));
  return out;
}

std::string to_string(const TSeries& f) {
  std::string out;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (f[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    out += "(" + to_string(f[k]) + ")" + (mono.empty() ? "" : "*" + mono);
  }
  return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(f.order() + 1) + ")";
}

TSeries derivative(const TSeries& f) {
  if (f.order() == 0) throw DomainError("derivative of an order-0 series is unknown");
  TSeries out(f.order() - 1);
  for (unsigned k = 1; k <= f.order(); ++k) out[k - 1] = TPoly(Rational(k)) * f[k];
  return out;
}

TSeries reciprocal(const TSeries& f) {
  if (!f[0].is_unit())
    throw DomainError("reciprocal needs a nonzero rational constant term, got " + to_string(f[0]));
  const Rational inv = 1 / f[0].coefficient(0);
  TSeries g(f.order());
  g[0] = inv;
  for (unsigned n = 1; n <= f.order(); ++n) {
    TPoly acc;
    for (unsigned k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -(TPoly(inv) * acc);
  }
  return g;
}

TSeries sqrt(const TSeries& f) {
  if (!(f[0] == TPoly(1))) throw DomainError("sqrt needs constant term 1, got " + to_string(f[0]));
  TSeries g(f.order());
  g[0] = 1;
  const TPoly half(Rational(1, 2));
  // Each step doubles the number of correct coefficients.
  for (unsigned correct = 1; correct <= f.order(); correct *= 2) g = half * (g + f * reciprocal(g));
  return g;
}

TSeries compose(const TSeries& f, const TSeries& g) {
  require_same_order(f, g, "compose");
  if (!g[0].is_zero())
    throw DomainError("compose: inner series has constant term " + to_string(g[0]));
  TSeries acc(f.order());
  for (unsigned k = f.order() + 1; k-- > 0;) {
    acc = acc * g;
    acc[0] += f[k];
  }
  return acc;
}

TSeries invert(const TSeries& f) {
  if (f.order() == 0) throw DomainError("invert: order must be >= 1");
  if (!f[0].is_zero()) throw DomainError("invert: constant term must be 0, got " + to_string(f[0]));
  if (!f[1].is_unit())
    throw DomainError("invert: linear coefficient must be a nonzero rational, got " +
                      to_string(f[1]));
  const unsigned n = f.order();
  const TSeries x = TSeries::identity(n);
  // The top coefficient of f' is unknown but only meets corrections of
  // valuation >= 2, so padding it with zero is harmless.
  const TSeries df = padded(derivative(f), n);
  TSeries g(n);
  g[1] = TPoly(1 / f[1].coefficient(0));
  for (unsigned correct = 2; correct <= n; correct *= 2)
    g = g - (compose(f, g) - x) * reciprocal(compose(df, g));
  return g;
}

TSeries f_delta(unsigned order) {
  if (order < 1) throw DomainError("f_delta: order must be >= 1");
  const TPoly t = TPoly::t();
  TSeries den1(order, {1, 1});
  TSeries den2(order, {1, 1 + t});
  TSeries num(order, {0, -1});
  return num * reciprocal(den1 * den2);
}

TSeries f_stasheff(unsigned order) {
  if (order < 1) throw DomainError("f_stasheff: order must be >= 1");
  const TPoly t = TPoly::t();
  // The numerator is O(x^2); work one order higher, then divide by x.
  const unsigned m = order + 1;
  TSeries radicand(m, {1, TPoly(2) * (2 + t), t * t});
  TSeries num = sqrt(radicand) - TSeries(m, {1, 2 + t});
  if (!num[0].is_zero() || !num[1].is_zero())
    throw DomainError("f_stasheff: numerator is not divisible by x^2");
  const TPoly den = TPoly(2) * (1 + t);
  TSeries out(order);
  for (unsigned k = 1; k <= order; ++k) out[k] = num[k + 1].divide_exact(den);
  return out;
}

TSeries f_cube(unsigned order) {
  if (order < 1) throw DomainError("f_cube: order must be >= 1");
  TSeries den(order, {1, TPoly::t() + 2});
  return TSeries(order, {0, -1}) * reciprocal(den);
}

std::string to_string(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::Delta: return "delta";
    case SeriesFamily::Stasheff: return "stasheff";
    case SeriesFamily::Cube: return "cube";
  }
  return "?";
}

SeriesFamily parse_series_family(std::string_view text) {
  if (text == "delta") return SeriesFamily::Delta;
  if (text == "stasheff") return SeriesFamily::Stasheff;
  if (text == "cube") return SeriesFamily::Cube;
  throw ParseError("unknown series family '" + std::string(text) +
                   "' (expected delta|stasheff|cube)");
}

TSeries make_series(SeriesFamily family, unsigned order) {
  switch (family) {
    case SeriesFamily::Delta: return f_delta(order);
    case SeriesFamily::Stasheff: return f_stasheff(order);
    case SeriesFamily::Cube: return f_cube(order);
  }
  throw DomainError("unknown series family");
}

SeriesIdentities check_series_identities(unsigned order) {
  if (order < 6) throw DomainError("check_series_identities: order must be >= 6");
  SeriesIdentities r;
  r.order = order;
  const TSeries x = TSeries::identity(order);
  const TSeries d = f_delta(order), k = f_stasheff(order), c = f_cube(order);
  r.delta_after_stasheff = compose(d, k) == x;
  r.stasheff_after_delta = compose(k, d) == x;
  r.closed_form_is_inverse = invert(d) == k;
  r.cube_self_inverse = compose(c, c) == x && invert(c) == c;
  r.invert_involutive = invert(invert(d)) == d && invert(invert(k)) == k && invert(invert(c)) == c;

  const auto at0 = k.evaluate(0), at1 = k.evaluate(1);
  for (unsigned n = 1; n <= 6; ++n) r.catalan.push_back(abs(at0[n]));
  for (unsigned n = 1; n <= 5; ++n) r.super_catalan.push_back(abs(at1[n]));
  // [x^n] at t = 0 counts binary trees with n+1 leaves: C_n = binom(2n, n)/(n+1).
  std::vector<Rational> catalan;
  for (unsigned n = 1; n <= 6; ++n) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    Rational c(b, n + 1);
    c.canonicalize();
    catalan.push_back(c);
  }
  const std::vector<Rational> super_catalan{1, 3, 11, 45, 197};
  r.catalan_ok = r.catalan == catalan;
  r.super_catalan_ok = r.super_catalan == super_catalan;
  return r;
}

}  // namespace trioperad
