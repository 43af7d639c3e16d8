#pragma once

// Truncated power series in x whose coefficients are polynomials in t with
// rational coefficients.

#include <string>
#include <vector>

#include "trioperad/linear.hpp"

namespace trioperad {

/// Polynomial in t over Q; no trailing zero coefficients.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Rational& c);  // NOLINT: constants convert implicitly
  TPoly(int c) : TPoly(Rational(c)) {}
  explicit TPoly(std::vector<Rational> coeffs);

  /// The polynomial t.
  static TPoly t();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// True for a nonzero constant.
  bool is_unit() const { return c_.size() == 1; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Rational& q) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend TPoly operator-(TPoly a);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  /// this / d when d divides this exactly; DomainError otherwise.
  TPoly divide_exact(const TPoly& d) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// "-3 - 3*t - t^2"; "0" for the zero polynomial.
std::string to_string(const TPoly& p);

/// f = c_0 + c_1 x + ... + c_N x^N modulo x^(N+1).
class TSeries {
 public:
  /// The zero series of order N.
  explicit TSeries(unsigned order);
  /// coeffs[k] is the coefficient of x^k; missing entries are 0, extra
  /// entries beyond the order are dropped.
  TSeries(unsigned order, std::vector<TPoly> coeffs);

  /// x of order N.
  static TSeries identity(unsigned order);

  unsigned order() const { return order_; }
  const TPoly& operator[](std::size_t k) const { return c_.at(k); }
  TPoly& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<TPoly>& coefficients() const { return c_; }

  /// Same series read modulo x^(m+1), m <= order.
  TSeries truncated(unsigned m) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TPoly& s, TSeries a);
  friend bool operator==(const TSeries&, const TSeries&) = default;

  /// Coefficient-wise evaluation at t = q.
  std::vector<Rational> evaluate(const Rational& q) const;

 private:
  unsigned order_;
  std::vector<TPoly> c_;
};

std::string to_string(const TSeries& f);

/// f'(x), of order N-1 (the x^N coefficient would need c_(N+1)).
TSeries derivative(const TSeries& f);

/// 1/f; the constant term must be a nonzero rational.
TSeries reciprocal(const TSeries& f);

/// sqrt(f) with constant term 1, by Newton iteration g <- (g + f/g)/2 from
/// g = 1. f must have constant term 1.
TSeries sqrt(const TSeries& f);

/// f(g(x)). Both orders must agree and g must have no constant term.
TSeries compose(const TSeries& f, const TSeries& g);

/// The compositional inverse g with f(g) = g(f) = x, by Newton iteration.
/// f needs c_0 = 0 and c_1 a nonzero rational.
TSeries invert(const TSeries& f);

/// -x / ((1 + x)(1 + (1 + t)x)).
TSeries f_delta(unsigned order = 12);

/// (-(1 + (2+t)x) + sqrt(1 + 2(2+t)x + t^2 x^2)) / (2(1+t)x).
TSeries f_stasheff(unsigned order = 12);

/// -x / (1 + (t + 2)x).
TSeries f_cube(unsigned order = 12);

struct SeriesIdentities {
  unsigned order = 0;
  bool delta_after_stasheff = false;   // f_delta(f_stasheff(x)) = x
  bool stasheff_after_delta = false;   // f_stasheff(f_delta(x)) = x
  bool closed_form_is_inverse = false; // f_stasheff = invert(f_delta)
  bool cube_self_inverse = false;      // f_cube(f_cube(x)) = x and invert(f_cube) = f_cube
  bool invert_involutive = false;      // invert(invert(f)) = f for all three
  /// |coefficients| of x^1..x^6 at t = 0 (Catalan C_1..C_6) and of x^1..x^5
  /// at t = 1 (super-Catalan).
  std::vector<Rational> catalan, super_catalan;
  bool catalan_ok = false;
  bool super_catalan_ok = false;
  bool pass() const {
    return delta_after_stasheff && stasheff_after_delta && closed_form_is_inverse &&
           cube_self_inverse && invert_involutive && catalan_ok && super_catalan_ok;
  }
};

SeriesIdentities check_series_identities(unsigned order = 12);

enum class SeriesFamily { Delta, Stasheff, Cube };

std::string to_string(SeriesFamily f);
/// "delta", "stasheff" or "cube".
SeriesFamily parse_series_family(std::string_view text);
TSeries make_series(SeriesFamily family, unsigned order);

}  // namespace trioperad
