#pragma once

// Exact rational linear algebra: scalars, formal linear combinations over an
// ordered basis, dense and sparse matrices.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trioperad/errors.hpp"

namespace trioperad {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
/// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

/// Finite formal sum of basis elements with nonzero rational coefficients.
/// B must be totally ordered; terms iterate in that order.
template <typename B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& b, const Rational& c = 1) { add(b, c); }

  void add(const B& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const LinComb& other, const Rational& scale = 1) {
    for (const auto& [b, c] : other.terms_) add(b, scale * c);
  }

  Rational coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, -1);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Bilinear extension of f over basis pairs; the left argument is expanded
/// first.
template <typename C, typename B1, typename B2, typename F>
LinComb<C> bilinear(const LinComb<B1>& x, const LinComb<B2>& y, F&& f) {
  LinComb<C> out;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) out.add(f(bx, by), cx * cy);
  return out;
}

/// Linear extension of f over the basis.
template <typename C, typename B, typename F>
LinComb<C> linear(const LinComb<B>& x, F&& f) {
  LinComb<C> out;
  for (const auto& [b, c] : x) out.add(f(b), c);
  return out;
}

/// "c1*b1 + c2*b2 - b3"; "0" for the empty sum. The basis element is printed
/// with an unqualified to_string call.
template <typename B>
std::string to_string(const LinComb<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(b);
    first = false;
  }
  return out;
}

/// Dense rows x cols matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  bool is_zero() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-sparse rational matrix; each row holds (column, nonzero value) pairs
/// in increasing column order.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  /// Replaces row i; entries may come in any order, zeros are dropped and
  /// duplicate columns summed.
  void set_row(std::size_t i, Row entries);
  std::size_t nonzeros() const;

  RatMatrix to_dense() const;
  static SparseMatrix from_dense(const RatMatrix& m);

  /// Row-vector convention: (a*b).row(i) = sum_k a(i,k) b.row(k).
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  bool is_zero() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Rank over Q by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t rank(const RatMatrix& m);

/// Rank over Q of a sparse matrix: fraction-free row elimination on
/// primitive integer rows, pivoting on leading columns.
std::size_t rank(const SparseMatrix& m);

/// Basis of {v : m v = 0}, read off the reduced row echelon form; one vector
/// per free column, with a 1 in that column.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

template <typename B>
struct Complement {
  std::vector<LinComb<B>> basis;
  /// False when the Gram matrix is singular; the complement is still
  /// computed, but span + complement need not fill the space.
  bool nondegenerate = true;
  std::size_t span_rank = 0;
};

/// Coordinates of x in the ordered basis; throws DomainError when x uses an
/// element outside it.
template <typename B>
std::vector<Rational> coordinates(const LinComb<B>& x, std::span<const B> basis) {
  std::vector<Rational> out(basis.size());
  for (const auto& [b, c] : x) {
    std::size_t j = 0;
    while (j < basis.size() && !(basis[j] == b)) ++j;
    if (j == basis.size()) throw DomainError("coordinates: element outside the basis");
    out[j] = c;
  }
  return out;
}

/// Matrix whose rows are the coordinate vectors of the given combinations.
template <typename B>
RatMatrix coordinate_matrix(std::span<const LinComb<B>> vectors, std::span<const B> basis) {
  RatMatrix m(vectors.size(), basis.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto row = coordinates(vectors[i], basis);
    for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = row[j];
  }
  return m;
}

/// {w : <v, w> = 0 for every v in `vectors`}, where <e_i, e_j> = gram(i, j)
/// on the ordered basis.
template <typename B>
Complement<B> orthogonal_complement(std::span<const LinComb<B>> vectors, std::span<const B> basis,
                                    const RatMatrix& gram) {
  if (gram.rows() != basis.size() || gram.cols() != basis.size())
    throw DomainError("orthogonal_complement: Gram matrix does not match the basis");
  RatMatrix v = coordinate_matrix(vectors, basis);
  Complement<B> out;
  out.nondegenerate = rank(gram) == basis.size();
  out.span_rank = rank(v);
  RatMatrix constraints = vectors.empty() ? RatMatrix(0, basis.size()) : v * gram;
  for (const auto& k : kernel_basis(constraints)) {
    LinComb<B> w;
    for (std::size_t j = 0; j < basis.size(); ++j) w.add(basis[j], k[j]);
    out.basis.push_back(std::move(w));
  }
  return out;
}

}  // namespace trioperad
