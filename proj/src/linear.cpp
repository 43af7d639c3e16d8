#include "trioperad/linear.hpp"

#include <algorithm>

namespace trioperad {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal (expected p or p/q)");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, s.size())
                                       : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw ParseError("malformed rational literal '" + s + "' (expected p or p/q)");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s);
  if (q.get_den() == 0) throw ParseError("rational literal '" + s + "' has zero denominator");
  q.canonicalize();
  return q;
}

// --- RatMatrix -----------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : RatMatrix(rows, cols) {
  if (entries.size() != rows * cols) throw DomainError("RatMatrix: wrong number of entries");
  std::size_t k = 0;
  for (long e : entries) data_[k++] = e;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// --- SparseMatrix --------------------------------------------------------

void SparseMatrix::set_row(std::size_t i, Row entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Row merged;
  for (auto& [col, value] : entries) {
    if (col >= cols_) throw DomainError("SparseMatrix: column index out of range");
    if (!merged.empty() && merged.back().first == col)
      merged.back().second += value;
    else
      merged.emplace_back(col, std::move(value));
    if (merged.back().second == 0) merged.pop_back();
  }
  rows_.at(i) = std::move(merged);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

RatMatrix SparseMatrix::to_dense() const {
  RatMatrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) m(i, j) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r.emplace_back(j, m(i, j));
    s.rows_[i] = std::move(r);
  }
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("sparse product: dimension mismatch");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, aik] : a.row(i))
      for (const auto& [j, bkj] : b.row(k)) acc[j] += aik * bkj;
    SparseMatrix::Row r;
    for (auto& [j, v] : acc)
      if (v != 0) r.emplace_back(j, std::move(v));
    c.rows_[i] = std::move(r);
  }
  return c;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

// --- rank ----------------------------------------------------------------

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

// Scales a rational row to a primitive integer row with the same span.
IntRow primitive_row(const SparseMatrix::Row& row) {
  Integer denominators = 1;
  for (const auto& [j, q] : row) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
                                         q.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  Integer content = 0;
  for (const auto& [j, q] : row) {
    Integer v = q.get_num() * (denominators / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(j, std::move(v));
  }
  if (content > 1)
    for (auto& [j, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(IntRow& row) {
  Integer content = 0;
  for (const auto& [j, v] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& [j, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// row <- (p/g) row - (r/g) pivot, which cancels the common leading column.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  Integer a = pivot.front().second / g;
  Integer b = row.front().second / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, k = 1;
  while (i < row.size() || k < pivot.size()) {
    if (k == pivot.size() || (i < row.size() && row[i].first < pivot[k].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[k].first < row[i].first) {
      out.emplace_back(pivot[k].first, -b * pivot[k].second);
      ++k;
    } else {
      Integer v = a * row[i].second - b * pivot[k].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++k;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  std::map<std::size_t, IntRow> pivots;  // leading column -> pivot row
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow row = primitive_row(m.row(i));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = eliminate(row, it->second);
    }
  }
  return pivots.size();
}

std::size_t rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; this does not change the rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& pivot = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = pivot * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous = pivot;
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, col);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace trioperad
