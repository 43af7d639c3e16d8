#pragma once

// Independent reference implementations used to cross-check the library.
// None of these share code with src/.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline mpz_class catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

/// Planar trees with l leaves, all arities >= 2: T(1) = 1 and
/// T(l) = sum over compositions of l into >= 2 parts of prod T(part).
inline std::vector<mpz_class> super_catalan_by_leaves(unsigned max_leaves) {
  std::vector<mpz_class> t(max_leaves + 1, 0), forests(max_leaves + 1, 0);
  // forests[l]: sequences of >= 1 trees with l leaves in total.
  forests[0] = 1;
  for (unsigned l = 1; l <= max_leaves; ++l) {
    mpz_class multi = 0;  // sequences of >= 2 trees
    for (unsigned f = 1; f < l; ++f) multi += t[f] * forests[l - f];
    t[l] = l == 1 ? mpz_class(1) : multi;
    forests[l] = multi + t[l];
  }
  return t;
}

/// Gauss-Jordan rank over Q with full fractions.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// --- dendriform products on tree literals --------------------------------
//
// Trees are handled as their text literals: "|" or "(t1,...,tk)".

using Sum = std::map<std::string, long>;

inline std::vector<std::string> children(const std::string& t) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    char ch = t[i];
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

inline void accumulate(Sum& into, const std::string& t, long c) {
  if ((into[t] += c) == 0) into.erase(t);
}

inline Sum star(const std::string& x, const std::string& y);

inline Sum prec(const std::string& x, const std::string& y) {
  auto xs = children(x);
  Sum out;
  for (const auto& [t, c] : star(xs.back(), y)) {
    auto v = xs;
    v.back() = t;
    accumulate(out, join(v), c);
  }
  return out;
}

inline Sum succ(const std::string& x, const std::string& y) {
  auto ys = children(y);
  Sum out;
  for (const auto& [t, c] : star(x, ys.front())) {
    auto v = ys;
    v.front() = t;
    accumulate(out, join(v), c);
  }
  return out;
}

inline Sum mid(const std::string& x, const std::string& y) {
  auto xs = children(x), ys = children(y);
  Sum out;
  for (const auto& [t, c] : star(xs.back(), ys.front())) {
    std::vector<std::string> v(xs.begin(), xs.end() - 1);
    v.push_back(t);
    v.insert(v.end(), ys.begin() + 1, ys.end());
    accumulate(out, join(v), c);
  }
  return out;
}

inline Sum star(const std::string& x, const std::string& y) {
  if (x == "|") return {{y, 1}};
  if (y == "|") return {{x, 1}};
  Sum out;
  for (auto f : {prec, succ, mid})
    for (const auto& [t, c] : f(x, y)) accumulate(out, t, c);
  return out;
}

}  // namespace oracle
