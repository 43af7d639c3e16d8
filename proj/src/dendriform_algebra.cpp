#include "trioperad/dendriform_algebra.hpp"

#include <map>

namespace trioperad {

std::string to_string(DendOp op) {
  switch (op) {
    case DendOp::Prec: return "prec";
    case DendOp::Succ: return "succ";
    case DendOp::Mid: return "mid";
    case DendOp::Star: return "star";
  }
  return "?";
}

PlanarTree dendriform_generator() { return PlanarTree::corolla(2); }

namespace {

template <typename F>
void for_each_star_term(DendriformEngine& engine, const PlanarTree& x, const PlanarTree& y,
                        F&& f) {
  if (x.is_leaf()) {
    f(y, Rational(1));
  } else if (y.is_leaf()) {
    f(x, Rational(1));
  } else {
    for (const auto& [t, c] : engine.product(DendOp::Star, x, y)) f(t, c);
  }
}

}  // namespace

const DendElem& DendriformEngine::basic(DendOp op, const PlanarTree& x, const PlanarTree& y) {
  auto& cache = cache_[static_cast<std::size_t>(op)];
  auto key = std::make_pair(x, y);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  DendElem result;
  switch (op) {
    case DendOp::Prec: {
      auto parts = decompose(x);
      PlanarTree last = parts.back();
      for_each_star_term(*this, last, y, [&](const PlanarTree& t, const Rational& c) {
        parts.back() = t;
        result.add(graft(parts), c);
      });
      break;
    }
    case DendOp::Succ: {
      auto parts = decompose(y);
      PlanarTree first = parts.front();
      for_each_star_term(*this, x, first, [&](const PlanarTree& t, const Rational& c) {
        parts.front() = t;
        result.add(graft(parts), c);
      });
      break;
    }
    case DendOp::Mid: {
      if (!with_middle_) break;
      auto left = decompose(x);
      auto right = decompose(y);
      PlanarTree inner_x = left.back(), inner_y = right.front();
      left.pop_back();
      for_each_star_term(*this, inner_x, inner_y, [&](const PlanarTree& t, const Rational& c) {
        std::vector<PlanarTree> children = left;
        children.push_back(t);
        children.insert(children.end(), right.begin() + 1, right.end());
        result.add(graft(children), c);
      });
      break;
    }
    case DendOp::Star:
      result.add(basic(DendOp::Prec, x, y));
      result.add(basic(DendOp::Succ, x, y));
      result.add(basic(DendOp::Mid, x, y));
      break;
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

const DendElem& DendriformEngine::product(DendOp op, const PlanarTree& x, const PlanarTree& y) {
  if (x.is_leaf() || y.is_leaf())
    throw DomainError("dendriform products are defined on trees with at least 2 leaves; | is only "
                      "the unit of * inside the recursion");
  return basic(op, x, y);
}

DendElem DendriformEngine::star_with_unit(const PlanarTree& x, const PlanarTree& y) {
  DendElem out;
  for_each_star_term(*this, x, y, [&](const PlanarTree& t, const Rational& c) { out.add(t, c); });
  return out;
}

DendElem DendriformEngine::product(DendOp op, const DendElem& x, const DendElem& y) {
  DendElem out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(product(op, a, b), ca * cb);
  return out;
}

namespace {
DendriformEngine& local_engine() {
  thread_local DendriformEngine engine;
  return engine;
}
}  // namespace

DendElem prec(const DendElem& x, const DendElem& y) { return dend_product(DendOp::Prec, x, y); }
DendElem succ(const DendElem& x, const DendElem& y) { return dend_product(DendOp::Succ, x, y); }
DendElem mid(const DendElem& x, const DendElem& y) { return dend_product(DendOp::Mid, x, y); }

DendElem dend_product(DendOp op, const DendElem& x, const DendElem& y) {
  return local_engine().product(op, x, y);
}

DendElem dend_product(DendOp op, const PlanarTree& x, const PlanarTree& y) {
  return local_engine().product(op, x, y);
}

DendElem star(const PlanarTree& x, const PlanarTree& y) {
  return local_engine().star_with_unit(x, y);
}

const std::array<DendRelation, 7>& dendriform_relations() {
  using enum DendOp;
  static const std::array<DendRelation, 7> relations{{
      {Prec, Prec, Prec, Star},
      {Succ, Prec, Succ, Prec},
      {Star, Succ, Succ, Succ},
      {Succ, Mid, Succ, Mid},
      {Prec, Mid, Mid, Succ},
      {Mid, Prec, Mid, Prec},
      {Mid, Mid, Mid, Mid},
  }};
  return relations;
}

namespace {
const char* symbol(DendOp op) {
  switch (op) {
    case DendOp::Prec: return "<";
    case DendOp::Succ: return ">";
    case DendOp::Mid: return ".";
    case DendOp::Star: return "*";
  }
  return "?";
}

template <typename F>
void for_each_tree_triple(unsigned max_leaves, bool binary_only, F&& f) {
  std::vector<std::vector<PlanarTree>> trees(max_leaves + 1);
  for (unsigned l = 2; l + 4 <= max_leaves; ++l) {
    for (auto& t : enumerate_planar_trees(l))
      if (!binary_only || t.degree() == 0) trees[l].push_back(std::move(t));
  }
  for (unsigned a = 2; a + 4 <= max_leaves; ++a)
    for (unsigned b = 2; a + b + 2 <= max_leaves; ++b)
      for (unsigned c = 2; a + b + c <= max_leaves; ++c)
        for (const auto& x : trees[a])
          for (const auto& y : trees[b])
            for (const auto& z : trees[c]) f(x, y, z);
}
}  // namespace

std::string to_string(const DendRelation& r) {
  return std::string("(x ") + symbol(r.inner_left) + " y) " + symbol(r.outer_left) + " z = x " +
         symbol(r.outer_right) + " (y " + symbol(r.inner_right) + " z)";
}

CheckReport check_relations(std::span<const DendRelation> relations, unsigned max_leaves,
                            DendriformEngine& engine) {
  CheckReport report;
  const bool binary_only = !engine.with_middle();
  for_each_tree_triple(max_leaves, binary_only,
                       [&](const PlanarTree& x, const PlanarTree& y, const PlanarTree& z) {
                         const DendElem X(x), Y(y), Z(z);
                         for (const auto& r : relations) {
                           ++report.cases;
                           DendElem lhs = engine.product(
                               r.outer_left, engine.product(r.inner_left, X, Y), Z);
                           DendElem rhs = engine.product(
                               r.outer_right, X, engine.product(r.inner_right, Y, Z));
                           if (!(lhs == rhs))
                             report.fail(to_string(r) + " fails at x=" + to_string(x) +
                                         ", y=" + to_string(y) + ", z=" + to_string(z));
                         }
                       });
  return report;
}

CheckReport check_dendriform_relations(unsigned max_leaves) {
  DendriformEngine engine;
  return check_relations(dendriform_relations(), max_leaves, engine);
}

CheckReport check_dendriform_dialgebra(unsigned max_leaves) {
  DendriformEngine engine(false);
  auto first_three = std::span<const DendRelation>(dendriform_relations()).first(3);
  CheckReport report = check_relations(first_three, max_leaves, engine);
  // Closure: products of binary trees stay binary.
  for_each_tree_triple(max_leaves, true, [&](const PlanarTree& x, const PlanarTree& y,
                                             const PlanarTree&) {
    for (DendOp op : {DendOp::Prec, DendOp::Succ})
      for (const auto& [t, c] : engine.product(op, x, y))
        if (t.degree() != 0)
          report.fail(to_string(op) + " of binary trees " + to_string(x) + ", " + to_string(y) +
                      " produced " + to_string(t));
  });
  return report;
}

CheckReport star_associativity(unsigned max_leaves) {
  DendriformEngine engine;
  CheckReport report;
  for_each_tree_triple(max_leaves, false,
                       [&](const PlanarTree& x, const PlanarTree& y, const PlanarTree& z) {
                         ++report.cases;
                         const DendElem X(x), Y(y), Z(z);
                         DendElem lhs = engine.product(DendOp::Star,
                                                       engine.product(DendOp::Star, X, Y), Z);
                         DendElem rhs = engine.product(DendOp::Star, X,
                                                       engine.product(DendOp::Star, Y, Z));
                         if (!(lhs == rhs))
                           report.fail("(x*y)*z != x*(y*z) at x=" + to_string(x) + ", y=" +
                                       to_string(y) + ", z=" + to_string(z));
                       });
  return report;
}

DendElem star_power(unsigned n) {
  if (n == 0) throw DomainError("star_power: n must be >= 1");
  const DendElem a(dendriform_generator());
  DendElem power = a;
  for (unsigned k = 1; k < n; ++k) power = dend_product(DendOp::Star, power, a);
  return power;
}

std::size_t generated_rank(unsigned n) {
  if (n == 0) throw DomainError("generated_rank: n must be >= 1");
  std::vector<std::vector<DendElem>> level(n + 1);
  level[1].push_back(DendElem(dendriform_generator()));
  for (unsigned m = 2; m <= n; ++m)
    for (unsigned p = 1; p < m; ++p)
      for (const auto& u : level[p])
        for (const auto& v : level[m - p])
          for (DendOp op : {DendOp::Prec, DendOp::Succ, DendOp::Mid})
            level[m].push_back(dend_product(op, u, v));

  const auto basis = enumerate_planar_trees(n + 1);
  std::map<PlanarTree, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
  SparseMatrix m(level[n].size(), basis.size());
  for (std::size_t i = 0; i < level[n].size(); ++i) {
    SparseMatrix::Row row;
    for (const auto& [t, c] : level[n][i]) row.emplace_back(index.at(t), c);
    m.set_row(i, std::move(row));
  }
  return rank(m);
}

}  // namespace trioperad
