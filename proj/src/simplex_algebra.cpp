#include "trioperad/simplex_algebra.hpp"

#include <functional>

namespace trioperad {

namespace {

std::uint64_t full_mask(unsigned arity) {
  return arity >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << arity) - 1;
}

// Calls f(cells) for each tuple of basis cells with the given arities.
void for_each_cell_tuple(std::span<const unsigned> arities,
                         const std::function<void(std::span<const SubsetCell>)>& f) {
  std::vector<SubsetCell> current;
  current.reserve(arities.size());
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == arities.size()) {
      f(current);
      return;
    }
    for (std::uint64_t m = 1; m <= full_mask(arities[p]); ++m) {
      current.push_back(SubsetCell::from_mask(arities[p], m));
      rec(p + 1);
      current.pop_back();
    }
  };
  rec(0);
}

void for_each_composition(unsigned total, unsigned parts,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> prefix;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned p) {
    if (p == 0) {
      if (left == 0) f(prefix);
      return;
    }
    for (unsigned first = 1; first + (p - 1) <= left; ++first) {
      prefix.push_back(first);
      rec(left - first, p - 1);
      prefix.pop_back();
    }
  };
  rec(total, parts);
}

std::string join_cells(std::span<const SubsetCell> cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += to_string(cells[i]);
  }
  return out;
}

}  // namespace

std::string to_string(TriOp op) {
  switch (op) {
    case TriOp::Left: return "left";
    case TriOp::Right: return "right";
    case TriOp::Middle: return "mid";
  }
  return "?";
}

SubsetCell simplex_unit() { return SubsetCell(1, {1}); }

SubsetCell gamma(const SubsetCell& x, std::span<const SubsetCell> args) {
  if (args.size() != x.arity())
    throw DomainError("gamma: " + to_string(x) + " takes " + std::to_string(x.arity()) +
                      " arguments, got " + std::to_string(args.size()));
  unsigned total = 0;
  for (const auto& a : args) total += a.arity();
  if (total > kMaxSubsetArity) throw DomainError("gamma: total arity exceeds 64");
  std::uint64_t mask = 0;
  unsigned offset = 0;
  for (unsigned j = 1; j <= x.arity(); ++j) {
    const auto& a = args[j - 1];
    if (x.contains(j)) mask |= a.mask() << offset;
    offset += a.arity();
  }
  return SubsetCell::from_mask(total, mask);
}

CheckReport check_operad_axioms(unsigned max_arity) {
  CheckReport report;
  // Unit laws.
  const SubsetCell unit = simplex_unit();
  for (unsigned n = 1; n <= max_arity; ++n) {
    for (const auto& x : enumerate_subset_cells(n)) {
      ++report.cases;
      SubsetCell left = gamma(unit, std::span<const SubsetCell>(&x, 1));
      std::vector<SubsetCell> units(n, unit);
      SubsetCell right = gamma(x, units);
      if (left != x) report.fail("gamma({1}@1; " + to_string(x) + ") = " + to_string(left));
      if (right != x) report.fail("gamma(" + to_string(x) + "; units) = " + to_string(right));
    }
  }
  // Associativity: gamma(gamma(X; Y); Z) = gamma(X; gamma(Y_1; Z_1), ..., gamma(Y_n; Z_n)).
  for (unsigned n = 1; n <= max_arity; ++n)
    for (unsigned m = n; m <= max_arity; ++m)
      for_each_composition(m, n, [&](const std::vector<unsigned>& inner) {
        for (unsigned t = m; t <= max_arity; ++t)
          for_each_composition(t, m, [&](const std::vector<unsigned>& outer) {
            std::vector<unsigned> arities{n};
            arities.insert(arities.end(), inner.begin(), inner.end());
            arities.insert(arities.end(), outer.begin(), outer.end());
            for_each_cell_tuple(arities, [&](std::span<const SubsetCell> cells) {
              ++report.cases;
              const SubsetCell& x = cells[0];
              auto ys = cells.subspan(1, n);
              auto zs = cells.subspan(1 + n, m);
              SubsetCell lhs = gamma(gamma(x, ys), zs);
              std::vector<SubsetCell> blocks;
              std::size_t start = 0;
              for (unsigned j = 0; j < n; ++j) {
                blocks.push_back(gamma(ys[j], zs.subspan(start, ys[j].arity())));
                start += ys[j].arity();
              }
              SubsetCell rhs = gamma(x, blocks);
              if (lhs != rhs)
                report.fail("associativity fails for X=" + to_string(x) + "; Y=" + join_cells(ys) +
                            "; Z=" + join_cells(zs));
            });
          });
      });
  return report;
}

SubsetCell tri_product(TriOp op, const SubsetCell& x, const SubsetCell& y) {
  unsigned total = x.arity() + y.arity();
  if (total > kMaxSubsetArity) throw DomainError("trialgebra product: arity exceeds 64");
  switch (op) {
    case TriOp::Left: return SubsetCell::from_mask(total, x.mask());
    case TriOp::Right: return SubsetCell::from_mask(total, y.mask() << x.arity());
    case TriOp::Middle: return SubsetCell::from_mask(total, x.mask() | (y.mask() << x.arity()));
  }
  throw DomainError("unknown trialgebra operation");
}

TriElem tri_product(TriOp op, const TriElem& x, const TriElem& y) {
  return bilinear<SubsetCell>(x, y, [op](const SubsetCell& a, const SubsetCell& b) {
    return tri_product(op, a, b);
  });
}

const std::array<TriRelation, 11>& trialgebra_relations() {
  using enum TriOp;
  static const std::array<TriRelation, 11> relations{{
      {Left, Left, Left, Left},
      {Left, Left, Left, Right},
      {Right, Left, Right, Left},
      {Left, Right, Right, Right},
      {Right, Right, Right, Right},
      {Left, Left, Left, Middle},
      {Middle, Left, Middle, Left},
      {Left, Middle, Middle, Right},
      {Right, Middle, Right, Middle},
      {Middle, Right, Right, Right},
      {Middle, Middle, Middle, Middle},
  }};
  return relations;
}

namespace {
const char* symbol(TriOp op) {
  switch (op) {
    case TriOp::Left: return "-|";
    case TriOp::Right: return "|-";
    case TriOp::Middle: return "_|_";
  }
  return "?";
}
}  // namespace

std::string to_string(const TriRelation& r) {
  return std::string("(x ") + symbol(r.inner_left) + " y) " + symbol(r.outer_left) + " z = x " +
         symbol(r.outer_right) + " (y " + symbol(r.inner_right) + " z)";
}

CheckReport check_relations(std::span<const TriRelation> relations, unsigned max_arity) {
  CheckReport report;
  for (unsigned a = 1; a + 2 <= max_arity; ++a)
    for (unsigned b = 1; a + b + 1 <= max_arity; ++b)
      for (unsigned c = 1; a + b + c <= max_arity; ++c) {
        const unsigned arities[] = {a, b, c};
        for_each_cell_tuple(arities, [&](std::span<const SubsetCell> t) {
          for (const auto& r : relations) {
            ++report.cases;
            SubsetCell lhs = tri_product(r.outer_left, tri_product(r.inner_left, t[0], t[1]), t[2]);
            SubsetCell rhs = tri_product(r.outer_right, t[0], tri_product(r.inner_right, t[1], t[2]));
            if (lhs != rhs)
              report.fail(to_string(r) + " fails at x=" + to_string(t[0]) + ", y=" +
                          to_string(t[1]) + ", z=" + to_string(t[2]));
          }
        });
      }
  return report;
}

CheckReport check_trialgebra_relations(unsigned max_arity) {
  return check_relations(trialgebra_relations(), max_arity);
}

TriElem boundary(const SubsetCell& x) {
  TriElem out;
  if (x.size() == 1) return out;
  int sign = 1;
  for (unsigned j : x.elements()) {
    out.add(SubsetCell::from_mask(x.arity(), x.mask() & ~(std::uint64_t{1} << (j - 1))), sign);
    sign = -sign;
  }
  return out;
}

TriElem boundary(const TriElem& x) {
  return linear<SubsetCell>(x, [](const SubsetCell& c) { return boundary(c); });
}

// --- dg rules ------------------------------------------------------------

std::string to_string(DegreeConvention c) {
  switch (c) {
    case DegreeConvention::Dimension: return "dimension";
    case DegreeConvention::VertexCount: return "vertex-count";
    case DegreeConvention::Arity: return "arity";
  }
  return "?";
}

unsigned degree_of(const SubsetCell& x, DegreeConvention c) {
  switch (c) {
    case DegreeConvention::Dimension: return x.degree();
    case DegreeConvention::VertexCount: return x.size();
    case DegreeConvention::Arity: return x.arity();
  }
  return 0;
}

std::string to_string(DgRuleFamily f) {
  switch (f) {
    case DgRuleFamily::Printed: return "printed";
    case DgRuleFamily::ConstantCorrection: return "constant-correction";
    case DgRuleFamily::VertexGatedCorrection: return "vertex-gated-correction";
  }
  return "?";
}

std::string DgRuleOutcome::describe() const {
  std::string s = to_string(family) + " rule for " + to_string(op) + ", |x| = " +
                  to_string(convention);
  if (family != DgRuleFamily::Printed)
    s += ", (e1, e2) = (" + std::to_string(eps_right) + ", " + std::to_string(eps_left) + ")";
  return s;
}

namespace {

TriElem cell(const SubsetCell& c) { return TriElem(c); }

// Right-hand side of the rule for a basis pair.
TriElem dg_rhs(const DgRuleOutcome& rule, const SubsetCell& x, const SubsetCell& y) {
  const int sx = degree_of(x, rule.convention) % 2 == 0 ? 1 : -1;
  const TriElem X = cell(x), Y = cell(y);
  switch (rule.op) {
    case TriOp::Left: return tri_left(boundary(X), Y);
    case TriOp::Right: return Rational(sx) * tri_right(X, boundary(Y));
    case TriOp::Middle: break;
  }
  TriElem out = tri_mid(boundary(X), Y) + Rational(sx) * tri_mid(X, boundary(Y));
  switch (rule.family) {
    case DgRuleFamily::Printed: break;
    case DgRuleFamily::ConstantCorrection:
      out.add(tri_right(X, Y), rule.eps_right);
      out.add(tri_left(X, Y), rule.eps_left);
      break;
    case DgRuleFamily::VertexGatedCorrection:
      if (x.size() == 1) out.add(tri_right(X, Y), rule.eps_right);
      if (y.size() == 1) out.add(tri_left(X, Y), -sx * rule.eps_left);
      break;
  }
  return out;
}

}  // namespace

DgReport check_dg_rules(unsigned max_arity) {
  DgReport report;
  report.max_arity = max_arity;
  constexpr DegreeConvention conventions[] = {DegreeConvention::Dimension,
                                              DegreeConvention::VertexCount,
                                              DegreeConvention::Arity};
  for (DegreeConvention conv : conventions)
    for (TriOp op : {TriOp::Left, TriOp::Right, TriOp::Middle})
      report.outcomes.push_back({DgRuleFamily::Printed, op, conv});
  for (DgRuleFamily family : {DgRuleFamily::ConstantCorrection, DgRuleFamily::VertexGatedCorrection})
    for (DegreeConvention conv : conventions)
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
          DgRuleOutcome o{family, TriOp::Middle, conv};
          o.eps_right = e1;
          o.eps_left = e2;
          report.outcomes.push_back(o);
        }

  const SubsetCell generator = simplex_unit();
  for (auto& rule : report.outcomes) {
    for (unsigned a = 1; a < max_arity; ++a)
      for (unsigned b = 1; a + b <= max_arity; ++b) {
        const unsigned arities[] = {a, b};
        for_each_cell_tuple(arities, [&](std::span<const SubsetCell> p) {
          ++rule.cases;
          TriElem lhs = boundary(tri_product(rule.op, cell(p[0]), cell(p[1])));
          TriElem rhs = dg_rhs(rule, p[0], p[1]);
          if (lhs == rhs) return;
          if (rule.universal)
            rule.counterexample = "x=" + to_string(p[0]) + ", y=" + to_string(p[1]) + ": lhs " +
                                  to_string(lhs) + ", rhs " + to_string(rhs);
          rule.universal = false;
          if (p[0] == generator && p[1] == generator) rule.holds_on_generator_pair = false;
        });
      }
  }
  return report;
}

bool DgReport::printed_rule_universal(TriOp op) const {
  for (const auto& o : outcomes)
    if (o.family == DgRuleFamily::Printed && o.op == op && o.universal) return true;
  return false;
}

bool DgReport::printed_rule_fails_on_generator(TriOp op) const {
  for (const auto& o : outcomes)
    if (o.family == DgRuleFamily::Printed && o.op == op && o.holds_on_generator_pair) return false;
  return true;
}

std::vector<const DgRuleOutcome*> DgReport::universal_corrections() const {
  std::vector<const DgRuleOutcome*> out;
  for (const auto& o : outcomes)
    if (o.family != DgRuleFamily::Printed && o.universal) out.push_back(&o);
  return out;
}

}  // namespace trioperad
