#pragma once

// The operad of chain complexes of standard simplices and the free
// associative trialgebra on one generator, whose arity-n part has the
// nonempty subsets of [n] as basis.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trioperad/check_report.hpp"
#include "trioperad/combinatorics.hpp"
#include "trioperad/linear.hpp"

namespace trioperad {

using TriElem = LinComb<SubsetCell>;

/// The three binary generators: left (-|), right (|-) and middle (_|_).
enum class TriOp { Left, Right, Middle };

std::string to_string(TriOp op);

/// The operad unit {1}@1.
SubsetCell simplex_unit();

/// Operadic composition: with o_j = i_1 + ... + i_{j-1}, the union over j in
/// X of args[j] shifted by o_j, inside [i_1 + ... + i_n].
SubsetCell gamma(const SubsetCell& x, std::span<const SubsetCell> args);

/// Associativity and both unit laws of gamma over every basis configuration
/// of total arity <= max_arity.
CheckReport check_operad_axioms(unsigned max_arity);

SubsetCell tri_product(TriOp op, const SubsetCell& x, const SubsetCell& y);
TriElem tri_product(TriOp op, const TriElem& x, const TriElem& y);

inline TriElem tri_left(const TriElem& x, const TriElem& y) { return tri_product(TriOp::Left, x, y); }
inline TriElem tri_right(const TriElem& x, const TriElem& y) { return tri_product(TriOp::Right, x, y); }
inline TriElem tri_mid(const TriElem& x, const TriElem& y) { return tri_product(TriOp::Middle, x, y); }

/// (x inner_left y) outer_left z = x outer_right (y inner_right z).
struct TriRelation {
  TriOp inner_left, outer_left, outer_right, inner_right;
};

/// The eleven defining relations of associative trialgebras, in order.
const std::array<TriRelation, 11>& trialgebra_relations();

std::string to_string(const TriRelation& r);

/// Checks `relations` on every triple of basis cells with arity sum
/// <= max_arity.
CheckReport check_relations(std::span<const TriRelation> relations, unsigned max_arity);

/// All eleven relations.
CheckReport check_trialgebra_relations(unsigned max_arity);

/// Simplicial boundary: d{j_1 < ... < j_k} = sum_r (-1)^(r-1) (X - j_r);
/// the boundary of a vertex is 0.
TriElem boundary(const SubsetCell& x);
TriElem boundary(const TriElem& x);

// --- differential-graded rule discovery ---------------------------------

/// How the sign exponent |x| of a basis cell x is read.
enum class DegreeConvention {
  Dimension,    // |X| - 1
  VertexCount,  // |X|
  Arity,        // n, the word-length grading
};

std::string to_string(DegreeConvention c);
unsigned degree_of(const SubsetCell& x, DegreeConvention c);

enum class DgRuleFamily {
  /// The three Leibniz-type rules exactly as printed.
  Printed,
  /// d(x_|_y) = dx_|_y + (-1)^|x| x_|_dy + e1 x|-y + e2 x-|y.
  ConstantCorrection,
  /// d(x_|_y) = dx_|_y + (-1)^|x| x_|_dy + e1 [x vertex] x|-y
  ///            + e2 (-1)^(|x|+1) [y vertex] x-|y.
  /// On the generator pair it coincides with ConstantCorrection.
  VertexGatedCorrection,
};

std::string to_string(DgRuleFamily f);

struct DgRuleOutcome {
  DgRuleFamily family;
  TriOp op;  // the product the rule differentiates
  DegreeConvention convention;
  int eps_right = 0;  // e1
  int eps_left = 0;   // e2
  bool universal = true;
  bool holds_on_generator_pair = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  std::string describe() const;
};

struct DgReport {
  unsigned max_arity = 0;
  std::vector<DgRuleOutcome> outcomes;

  /// Printed rule for `op` holds universally under some degree convention.
  bool printed_rule_universal(TriOp op) const;
  /// Printed rule for `op` fails on x = y = {1}@1 under every convention.
  bool printed_rule_fails_on_generator(TriOp op) const;
  /// Correction variants that hold universally.
  std::vector<const DgRuleOutcome*> universal_corrections() const;
};

/// Tests the printed rules and both correction families on every pair of
/// basis cells with arity sum <= max_arity, under each degree convention.
DgReport check_dg_rules(unsigned max_arity);

}  // namespace trioperad
