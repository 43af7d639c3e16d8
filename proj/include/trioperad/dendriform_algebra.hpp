#pragma once

// The free dendriform trialgebra on one generator. Its arity-n part has the
// planar trees with n+1 leaves as basis; the generator is the 2-leaf tree.

#include <array>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "trioperad/check_report.hpp"
#include "trioperad/combinatorics.hpp"
#include "trioperad/linear.hpp"

namespace trioperad {

using DendElem = LinComb<PlanarTree>;

/// prec (<), succ (>), mid (.) and their sum star (*).
enum class DendOp { Prec, Succ, Mid, Star };

std::string to_string(DendOp op);

/// The generator (|,|).
PlanarTree dendriform_generator();

/// Evaluates the recursive products
///
///   x < y = x(1) v ... v (x(k) * y)
///   x > y = (x * y(1)) v ... v y(l)
///   x . y = x(1) v ... v (x(k) * y(1)) v ... v y(l)
///
/// where | is the unit for * inside the recursion. Results are memoized, so
/// an instance must not be shared between threads.
///
/// With `with_middle = false` the middle product is identically zero and
/// * = < + >, which gives the free dendriform dialgebra on binary trees.
class DendriformEngine {
 public:
  explicit DendriformEngine(bool with_middle = true) : with_middle_(with_middle) {}

  /// x and y must not be the unit |.
  const DendElem& product(DendOp op, const PlanarTree& x, const PlanarTree& y);
  /// Accepts the unit | in either argument.
  DendElem star_with_unit(const PlanarTree& x, const PlanarTree& y);

  DendElem product(DendOp op, const DendElem& x, const DendElem& y);

  bool with_middle() const { return with_middle_; }
  std::size_t cache_size() const { return cache_[0].size() + cache_[1].size() + cache_[2].size(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<PlanarTree, PlanarTree>& p) const noexcept {
      std::size_t h = std::hash<PlanarTree>{}(p.first);
      return h ^ (std::hash<PlanarTree>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  };
  using Cache = std::unordered_map<std::pair<PlanarTree, PlanarTree>, DendElem, PairHash>;

  const DendElem& basic(DendOp op, const PlanarTree& x, const PlanarTree& y);

  bool with_middle_;
  std::array<Cache, 4> cache_;
};

/// Thread-local engines back these free functions.
DendElem prec(const DendElem& x, const DendElem& y);
DendElem succ(const DendElem& x, const DendElem& y);
DendElem mid(const DendElem& x, const DendElem& y);
DendElem dend_product(DendOp op, const DendElem& x, const DendElem& y);
DendElem dend_product(DendOp op, const PlanarTree& x, const PlanarTree& y);

/// x * y with | as a two-sided unit.
DendElem star(const PlanarTree& x, const PlanarTree& y);

/// (x inner_left y) outer_left z = x outer_right (y inner_right z); any slot
/// may be Star.
struct DendRelation {
  DendOp inner_left, outer_left, outer_right, inner_right;
};

/// The seven defining relations of dendriform trialgebras, in order.
const std::array<DendRelation, 7>& dendriform_relations();

std::string to_string(const DendRelation& r);

/// Checks `relations` on every tree triple (each with >= 2 leaves) whose
/// total leaf count is <= max_leaves.
CheckReport check_relations(std::span<const DendRelation> relations, unsigned max_leaves,
                            DendriformEngine& engine);

CheckReport check_dendriform_relations(unsigned max_leaves);

/// The first three relations with . = 0, restricted to binary trees.
CheckReport check_dendriform_dialgebra(unsigned max_leaves);

/// (x*y)*z = x*(y*z) on tree triples with total leaves <= max_leaves.
CheckReport star_associativity(unsigned max_leaves);

/// a * a * ... * a (n factors) for the generator a.
DendElem star_power(unsigned n);

/// Rank of the span of all iterated <, >, . products of n copies of the
/// generator, inside the space of trees with n+1 leaves.
std::size_t generated_rank(unsigned n);

}  // namespace trioperad
