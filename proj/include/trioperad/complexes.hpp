#pragma once

// The two Koszul chain complexes on free algebras, one weight at a time:
//
//   simplex coefficients: C_n = C_*(simplex of dim n-1) (x) A^(x)n, A the free
//                         dendriform trialgebra;
//   tree coefficients:    C_n = C_*(associahedron K^(n-1)) (x) A^(x)n, A the
//                         free associative trialgebra;
//
// both with d = - sum_{i=1}^{n-1} (-1)^i d_i.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "trioperad/combinatorics.hpp"
#include "trioperad/dendriform_algebra.hpp"
#include "trioperad/linear.hpp"
#include "trioperad/simplex_algebra.hpp"

namespace trioperad {

enum class ComplexFamily { SimplexCoeff, TreeCoeff };

std::string to_string(ComplexFamily f);
/// "simplex" or "tree".
ComplexFamily parse_family(std::string_view text);

/// Product used by the simplex face d_i, keyed on whether i and i+1 lie in X.
///
///              i in X, i+1 in X   i not in X, i+1 in X   i in X, i+1 not in X   neither
///   Printed          .                    <                      >                 *
///   Swapped          .                    >                      <                 *
enum class SimplexFaceTable { Printed, Swapped };

std::string to_string(SimplexFaceTable t);
DendOp simplex_face_product(SimplexFaceTable table, bool i_in, bool next_in);

/// d_i on the tree coefficient removes leaf i + leaf_offset and multiplies
/// factors i, i+1 by -| , |- or _|_ when that leaf is Left, Right or Middle
/// (Right, Left, Middle when mirrored).
struct TreeFaceConvention {
  unsigned leaf_offset = 1;
  bool mirrored = false;
  friend bool operator==(const TreeFaceConvention&, const TreeFaceConvention&) = default;
};

std::string to_string(const TreeFaceConvention& c);
TriOp tree_face_product(const TreeFaceConvention& c, LeafOrientation o);

/// The conventions singled out by sweep_conventions().
inline constexpr SimplexFaceTable kSimplexFaceTable = SimplexFaceTable::Swapped;
inline constexpr TreeFaceConvention kTreeFaceConvention{1, false};

struct SimplexChain {
  SubsetCell cell;                  // X inside [n]
  std::vector<PlanarTree> factors;  // n trees, each with >= 2 leaves
  friend auto operator<=>(const SimplexChain&, const SimplexChain&) = default;
};

struct TreeChain {
  PlanarTree tree;                  // n+1 leaves
  std::vector<SubsetCell> factors;  // n cells
  friend auto operator<=>(const TreeChain&, const TreeChain&) = default;
};

std::string to_string(const SimplexChain& c);
std::string to_string(const TreeChain& c);

/// Weight: total number of generators in the tensor factors.
unsigned weight(const SimplexChain& c);
unsigned weight(const TreeChain& c);

/// The d_i face, 1 <= i <= n-1.
LinComb<SimplexChain> face_map_simplex_coeff(unsigned i, const SimplexChain& c,
                                             SimplexFaceTable table = kSimplexFaceTable);
LinComb<TreeChain> face_map_tree_coeff(unsigned i, const TreeChain& c,
                                       const TreeFaceConvention& conv = kTreeFaceConvention);

/// d = - sum_i (-1)^i d_i.
LinComb<SimplexChain> differential(const SimplexChain& c,
                                   SimplexFaceTable table = kSimplexFaceTable);
LinComb<TreeChain> differential(const TreeChain& c,
                                const TreeFaceConvention& conv = kTreeFaceConvention);

/// Basis of C_n in weight w, in a fixed deterministic order.
std::vector<SimplexChain> simplex_chain_basis(unsigned n, unsigned w);
std::vector<TreeChain> tree_chain_basis(unsigned n, unsigned w);

struct ComplexOptions {
  SimplexFaceTable simplex_table = kSimplexFaceTable;
  TreeFaceConvention tree_convention = kTreeFaceConvention;
};

/// One weight of a complex. dims[n] = dim C_n for n = 1..w (dims[0] = 0);
/// boundary[n] is d_n : C_n -> C_{n-1} for n = 2..w, one row per basis
/// element of C_n, expressed in the basis of C_{n-1}.
struct GradedComplex {
  ComplexFamily family;
  unsigned weight = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundary;
  bool d_squared_zero = true;
  /// First n with d_{n-1} d_n != 0, described.
  std::optional<std::string> d_squared_witness;
};

/// Throws DomainError when w < 1.
GradedComplex build_complex(ComplexFamily family, unsigned w, const ComplexOptions& options = {});

struct HomologyRanks {
  /// rank_d[n] = rank of d_n (0 for n = 1 and n = w+1).
  std::vector<std::size_t> rank_d;
  /// betti[n] for n = 1..w; betti[0] unused.
  std::vector<std::size_t> betti;
};

/// betti_n = dim C_n - rank d_n - rank d_{n+1}. Throws DomainError when
/// d^2 != 0.
HomologyRanks homology_ranks(const GradedComplex& c);

/// betti = 1 at (n, w) = (1, 1), 0 otherwise.
bool koszul_profile(unsigned w, const HomologyRanks& h);

struct ConventionCandidate {
  ComplexFamily family;
  std::string label;
  SimplexFaceTable simplex_table = kSimplexFaceTable;
  TreeFaceConvention tree_convention = kTreeFaceConvention;
  /// Weights at which d^2 = 0 failed, and at which betti deviated.
  std::vector<unsigned> d_squared_failures;
  std::vector<unsigned> homology_failures;
  bool valid() const { return d_squared_failures.empty() && homology_failures.empty(); }
};

struct ConventionSweep {
  unsigned max_weight = 0;
  std::vector<ConventionCandidate> candidates;
  /// Set iff exactly one candidate per family is valid.
  std::optional<SimplexFaceTable> simplex_table;
  std::optional<TreeFaceConvention> tree_convention;
};

/// Tries both simplex face tables and the tree conventions with leaf offset
/// 0 or 1, mirrored or not, on weights 1..max_weight.
ConventionSweep sweep_conventions(unsigned max_weight = 3);

}  // namespace trioperad
