#pragma once

// Cell families of the three polytope towers: faces of standard simplices
// (nonempty subsets of [n]), faces of Stasheff polytopes (planar rooted
// trees) and faces of cubes ({0,1,*}-words).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trioperad {

/// Largest arity representable by a SubsetCell (elements live in a 64-bit mask).
inline constexpr unsigned kMaxSubsetArity = 64;

/// A nonempty subset X of [n] = {1..n}, remembered together with n.
/// Cell of dimension |X|-1 of the simplex of dimension n-1.
class SubsetCell {
 public:
  /// Throws DomainError unless 1 <= arity <= 64 and the elements are
  /// nonempty, strictly increasing and within 1..arity.
  SubsetCell(unsigned arity, std::span<const unsigned> elements);
  SubsetCell(unsigned arity, std::initializer_list<unsigned> elements);

  /// Builds a cell from a bit mask (bit j-1 set means j is an element).
  static SubsetCell from_mask(unsigned arity, std::uint64_t mask);

  unsigned arity() const { return arity_; }
  std::uint64_t mask() const { return mask_; }
  unsigned size() const;
  unsigned degree() const { return size() - 1; }
  bool contains(unsigned j) const;
  std::vector<unsigned> elements() const;

  /// Same subset read inside [offset+1 .. offset+arity] of [new_arity].
  SubsetCell embedded(unsigned offset, unsigned new_arity) const;

  /// Arity first, then cardinality, then lexicographic order of the
  /// increasing element sequence. This is the enumeration order.
  friend std::strong_ordering operator<=>(const SubsetCell& a, const SubsetCell& b);
  friend bool operator==(const SubsetCell&, const SubsetCell&) = default;

 private:
  SubsetCell(unsigned arity, std::uint64_t mask, int /*unchecked*/)
      : arity_(arity), mask_(mask) {}
  unsigned arity_;
  std::uint64_t mask_;
};

/// Planar rooted tree, every internal vertex of arity >= 2.
///
/// Stored as the preorder sequence of child counts (0 for a leaf), which is
/// prefix-free; the byte-wise order of that encoding is the canonical order
/// (root arity first, then children left to right, recursively).
class PlanarTree {
 public:
  /// The unit tree | (a single leaf).
  PlanarTree();

  static PlanarTree leaf() { return PlanarTree(); }
  /// Root with k leaf children.
  static PlanarTree corolla(unsigned k);

  bool is_leaf() const { return code_.size() == 1; }
  unsigned leaves() const;
  unsigned internal_vertices() const;
  /// leaves - 1 - internal vertices; zero exactly for binary trees.
  unsigned degree() const;
  /// Number of children of the root (0 for the leaf).
  unsigned root_arity() const { return static_cast<unsigned char>(code_[0]); }

  const std::string& code() const { return code_; }

  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    return a.code_ <=> b.code_;
  }
  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

  friend PlanarTree graft(std::span<const PlanarTree> parts);
  friend PlanarTree remove_leaf(const PlanarTree& t, unsigned i);
  friend std::vector<PlanarTree> decompose(const PlanarTree& t);

 private:
  explicit PlanarTree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// Face of the cube I^{n-1}: a word of length n-1 over {0, 1, *}.
class CubeCell {
 public:
  explicit CubeCell(std::string word);
  unsigned arity() const { return static_cast<unsigned>(word_.size()) + 1; }
  unsigned degree() const;
  const std::string& word() const { return word_; }

  friend auto operator<=>(const CubeCell&, const CubeCell&) = default;

 private:
  std::string word_;
};

enum class LeafOrientation { Left, Right, Middle };

// --- enumeration ---------------------------------------------------------

/// All 2^n - 1 cells of the simplex of dimension n-1, by cardinality then
/// lexicographically.
std::vector<SubsetCell> enumerate_subset_cells(unsigned n);

/// All planar trees with the given number of leaves, in canonical order.
std::vector<PlanarTree> enumerate_planar_trees(unsigned leaves);

/// All 3^{n-1} cells of I^{n-1}, lexicographic with 0 < 1 < *.
std::vector<CubeCell> enumerate_cube_cells(unsigned n);

/// Cell counts of a family indexed by degree: result[d] is the number of
/// degree-d cells.
std::vector<std::size_t> count_by_degree(std::span<const SubsetCell> cells);
std::vector<std::size_t> count_by_degree(std::span<const PlanarTree> trees);
std::vector<std::size_t> count_by_degree(std::span<const CubeCell> cells);

// --- tree surgery --------------------------------------------------------

/// Root joined to the given subtrees, x(1) v ... v x(k). Needs k >= 2.
PlanarTree graft(std::span<const PlanarTree> parts);
PlanarTree graft(std::initializer_list<PlanarTree> parts);

/// Inverse of graft: the root's subtrees. The leaf has no decomposition.
std::vector<PlanarTree> decompose(const PlanarTree& t);

/// Leaves are numbered 1..leaves(t) left to right. A leaf is Left when it is
/// the first child of its parent, Right when it is the last child, Middle
/// otherwise. The single leaf | has no parent and is rejected.
LeafOrientation leaf_orientation(const PlanarTree& t, unsigned i);

/// Deletes leaf i. A parent left with a single child is contracted so the
/// result again has all arities >= 2.
PlanarTree remove_leaf(const PlanarTree& t, unsigned i);

// --- text formats --------------------------------------------------------
//
//   tree     := "|" | "(" tree ("," tree)+ ")"
//   subset   := "{" int ("," int)* "}@" int       e.g. {1,3}@4
//   cube     := [01*]*                             e.g. 0*1

std::string to_string(const PlanarTree& t);
std::string to_string(const SubsetCell& c);
std::string to_string(const CubeCell& c);
std::string to_string(LeafOrientation o);

PlanarTree parse_tree(std::string_view text);
SubsetCell parse_subset(std::string_view text);
CubeCell parse_cube(std::string_view text);

}  // namespace trioperad

template <>
struct std::hash<trioperad::PlanarTree> {
  std::size_t operator()(const trioperad::PlanarTree& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};

template <>
struct std::hash<trioperad::SubsetCell> {
  std::size_t operator()(const trioperad::SubsetCell& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.mask() * 131u + c.arity());
  }
};
