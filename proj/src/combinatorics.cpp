#include "trioperad/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <optional>

#include "trioperad/errors.hpp"

namespace trioperad {

namespace {

std::uint64_t bit(unsigned j) { return std::uint64_t{1} << (j - 1); }

// End (one past) of the subtree whose preorder code starts at pos.
std::size_t subtree_end(const std::string& code, std::size_t pos) {
  std::size_t pending = 1;
  while (pending > 0) {
    pending += static_cast<unsigned char>(code[pos]);
    --pending;
    ++pos;
  }
  return pos;
}

// Every composition of `total` into `parts` positive parts, lexicographic.
void for_each_composition(unsigned total, unsigned parts, std::vector<unsigned>& prefix,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  if (parts == 0) {
    if (total == 0) f(prefix);
    return;
  }
  for (unsigned first = 1; first + (parts - 1) <= total; ++first) {
    prefix.push_back(first);
    for_each_composition(total - first, parts - 1, prefix, f);
    prefix.pop_back();
  }
}

}  // namespace

// --- SubsetCell ----------------------------------------------------------

SubsetCell::SubsetCell(unsigned arity, std::span<const unsigned> elements)
    : arity_(arity), mask_(0) {
  if (arity == 0 || arity > kMaxSubsetArity)
    throw DomainError("subset cell arity must lie in 1..64, got " + std::to_string(arity));
  if (elements.empty()) throw DomainError("subset cell must be nonempty");
  unsigned previous = 0;
  for (unsigned j : elements) {
    if (j <= previous || j > arity)
      throw DomainError("subset cell elements must be strictly increasing within 1.." +
                        std::to_string(arity));
    mask_ |= bit(j);
    previous = j;
  }
}

SubsetCell::SubsetCell(unsigned arity, std::initializer_list<unsigned> elements)
    : SubsetCell(arity, std::span<const unsigned>(elements.begin(), elements.size())) {}

SubsetCell SubsetCell::from_mask(unsigned arity, std::uint64_t mask) {
  if (arity == 0 || arity > kMaxSubsetArity)
    throw DomainError("subset cell arity must lie in 1..64, got " + std::to_string(arity));
  if (mask == 0) throw DomainError("subset cell must be nonempty");
  if (arity < 64 && (mask >> arity) != 0)
    throw DomainError("subset cell element exceeds arity " + std::to_string(arity));
  return SubsetCell(arity, mask, 0);
}

unsigned SubsetCell::size() const { return static_cast<unsigned>(std::popcount(mask_)); }

bool SubsetCell::contains(unsigned j) const {
  return j >= 1 && j <= arity_ && (mask_ & bit(j)) != 0;
}

std::vector<unsigned> SubsetCell::elements() const {
  std::vector<unsigned> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1)
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  return out;
}

SubsetCell SubsetCell::embedded(unsigned offset, unsigned new_arity) const {
  if (offset + arity_ > new_arity)
    throw DomainError("cannot embed a cell of arity " + std::to_string(arity_) + " at offset " +
                      std::to_string(offset) + " into arity " + std::to_string(new_arity));
  return from_mask(new_arity, mask_ << offset);
}

std::strong_ordering operator<=>(const SubsetCell& a, const SubsetCell& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Same cardinality: the set owning the lowest differing element comes first.
  std::uint64_t lowest = (a.mask_ ^ b.mask_) & ~((a.mask_ ^ b.mask_) - 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<SubsetCell> enumerate_subset_cells(unsigned n) {
  if (n == 0) throw DomainError("enumerate_subset_cells: n must be >= 1");
  if (n > 30) throw DomainError("enumerate_subset_cells: n too large to enumerate");
  std::vector<SubsetCell> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
    out.push_back(SubsetCell::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

// --- PlanarTree ----------------------------------------------------------

PlanarTree::PlanarTree() : code_(1, '\0') {}

PlanarTree PlanarTree::corolla(unsigned k) {
  if (k < 2) throw DomainError("corolla needs at least 2 leaves");
  if (k > 255) throw DomainError("vertex arity above 255 is not supported");
  std::string code(k + 1, '\0');
  code[0] = static_cast<char>(k);
  return PlanarTree(std::move(code));
}

unsigned PlanarTree::leaves() const {
  return static_cast<unsigned>(std::count(code_.begin(), code_.end(), '\0'));
}

unsigned PlanarTree::internal_vertices() const {
  return static_cast<unsigned>(code_.size()) - leaves();
}

unsigned PlanarTree::degree() const { return leaves() - 1 - internal_vertices(); }

PlanarTree graft(std::span<const PlanarTree> parts) {
  if (parts.size() < 2) throw DomainError("graft needs at least 2 trees");
  if (parts.size() > 255) throw DomainError("vertex arity above 255 is not supported");
  std::string code(1, static_cast<char>(parts.size()));
  for (const auto& p : parts) code += p.code_;
  return PlanarTree(std::move(code));
}

PlanarTree graft(std::initializer_list<PlanarTree> parts) {
  return graft(std::span<const PlanarTree>(parts.begin(), parts.size()));
}

std::vector<PlanarTree> decompose(const PlanarTree& t) {
  if (t.is_leaf()) throw DomainError("| has no decomposition");
  std::vector<PlanarTree> children;
  children.reserve(t.root_arity());
  std::size_t pos = 1;
  for (unsigned c = 0; c < t.root_arity(); ++c) {
    std::size_t end = subtree_end(t.code_, pos);
    children.push_back(PlanarTree(t.code_.substr(pos, end - pos)));
    pos = end;
  }
  return children;
}

LeafOrientation leaf_orientation(const PlanarTree& t, unsigned i) {
  if (i == 0 || i > t.leaves())
    throw DomainError("leaf index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(t.leaves()));
  if (t.is_leaf()) throw DomainError("the unit tree | has no oriented leaf");
  // Stack of (arity, children already entered) for the open vertices.
  struct Open {
    unsigned arity;
    unsigned seen;
  };
  std::vector<Open> stack;
  unsigned leaf_index = 0;
  for (char ch : t.code()) {
    unsigned arity = static_cast<unsigned char>(ch);
    if (!stack.empty()) ++stack.back().seen;
    if (arity == 0) {
      if (++leaf_index == i) {
        const Open& parent = stack.back();
        if (parent.seen == 1) return LeafOrientation::Left;
        if (parent.seen == parent.arity) return LeafOrientation::Right;
        return LeafOrientation::Middle;
      }
      while (!stack.empty() && stack.back().seen == stack.back().arity) stack.pop_back();
    } else {
      stack.push_back({arity, 0});
    }
  }
  throw DomainError("leaf index out of range");  // unreachable
}

namespace {

std::optional<PlanarTree> remove_leaf_rec(const PlanarTree& t, unsigned i) {
  if (t.is_leaf()) return std::nullopt;  // i == 1 here
  auto children = decompose(t);
  std::vector<PlanarTree> kept;
  kept.reserve(children.size());
  unsigned before = 0;
  for (auto& c : children) {
    unsigned l = c.leaves();
    if (i > before && i <= before + l) {
      if (auto r = remove_leaf_rec(c, i - before)) kept.push_back(std::move(*r));
    } else {
      kept.push_back(std::move(c));
    }
    before += l;
  }
  if (kept.size() == 1) return kept.front();
  return graft(kept);
}

}  // namespace

PlanarTree remove_leaf(const PlanarTree& t, unsigned i) {
  if (t.leaves() < 2) throw DomainError("remove_leaf needs a tree with at least 2 leaves");
  if (i == 0 || i > t.leaves())
    throw DomainError("leaf index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(t.leaves()));
  return *remove_leaf_rec(t, i);
}

std::vector<PlanarTree> enumerate_planar_trees(unsigned leaves) {
  if (leaves == 0) throw DomainError("enumerate_planar_trees: leaves must be >= 1");
  if (leaves > 12) throw DomainError("enumerate_planar_trees: leaves too large to enumerate");
  std::vector<std::vector<PlanarTree>> by_leaves(leaves + 1);
  by_leaves[1].push_back(PlanarTree::leaf());
  for (unsigned m = 2; m <= leaves; ++m) {
    auto& level = by_leaves[m];
    std::vector<unsigned> prefix;
    for (unsigned k = 2; k <= m; ++k) {
      for_each_composition(m, k, prefix, [&](const std::vector<unsigned>& parts) {
        // Cartesian product over the parts, odometer style.
        std::vector<std::size_t> digit(parts.size(), 0);
        std::vector<PlanarTree> chosen(parts.size());
        for (bool more = true; more;) {
          for (std::size_t p = 0; p < parts.size(); ++p) chosen[p] = by_leaves[parts[p]][digit[p]];
          level.push_back(graft(chosen));
          more = false;
          for (std::size_t p = parts.size(); p-- > 0;) {
            if (++digit[p] < by_leaves[parts[p]].size()) {
              more = true;
              break;
            }
            digit[p] = 0;
          }
        }
      });
    }
    std::sort(level.begin(), level.end());
  }
  return by_leaves[leaves];
}

// --- CubeCell ------------------------------------------------------------

CubeCell::CubeCell(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != '0' && c != '1' && c != '*')
      throw DomainError(std::string("cube cell letter must be 0, 1 or *, got '") + c + "'");
}

unsigned CubeCell::degree() const {
  return static_cast<unsigned>(std::count(word_.begin(), word_.end(), '*'));
}

std::vector<CubeCell> enumerate_cube_cells(unsigned n) {
  if (n == 0) throw DomainError("enumerate_cube_cells: n must be >= 1");
  if (n > 16) throw DomainError("enumerate_cube_cells: n too large to enumerate");
  static constexpr char kAlphabet[] = {'0', '1', '*'};
  std::vector<CubeCell> out;
  std::vector<unsigned> digit(n - 1, 0);
  while (true) {
    std::string w(n - 1, '0');
    for (unsigned p = 0; p + 1 < n; ++p) w[p] = kAlphabet[digit[p]];
    out.emplace_back(std::move(w));
    unsigned p = n - 1;
    while (p > 0) {
      --p;
      if (++digit[p] < 3) break;
      digit[p] = 0;
      if (p == 0) return out;
    }
    if (n == 1) return out;
  }
}

// --- degree counts -------------------------------------------------------

namespace {
template <typename T>
std::vector<std::size_t> degree_histogram(std::span<const T> cells) {
  std::vector<std::size_t> out;
  for (const auto& c : cells) {
    unsigned d = c.degree();
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}
}  // namespace

std::vector<std::size_t> count_by_degree(std::span<const SubsetCell> cells) {
  return degree_histogram(cells);
}
std::vector<std::size_t> count_by_degree(std::span<const PlanarTree> trees) {
  return degree_histogram(trees);
}
std::vector<std::size_t> count_by_degree(std::span<const CubeCell> cells) {
  return degree_histogram(cells);
}

// --- text formats --------------------------------------------------------

namespace {

void append_tree(const std::string& code, std::size_t& pos, std::string& out) {
  unsigned arity = static_cast<unsigned char>(code[pos++]);
  if (arity == 0) {
    out += '|';
    return;
  }
  out += '(';
  for (unsigned c = 0; c < arity; ++c) {
    if (c) out += ',';
    append_tree(code, pos, out);
  }
  out += ')';
}

constexpr const char* kTreeGrammar = "tree := \"|\" | \"(\" tree (\",\" tree)+ \")\"";
constexpr const char* kSubsetGrammar = "subset := \"{\" int (\",\" int)* \"}@\" int, e.g. {1,3}@4";

[[noreturn]] void tree_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw ParseError("malformed tree literal '" + std::string(text) + "' at offset " +
                   std::to_string(pos) + ": " + what + " (expected " + kTreeGrammar + ")");
}

PlanarTree parse_tree_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) tree_error(text, pos, "unexpected end");
  if (text[pos] == '|') {
    ++pos;
    return PlanarTree::leaf();
  }
  if (text[pos] != '(') tree_error(text, pos, std::string("unexpected '") + text[pos] + "'");
  ++pos;
  std::vector<PlanarTree> children;
  children.push_back(parse_tree_at(text, pos));
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    children.push_back(parse_tree_at(text, pos));
  }
  if (pos >= text.size() || text[pos] != ')') tree_error(text, pos, "expected ',' or ')'");
  ++pos;
  if (children.size() < 2) tree_error(text, pos, "internal vertex with fewer than 2 children");
  return graft(children);
}

unsigned parse_uint(std::string_view text, std::size_t& pos, std::string_view whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + pos)
    throw ParseError("malformed subset literal '" + std::string(whole) + "' at offset " +
                     std::to_string(pos) + ": expected an integer (expected " + kSubsetGrammar +
                     ")");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

std::string to_string(const PlanarTree& t) {
  std::string out;
  std::size_t pos = 0;
  append_tree(t.code(), pos, out);
  return out;
}

std::string to_string(const SubsetCell& c) {
  std::string out = "{";
  bool first = true;
  for (unsigned j : c.elements()) {
    if (!first) out += ',';
    out += std::to_string(j);
    first = false;
  }
  out += "}@" + std::to_string(c.arity());
  return out;
}

std::string to_string(const CubeCell& c) { return c.word(); }

std::string to_string(LeafOrientation o) {
  switch (o) {
    case LeafOrientation::Left: return "left";
    case LeafOrientation::Right: return "right";
    case LeafOrientation::Middle: return "middle";
  }
  return "?";
}

PlanarTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  PlanarTree t = parse_tree_at(text, pos);
  if (pos != text.size()) tree_error(text, pos, "trailing characters");
  return t;
}

SubsetCell parse_subset(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& what) -> ParseError {
    return ParseError("malformed subset literal '" + std::string(text) + "' at offset " +
                      std::to_string(pos) + ": " + what + " (expected " + kSubsetGrammar + ")");
  };
  std::size_t pos = 0;
  if (text.empty() || text[0] != '{') throw fail(0, "expected '{'");
  ++pos;
  std::vector<unsigned> elements;
  elements.push_back(parse_uint(text, pos, text));
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    elements.push_back(parse_uint(text, pos, text));
  }
  if (pos + 1 >= text.size() || text[pos] != '}' || text[pos + 1] != '@')
    throw fail(pos, "expected '}@'");
  pos += 2;
  unsigned arity = parse_uint(text, pos, text);
  if (pos != text.size()) throw fail(pos, "trailing characters");
  try {
    return SubsetCell(arity, elements);
  } catch (const DomainError& e) {
    throw fail(0, e.what());
  }
}

CubeCell parse_cube(std::string_view text) {
  for (std::size_t p = 0; p < text.size(); ++p)
    if (text[p] != '0' && text[p] != '1' && text[p] != '*')
      throw ParseError("malformed cube literal '" + std::string(text) + "' at offset " +
                       std::to_string(p) + " (expected cube := [01*]*)");
  return CubeCell(std::string(text));
}

}  // namespace trioperad
