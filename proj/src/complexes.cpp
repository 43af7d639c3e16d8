#include "trioperad/complexes.hpp"

#include <map>

namespace trioperad {

std::string to_string(ComplexFamily f) {
  return f == ComplexFamily::SimplexCoeff ? "simplex" : "tree";
}

ComplexFamily parse_family(std::string_view text) {
  if (text == "simplex") return ComplexFamily::SimplexCoeff;
  if (text == "tree") return ComplexFamily::TreeCoeff;
  throw ParseError("unknown complex family '" + std::string(text) + "' (expected simplex|tree)");
}

std::string to_string(SimplexFaceTable t) {
  return t == SimplexFaceTable::Printed ? "printed" : "swapped";
}

DendOp simplex_face_product(SimplexFaceTable table, bool i_in, bool next_in) {
  if (i_in && next_in) return DendOp::Mid;
  if (!i_in && !next_in) return DendOp::Star;
  const bool prec = next_in == (table == SimplexFaceTable::Printed);
  return prec ? DendOp::Prec : DendOp::Succ;
}

std::string to_string(const TreeFaceConvention& c) {
  return "leaf i+" + std::to_string(c.leaf_offset) + (c.mirrored ? ", mirrored" : "");
}

TriOp tree_face_product(const TreeFaceConvention& c, LeafOrientation o) {
  switch (o) {
    case LeafOrientation::Left: return c.mirrored ? TriOp::Right : TriOp::Left;
    case LeafOrientation::Right: return c.mirrored ? TriOp::Left : TriOp::Right;
    case LeafOrientation::Middle: return TriOp::Middle;
  }
  return TriOp::Middle;
}

namespace {

template <typename T>
std::string factors_string(const std::vector<T>& factors) {
  std::string out;
  for (const auto& f : factors) {
    out += out.empty() ? "" : " ";
    out += to_string(f);
  }
  return out;
}

void compositions_into(unsigned w, unsigned n, std::vector<unsigned>& prefix,
                       std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    if (w == 0) out.push_back(prefix);
    return;
  }
  for (unsigned first = 1; first + (n - 1) <= w; ++first) {
    prefix.push_back(first);
    compositions_into(w - first, n - 1, prefix, out);
    prefix.pop_back();
  }
}

// Ordered ways of writing w as n positive parts.
std::vector<std::vector<unsigned>> compositions(unsigned w, unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  compositions_into(w, n, prefix, out);
  return out;
}

template <typename T, typename F>
void for_each_product(const std::vector<const std::vector<T>*>& choices, F&& f) {
  const std::size_t n = choices.size();
  for (const auto* c : choices)
    if (c->empty()) return;
  std::vector<std::size_t> at(n, 0);
  std::vector<T> current;
  for (;;) {
    current.clear();
    for (std::size_t k = 0; k < n; ++k) current.push_back((*choices[k])[at[k]]);
    f(current);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++at[k] < choices[k]->size()) break;
      at[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

const std::vector<PlanarTree>& trees_with(unsigned leaves) {
  static std::map<unsigned, std::vector<PlanarTree>> cache;
  auto it = cache.find(leaves);
  if (it == cache.end()) it = cache.emplace(leaves, enumerate_planar_trees(leaves)).first;
  return it->second;
}

const std::vector<SubsetCell>& cells_of(unsigned arity) {
  static std::map<unsigned, std::vector<SubsetCell>> cache;
  auto it = cache.find(arity);
  if (it == cache.end()) it = cache.emplace(arity, enumerate_subset_cells(arity)).first;
  return it->second;
}

void check_face_index(unsigned i, std::size_t n) {
  if (i < 1 || i + 1 > n)
    throw DomainError("face index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(n > 0 ? n - 1 : 0));
}

SubsetCell collapse(const SubsetCell& x, unsigned i) {
  std::uint64_t mask = 0;
  for (unsigned r : x.elements()) mask |= std::uint64_t{1} << ((r >= i + 1 ? r - 1 : r) - 1);
  return SubsetCell::from_mask(x.arity() - 1, mask);
}

LinComb<SimplexChain> simplex_face(unsigned i, const SimplexChain& c, SimplexFaceTable table,
                                   DendriformEngine& engine) {
  check_face_index(i, c.factors.size());
  const DendOp op = simplex_face_product(table, c.cell.contains(i), c.cell.contains(i + 1));
  const SubsetCell cell = collapse(c.cell, i);
  LinComb<SimplexChain> out;
  for (const auto& [t, coeff] : engine.product(op, c.factors[i - 1], c.factors[i])) {
    std::vector<PlanarTree> f(c.factors.begin(), c.factors.begin() + (i - 1));
    f.push_back(t);
    f.insert(f.end(), c.factors.begin() + (i + 1), c.factors.end());
    out.add(SimplexChain{cell, std::move(f)}, coeff);
  }
  return out;
}

LinComb<TreeChain> tree_face(unsigned i, const TreeChain& c, const TreeFaceConvention& conv) {
  check_face_index(i, c.factors.size());
  const unsigned leaf = i + conv.leaf_offset;
  if (leaf < 1 || leaf > c.tree.leaves())
    throw DomainError("leaf " + std::to_string(leaf) + " out of range for " + to_string(c.tree));
  const TriOp op = tree_face_product(conv, leaf_orientation(c.tree, leaf));
  std::vector<SubsetCell> f(c.factors.begin(), c.factors.begin() + (i - 1));
  f.push_back(tri_product(op, c.factors[i - 1], c.factors[i]));
  f.insert(f.end(), c.factors.begin() + (i + 1), c.factors.end());
  return LinComb<TreeChain>(TreeChain{remove_leaf(c.tree, leaf), std::move(f)});
}

Rational face_sign(unsigned i) { return i % 2 == 0 ? -1 : 1; }

DendriformEngine& local_engine() {
  thread_local DendriformEngine engine;
  return engine;
}

template <typename Chain, typename Basis, typename Diff>
GradedComplex assemble(ComplexFamily family, unsigned w, Basis&& basis_of, Diff&& diff) {
  GradedComplex out;
  out.family = family;
  out.weight = w;
  out.dims.assign(w + 1, 0);
  out.boundary.resize(w + 1);

  std::vector<std::vector<Chain>> bases(w + 1);
  for (unsigned n = 1; n <= w; ++n) {
    bases[n] = basis_of(n);
    out.dims[n] = bases[n].size();
  }
  std::map<Chain, std::size_t> lower;
  for (std::size_t j = 0; j < bases[1].size(); ++j) lower.emplace(bases[1][j], j);
  for (unsigned n = 2; n <= w; ++n) {
    SparseMatrix d(bases[n].size(), bases[n - 1].size());
    for (std::size_t r = 0; r < bases[n].size(); ++r) {
      SparseMatrix::Row row;
      for (const auto& [chain, coeff] : diff(bases[n][r])) row.emplace_back(lower.at(chain), coeff);
      d.set_row(r, std::move(row));
    }
    out.boundary[n] = std::move(d);
    lower.clear();
    for (std::size_t j = 0; j < bases[n].size(); ++j) lower.emplace(bases[n][j], j);
  }

  for (unsigned n = 3; n <= w && out.d_squared_zero; ++n) {
    SparseMatrix dd = out.boundary[n] * out.boundary[n - 1];
    for (std::size_t r = 0; r < dd.rows(); ++r) {
      if (dd.row(r).empty()) continue;
      out.d_squared_zero = false;
      LinComb<Chain> image;
      for (const auto& [j, coeff] : dd.row(r)) image.add(bases[n - 2][j], coeff);
      out.d_squared_witness = "d(d(" + to_string(bases[n][r]) + ")) = " + to_string(image);
      break;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const SimplexChain& c) {
  return "[" + to_string(c.cell) + "; " + factors_string(c.factors) + "]";
}

std::string to_string(const TreeChain& c) {
  return "[" + to_string(c.tree) + "; " + factors_string(c.factors) + "]";
}

unsigned weight(const SimplexChain& c) {
  unsigned w = 0;
  for (const auto& t : c.factors) w += t.leaves() - 1;
  return w;
}

unsigned weight(const TreeChain& c) {
  unsigned w = 0;
  for (const auto& x : c.factors) w += x.arity();
  return w;
}

LinComb<SimplexChain> face_map_simplex_coeff(unsigned i, const SimplexChain& c,
                                             SimplexFaceTable table) {
  return simplex_face(i, c, table, local_engine());
}

LinComb<TreeChain> face_map_tree_coeff(unsigned i, const TreeChain& c,
                                       const TreeFaceConvention& conv) {
  return tree_face(i, c, conv);
}

LinComb<SimplexChain> differential(const SimplexChain& c, SimplexFaceTable table) {
  LinComb<SimplexChain> out;
  for (unsigned i = 1; i < c.factors.size(); ++i)
    out.add(simplex_face(i, c, table, local_engine()), face_sign(i));
  return out;
}

LinComb<TreeChain> differential(const TreeChain& c, const TreeFaceConvention& conv) {
  LinComb<TreeChain> out;
  for (unsigned i = 1; i < c.factors.size(); ++i) out.add(tree_face(i, c, conv), face_sign(i));
  return out;
}

std::vector<SimplexChain> simplex_chain_basis(unsigned n, unsigned w) {
  std::vector<SimplexChain> out;
  if (n == 0) return out;
  const auto comps = compositions(w, n);
  for (const auto& cell : cells_of(n))
    for (const auto& comp : comps) {
      std::vector<const std::vector<PlanarTree>*> choices;
      for (unsigned p : comp) choices.push_back(&trees_with(p + 1));
      for_each_product(choices, [&](const std::vector<PlanarTree>& f) {
        out.push_back(SimplexChain{cell, f});
      });
    }
  return out;
}

std::vector<TreeChain> tree_chain_basis(unsigned n, unsigned w) {
  std::vector<TreeChain> out;
  if (n == 0) return out;
  const auto comps = compositions(w, n);
  for (const auto& tree : trees_with(n + 1))
    for (const auto& comp : comps) {
      std::vector<const std::vector<SubsetCell>*> choices;
      for (unsigned p : comp) choices.push_back(&cells_of(p));
      for_each_product(choices, [&](const std::vector<SubsetCell>& f) {
        out.push_back(TreeChain{tree, f});
      });
    }
  return out;
}

GradedComplex build_complex(ComplexFamily family, unsigned w, const ComplexOptions& options) {
  if (w < 1) throw DomainError("build_complex: weight must be >= 1");
  if (family == ComplexFamily::SimplexCoeff) {
    DendriformEngine engine;
    return assemble<SimplexChain>(
        family, w, [w](unsigned n) { return simplex_chain_basis(n, w); },
        [&](const SimplexChain& c) {
          LinComb<SimplexChain> out;
          for (unsigned i = 1; i < c.factors.size(); ++i)
            out.add(simplex_face(i, c, options.simplex_table, engine), face_sign(i));
          return out;
        });
  }
  return assemble<TreeChain>(
      family, w, [w](unsigned n) { return tree_chain_basis(n, w); },
      [&](const TreeChain& c) { return differential(c, options.tree_convention); });
}

HomologyRanks homology_ranks(const GradedComplex& c) {
  if (!c.d_squared_zero) throw DomainError("homology_ranks: d^2 != 0, homology is undefined");
  HomologyRanks h;
  h.rank_d.assign(c.weight + 2, 0);
  h.betti.assign(c.weight + 1, 0);
  for (unsigned n = 2; n <= c.weight; ++n) h.rank_d[n] = rank(c.boundary[n]);
  for (unsigned n = 1; n <= c.weight; ++n)
    h.betti[n] = c.dims[n] - h.rank_d[n] - h.rank_d[n + 1];
  return h;
}

bool koszul_profile(unsigned w, const HomologyRanks& h) {
  for (unsigned n = 1; n <= w; ++n) {
    const std::size_t expected = (n == 1 && w == 1) ? 1 : 0;
    if (h.betti.at(n) != expected) return false;
  }
  return true;
}

ConventionSweep sweep_conventions(unsigned max_weight) {
  ConventionSweep sweep;
  sweep.max_weight = max_weight;

  auto evaluate = [&](ConventionCandidate cand, const ComplexOptions& opts) {
    for (unsigned w = 1; w <= max_weight; ++w) {
      GradedComplex cx = build_complex(cand.family, w, opts);
      if (!cx.d_squared_zero) {
        cand.d_squared_failures.push_back(w);
        continue;
      }
      if (!koszul_profile(w, homology_ranks(cx))) cand.homology_failures.push_back(w);
    }
    sweep.candidates.push_back(std::move(cand));
  };

  for (SimplexFaceTable t : {SimplexFaceTable::Printed, SimplexFaceTable::Swapped}) {
    ConventionCandidate cand{ComplexFamily::SimplexCoeff, "simplex table " + to_string(t)};
    cand.simplex_table = t;
    evaluate(cand, ComplexOptions{t, kTreeFaceConvention});
  }
  for (unsigned offset : {0u, 1u})
    for (bool mirrored : {false, true}) {
      TreeFaceConvention conv{offset, mirrored};
      ConventionCandidate cand{ComplexFamily::TreeCoeff, "tree " + to_string(conv)};
      cand.tree_convention = conv;
      evaluate(cand, ComplexOptions{kSimplexFaceTable, conv});
    }

  std::size_t simplex_valid = 0, tree_valid = 0;
  for (const auto& cand : sweep.candidates) {
    if (!cand.valid()) continue;
    if (cand.family == ComplexFamily::SimplexCoeff) {
      ++simplex_valid;
      sweep.simplex_table = cand.simplex_table;
    } else {
      ++tree_valid;
      sweep.tree_convention = cand.tree_convention;
    }
  }
  if (simplex_valid != 1) sweep.simplex_table.reset();
  if (tree_valid != 1) sweep.tree_convention.reset();
  return sweep;
}

}  // namespace trioperad
