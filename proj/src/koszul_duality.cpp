#include "trioperad/koszul_duality.hpp"

#include "trioperad/dendriform_algebra.hpp"
#include "trioperad/simplex_algebra.hpp"

namespace trioperad {

std::size_t Weight2Op::index() const {
  return (slot - 1) * 9 + static_cast<std::size_t>(outer) * 3 + static_cast<std::size_t>(inner);
}

Weight2Op Weight2Op::from_index(std::size_t i) {
  if (i >= 18) throw DomainError("Weight2Op index out of range: " + std::to_string(i));
  return {static_cast<Generator>((i % 9) / 3), static_cast<Generator>(i % 3),
          static_cast<unsigned>(i / 9 + 1)};
}

namespace {

const char* symbol(Generator g, Alphabet a) {
  static const char* tri[] = {"-|", "|-", "_|_"};
  static const char* dend[] = {"<", ">", "."};
  return (a == Alphabet::Trialgebra ? tri : dend)[static_cast<int>(g)];
}

Generator generator(TriOp op) {
  switch (op) {
    case TriOp::Left: return Generator::Left;
    case TriOp::Right: return Generator::Right;
    case TriOp::Middle: return Generator::Middle;
  }
  return Generator::Left;
}

// Star expands into all three generators.
std::vector<Generator> generators(DendOp op) {
  switch (op) {
    case DendOp::Prec: return {Generator::Left};
    case DendOp::Succ: return {Generator::Right};
    case DendOp::Mid: return {Generator::Middle};
    case DendOp::Star: return {Generator::Left, Generator::Right, Generator::Middle};
  }
  return {};
}

constexpr Generator kAll[] = {Generator::Left, Generator::Right, Generator::Middle};

bool is_zero_matrix(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

std::string to_string(const Weight2Op& op, Alphabet alphabet) {
  return std::string(symbol(op.outer, alphabet)) + " o" + std::to_string(op.slot) + " " +
         symbol(op.inner, alphabet);
}

std::string to_string(const Weight2Op& op) { return to_string(op, Alphabet::Trialgebra); }

const std::vector<Weight2Op>& weight2_basis() {
  static const std::vector<Weight2Op> basis = [] {
    std::vector<Weight2Op> b;
    for (std::size_t i = 0; i < 18; ++i) b.push_back(Weight2Op::from_index(i));
    return b;
  }();
  return basis;
}

std::vector<Weight2Vec> trialgebra_relation_vectors() {
  std::vector<Weight2Vec> out;
  for (const auto& r : trialgebra_relations()) {
    Weight2Vec v;
    v.add(Weight2Op{generator(r.outer_left), generator(r.inner_left), 1}, 1);
    v.add(Weight2Op{generator(r.outer_right), generator(r.inner_right), 2}, -1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Weight2Vec> dendriform_relation_vectors() {
  std::vector<Weight2Vec> out;
  for (const auto& r : dendriform_relations()) {
    Weight2Vec v;
    for (Generator o : generators(r.outer_left))
      for (Generator i : generators(r.inner_left)) v.add(Weight2Op{o, i, 1}, 1);
    for (Generator o : generators(r.outer_right))
      for (Generator i : generators(r.inner_right)) v.add(Weight2Op{o, i, 2}, -1);
    out.push_back(std::move(v));
  }
  return out;
}

std::string to_string(const PairingConvention& c) {
  return std::string(c.slot1 < 0 ? "-" : "+") + "," + (c.slot2 < 0 ? "-" : "+");
}

Rational duality_pairing(const Weight2Op& u, const Weight2Op& v, PairingConvention c) {
  if (!(u == v)) return 0;
  return u.slot == 1 ? c.slot1 : c.slot2;
}

Rational duality_pairing(const Weight2Vec& u, const Weight2Vec& v, PairingConvention c) {
  Rational sum = 0;
  for (const auto& [op, coeff] : u) sum += coeff * v.coefficient(op) * duality_pairing(op, op, c);
  return sum;
}

RatMatrix pairing_gram(PairingConvention c) {
  const auto& basis = weight2_basis();
  RatMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = duality_pairing(basis[i], basis[j], c);
  return g;
}

Rational DualityCertificate::zero_matrix_checksum() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < pairing_matrix.rows(); ++i)
    for (std::size_t j = 0; j < pairing_matrix.cols(); ++j) sum += abs(pairing_matrix(i, j));
  return sum;
}

namespace {

DualityCertificate certify_with(const std::vector<Weight2Vec>& tri,
                                const std::vector<Weight2Vec>& dend, PairingConvention c) {
  const auto& basis = weight2_basis();
  std::span<const Weight2Op> b(basis);
  DualityCertificate cert;
  cert.convention = c;
  cert.space_dimension = basis.size();
  cert.trialgebra_rank = rank(coordinate_matrix(std::span<const Weight2Vec>(tri), b));
  cert.dendriform_rank = rank(coordinate_matrix(std::span<const Weight2Vec>(dend), b));

  cert.pairing_matrix = RatMatrix(tri.size(), dend.size());
  for (std::size_t i = 0; i < tri.size(); ++i)
    for (std::size_t j = 0; j < dend.size(); ++j)
      cert.pairing_matrix(i, j) = duality_pairing(tri[i], dend[j], c);
  cert.orthogonal = is_zero_matrix(cert.pairing_matrix);

  auto complement = orthogonal_complement(std::span<const Weight2Vec>(tri), b, pairing_gram(c));
  cert.pairing_nondegenerate = complement.nondegenerate;
  cert.complement_dimension = complement.basis.size();

  std::vector<Weight2Vec> both = complement.basis;
  both.insert(both.end(), dend.begin(), dend.end());
  const std::size_t joint = rank(coordinate_matrix(std::span<const Weight2Vec>(both), b));
  cert.complement_matches = cert.orthogonal && joint == cert.complement_dimension &&
                            cert.dendriform_rank == cert.complement_dimension;

  cert.pass = cert.orthogonal && cert.pairing_nondegenerate && cert.complement_matches &&
              cert.trialgebra_rank + cert.dendriform_rank == cert.space_dimension;
  return cert;
}

}  // namespace

DualityCertificate certify_duality(const std::vector<Weight2Vec>& trialgebra,
                                   const std::vector<Weight2Vec>& dendriform) {
  const PairingConvention candidates[] = {{1, -1}, {1, 1}, {-1, 1}};
  std::vector<PairingConvention> tried;
  DualityCertificate first;
  for (std::size_t k = 0; k < std::size(candidates); ++k) {
    tried.push_back(candidates[k]);
    DualityCertificate cert = certify_with(trialgebra, dendriform, candidates[k]);
    if (k == 0) first = cert;
    if (cert.pass) {
      cert.tried = tried;
      return cert;
    }
  }
  // Nothing certified: report the primary convention.
  first.tried = tried;
  return first;
}

DualityCertificate certify_duality() {
  return certify_duality(trialgebra_relation_vectors(), dendriform_relation_vectors());
}

std::vector<Weight2Vec> perturbed_trialgebra_relations() {
  auto rels = trialgebra_relation_vectors();
  Weight2Vec v;
  v.add(Weight2Op{Generator::Middle, Generator::Left, 1}, 1);
  v.add(Weight2Op{Generator::Middle, Generator::Left, 2}, -1);
  rels.at(7) = std::move(v);
  return rels;
}

AssociativeDiagonalReport check_associative_diagonal() {
  AssociativeDiagonalReport report;
  const auto& basis = weight2_basis();
  std::span<const Weight2Op> b(basis);

  // Weight-2 space of the associative operad: mu o1 mu, mu o2 mu.
  auto collapse = [](const Weight2Vec& v) {
    Rational s1 = 0, s2 = 0;
    for (const auto& [op, c] : v) (op.slot == 1 ? s1 : s2) += c;
    return std::pair{s1, s2};
  };
  report.trialgebra_collapses = true;
  for (const auto& v : trialgebra_relation_vectors()) {
    auto [s1, s2] = collapse(v);
    if (!(s1 == 1 && s2 == -1)) report.trialgebra_collapses = false;
  }

  Weight2Vec star_assoc;
  for (Generator o : kAll)
    for (Generator i : kAll) {
      star_assoc.add(Weight2Op{o, i, 1}, 1);
      star_assoc.add(Weight2Op{o, i, 2}, -1);
    }
  auto dend = dendriform_relation_vectors();
  const std::size_t r = rank(coordinate_matrix(std::span<const Weight2Vec>(dend), b));
  dend.push_back(star_assoc);
  report.star_associativity_in_span =
      rank(coordinate_matrix(std::span<const Weight2Vec>(dend), b)) == r;

  // <(1,-1), (a,b)> = a + b under diag(+1,-1): the complement of the
  // associativity relation is spanned by (1,-1) itself.
  const RatMatrix gram(2, 2, {1, 0, 0, -1});
  const RatMatrix relation(1, 2, {1, -1});
  auto kernel = kernel_basis(relation * gram);
  report.associative_self_dual =
      kernel.size() == 1 && kernel[0][0] == -kernel[0][1] && kernel[0][0] != 0;
  return report;
}

}  // namespace trioperad
