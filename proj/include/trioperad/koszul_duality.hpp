#pragma once

// Quadratic duality between the trialgebra operad (generators -|, |-, _|_)
// and the dendriform trialgebra operad (generators <, >, .), identified
// pairwise in that order.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "trioperad/linear.hpp"

namespace trioperad {

/// Positional generator index, shared by both alphabets:
/// Left is -| or <, Right is |- or >, Middle is _|_ or ..
enum class Generator { Left = 0, Right = 1, Middle = 2 };

enum class Alphabet { Trialgebra, Dendriform };

/// outer o_slot inner: slot 1 is outer(inner(x, y), z), slot 2 is
/// outer(x, inner(y, z)).
struct Weight2Op {
  Generator outer;
  Generator inner;
  unsigned slot;  // 1 or 2

  /// Position in the canonical 18-element basis (slot-major).
  std::size_t index() const;
  static Weight2Op from_index(std::size_t i);

  friend auto operator<=>(const Weight2Op&, const Weight2Op&) = default;
};

std::string to_string(const Weight2Op& op, Alphabet alphabet);
/// Trialgebra spelling, used when a LinComb<Weight2Op> is printed.
std::string to_string(const Weight2Op& op);

using Weight2Vec = LinComb<Weight2Op>;

/// The 18 basis operations in index order.
const std::vector<Weight2Op>& weight2_basis();

/// One vector per defining relation: (a o_1 b) - (c o_2 d) for
/// (x b y) a z = x c (y d z).
std::vector<Weight2Vec> trialgebra_relation_vectors();

/// The seven dendriform relations with * expanded into < + > + ..
std::vector<Weight2Vec> dendriform_relation_vectors();

/// Signs applied to matched slot-1 and slot-2 pairs.
struct PairingConvention {
  int slot1 = 1;
  int slot2 = -1;
  friend bool operator==(const PairingConvention&, const PairingConvention&) = default;
};

std::string to_string(const PairingConvention& c);

/// <g o_s h, g' o_s' h'> = sign(s) when g = g', h = h' and s = s', else 0.
Rational duality_pairing(const Weight2Op& u, const Weight2Op& v,
                         PairingConvention convention = {});
Rational duality_pairing(const Weight2Vec& u, const Weight2Vec& v,
                         PairingConvention convention = {});

/// 18 x 18 Gram matrix of the pairing on weight2_basis().
RatMatrix pairing_gram(PairingConvention convention = {});

struct DualityCertificate {
  PairingConvention convention;
  /// Conventions tried, in order, before one certified (or all failed).
  std::vector<PairingConvention> tried;
  std::size_t trialgebra_rank = 0;
  std::size_t dendriform_rank = 0;
  std::size_t space_dimension = 18;
  bool pairing_nondegenerate = false;
  /// pairing_matrix(i, j) = <i-th trialgebra relation, j-th dendriform relation>.
  RatMatrix pairing_matrix;
  bool orthogonal = false;
  /// Dimension of the orthogonal complement of the trialgebra relations.
  std::size_t complement_dimension = 0;
  /// Every dendriform relation lies in that complement and spans it.
  bool complement_matches = false;
  bool pass = false;

  /// Sum of |entries| of the pairing matrix; 0 for a zero certificate.
  Rational zero_matrix_checksum() const;
};

/// Certifies that the dendriform relations span exactly the orthogonal
/// complement of the trialgebra relations. Tries the slot signs (+,-), then
/// (+,+) and (-,+), and reports the first convention that certifies.
DualityCertificate certify_duality();

/// Same check with caller-supplied relation families.
DualityCertificate certify_duality(const std::vector<Weight2Vec>& trialgebra,
                                   const std::vector<Weight2Vec>& dendriform);

/// Trialgebra relations with the eighth replaced by (x -| y) _|_ z = x _|_ (y -| z).
std::vector<Weight2Vec> perturbed_trialgebra_relations();

struct AssociativeDiagonalReport {
  /// Collapsing -| = |- = _|_ to one product sends every trialgebra relation
  /// into the associativity relation.
  bool trialgebra_collapses = false;
  /// Substituting * = < + > + . into associativity lands in the dendriform
  /// relation span.
  bool star_associativity_in_span = false;
  /// The associativity relation is its own orthogonal complement in the
  /// 2-dimensional weight-2 space of the associative operad.
  bool associative_self_dual = false;
  bool pass() const {
    return trialgebra_collapses && star_associativity_in_span && associative_self_dual;
  }
};

AssociativeDiagonalReport check_associative_diagonal();

}  // namespace trioperad
