#pragma once

// Matchings on simplicial complexes, acyclicity, the pairing lemma, the
// Dowker matching on the biclique complex, collapse certificates and the
// zigzags of collapses and relabelings connecting C_X with C_Y.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dmorse/complex.hpp"
#include "dmorse/error.hpp"
#include "dmorse/relation.hpp"

namespace dmorse {

enum class Side { Left, Right };

/// Total order on a vertex universe, stored as ranks.
class VertexOrder {
 public:
  VertexOrder() = default;
  /// Declaration order 0 < 1 < ... < n-1.
  static VertexOrder declaration(std::size_t n);
  /// sequence[i] is the index of the i-th smallest vertex; must be a permutation.
  static VertexOrder from_sequence(std::vector<std::size_t> sequence);

  std::size_t size() const { return sequence_.size(); }
  std::size_t rank(std::size_t v) const { return rank_.at(v); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  /// Largest element of a nonempty face.
  std::size_t max_of(Face f) const;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> rank_;
};

/// Fixed-point-free involution μ on a face subset M, pairing covers.
class Matching {
 public:
  Matching() = default;
  /// Pairs are (lower, upper) with lower ≺ upper; each face may appear once.
  Matching(SimplicialComplex complex, std::vector<std::pair<Face, Face>> pairs);

  const SimplicialComplex& complex() const { return complex_; }
  /// Sorted lexicographically by upper face.
  const std::vector<std::pair<Face, Face>>& pairs() const { return pairs_; }
  /// |M|, always even.
  std::size_t size() const { return 2 * pairs_.size(); }
  bool contains(Face f) const { return mu_.contains(f); }
  Face mu(Face f) const;
  /// f ∈ M and μ(f) ≺ f.
  bool is_upper(Face f) const;
  std::vector<Face> faces() const;

 private:
  SimplicialComplex complex_;
  std::vector<std::pair<Face, Face>> pairs_;
  FaceMap<Face> mu_;
};

/// A cycle F_1 ≻ μ(F_1) ≺ F_2 ≻ ... ≺ F_1 of distinct upper faces, or nullopt.
std::optional<std::vector<Face>> find_cycle(const Matching& mt);

struct PairingResult {
  Matching matching;
  bool c2_checked = false;
  bool c2_holds = false;
  /// (F, G) with G ⊆ F in M and f(F) > f(G).
  std::optional<std::pair<Face, Face>> c2_violation;

  bool acyclic_certified() const { return c2_checked && c2_holds; }
};

/// Builds μ(F) = F △ {f(F)}. Throws PreconditionError naming F when C1 fails.
/// With check_c2, verifies exhaustively that G ⊆ F in M implies f(F) ≤ f(G).
PairingResult pairing_matching(const SimplicialComplex& d, std::span<const Face> m, const FaceMap<std::size_t>& f,
                               const VertexOrder& order, bool check_c2 = true);

struct DowkerMatching {
  Side side = Side::Left;
  SimplicialComplex biclique;
  /// C_X over X (left) or C_Y over Y (right).
  SimplicialComplex target;
  /// f(F) as a biclique-universe index.
  FaceMap<std::size_t> f;
  PairingResult pairing;

  const Matching& matching() const { return pairing.matching; }
};

/// The matching on B ∖ C_X (left) pairing F with F △ {largest X-neighbor of F ∩ Y};
/// the right side swaps roles. The order ranges over the biclique universe.
DowkerMatching dowker_matching(const Relation& r, Side side, const std::optional<VertexOrder>& order = std::nullopt);

class CyclicMatchingError : public PreconditionError {
 public:
  CyclicMatchingError(std::string what, std::vector<Face> cycle)
      : PreconditionError(std::move(what)), cycle_(std::move(cycle)) {}
  const std::vector<Face>& cycle() const { return cycle_; }

 private:
  std::vector<Face> cycle_;
};

struct CollapseStep {
  Face tau;
  Face sigma;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

/// Elementary collapses replayed in order from `from` down to `to`. Faces of
/// the steps are indexed over from.universe(); `to` may use its own universe.
struct CollapseCertificate {
  SimplicialComplex from;
  SimplicialComplex to;
  std::vector<CollapseStep> steps;
};

/// Certificate that d collapses to g, one step per matched pair. Requires
/// M = d ∖ g; throws CyclicMatchingError on a cyclic matching.
CollapseCertificate collapse_sequence(const SimplicialComplex& d, const SimplicialComplex& g, const Matching& mt);

struct Verdict {
  bool ok = true;
  std::optional<std::size_t> step;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::optional<std::size_t> step, std::string reason) { return {false, step, std::move(reason)}; }
};

/// Replays the certificate; each τ must have σ as its only proper coface and σ must be maximal.
Verdict verify_certificate(const CollapseCertificate& c);

enum class Direction {
  /// nodes[i + 1] collapses to nodes[i].
  Leftward,
  /// nodes[i] collapses to nodes[i + 1].
  Rightward,
};

struct CollapseArrow {
  Direction direction;
  CollapseCertificate certificate;
};

/// Isomorphism nodes[i] → nodes[i + 1] given on vertex labels.
struct RelabelArrow {
  std::map<std::string, std::string> vertex_map;
};

using ZigzagArrow = std::variant<CollapseArrow, RelabelArrow>;

struct Zigzag {
  std::vector<SimplicialComplex> nodes;
  std::vector<ZigzagArrow> arrows;
};

Verdict verify_zigzag(const Zigzag& z);

struct ZigzagOptions {
  bool expand_relabels = false;
  /// Order over the biclique universe of the disjointified relation.
  std::optional<VertexOrder> order;
};

/// C_X ≅ C_X(R̃) ↙ B(R̃) ↘ C_Y(R̃) ≅ C_Y, with R̃ the disjointified relation.
Zigzag barmak_zigzag(const Relation& r, const ZigzagOptions& options = {});

/// d ↙ B(R) ↘ C_r(R) = C_r(R') ↙ B(R') ↘ d2 where R is the containment relation
/// of d and R' its image under alpha.
Zigzag isomorphic_zigzag(const SimplicialComplex& d, const SimplicialComplex& d2,
                         const std::map<std::string, std::string>& alpha);

/// Replaces every relabel arrow with its isomorphic_zigzag expansion.
Zigzag expand_relabels(const Zigzag& z);

}  // namespace dmorse
