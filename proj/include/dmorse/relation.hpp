#pragma once

// Finite binary relations R ⊆ X × Y with ordered ground sets, their lifted
// rectangle relation, morphisms, and the containment relation of a complex.

#include <string>
#include <utility>
#include <vector>

#include "dmorse/complex.hpp"

namespace dmorse {

class Relation {
 public:
  Relation() = default;
  /// Pairs are (x index, y index); duplicates are merged.
  Relation(Universe x, Universe y, std::vector<std::pair<std::size_t, std::size_t>> pairs);
  /// Throws ConstructionError for a pair naming an undeclared label.
  static Relation from_labels(std::vector<std::string> x, std::vector<std::string> y,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  const Universe& x() const { return x_; }
  const Universe& y() const { return y_; }
  /// Sorted by (x index, y index).
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

  bool related(std::size_t x, std::size_t y) const { return y_adj_[x].contains(y); }
  /// Y-elements related to x, as a face over Y.
  Face y_adjacency(std::size_t x) const { return y_adj_[x]; }
  Face x_adjacency(std::size_t y) const { return x_adj_[y]; }
  Face all_x() const;
  Face all_y() const;

  /// X and Y share no label.
  bool bipartite() const;
  Relation transpose() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.pairs_ == b.pairs_;
  }

 private:
  Universe x_;
  Universe y_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<Face> y_adj_;
  std::vector<Face> x_adj_;
};

/// U × V ⊆ R. Vacuously true when either side is empty.
bool bold_r(const Relation& r, Face u, Face v);
/// Label form; throws DomainError for labels outside the universes.
bool bold_r(const Relation& r, const std::vector<std::string>& u, const std::vector<std::string>& v);

/// Common Y-neighbors of u ⊆ X.
Face y_neighbors(const Relation& r, Face u);
/// Common X-neighbors of v ⊆ Y.
Face x_neighbors(const Relation& r, Face v);

Face x_face(const Relation& r, const std::vector<std::string>& labels);
Face y_face(const Relation& r, const std::vector<std::string>& labels);

/// Pair of index maps X→X', Y→Y' carrying every pair of the source into the target.
class RelationMorphism {
 public:
  RelationMorphism(Relation source, Relation target, std::vector<std::size_t> phi_l, std::vector<std::size_t> phi_r);
  static RelationMorphism identity(const Relation& r);

  const Relation& source() const { return source_; }
  const Relation& target() const { return target_; }
  const std::vector<std::size_t>& phi_l() const { return phi_l_; }
  const std::vector<std::size_t>& phi_r() const { return phi_r_; }

  /// this ∘ first: apply first, then this.
  RelationMorphism after(const RelationMorphism& first) const;

 private:
  Relation source_;
  Relation target_;
  std::vector<std::size_t> phi_l_;
  std::vector<std::size_t> phi_r_;
};

struct Disjointified {
  Relation relation;
  RelationMorphism tagging;
};

inline std::string left_tag(const std::string& x) { return "(" + x + ",0)"; }
inline std::string right_tag(const std::string& y) { return "(" + y + ",1)"; }

/// Renames x ↦ "(x,0)" and y ↦ "(y,1)"; always applied, even to bipartite input.
Disjointified disjointify(const Relation& r);

/// Label reserved for the vertex standing for face F in containment relations.
std::string face_label(const SimplicialComplex& d, Face f);

/// X = minimal ground set of d, Y = one label per face of d, x ~ y_F iff x ∈ F.
Relation containment_relation(const SimplicialComplex& d);

}  // namespace dmorse
