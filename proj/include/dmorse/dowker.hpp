#pragma once

// Left/right Dowker complexes, the biclique complex and the rectangle complex
// of a relation, plus the simplicial maps induced by relation morphisms.

#include <cstddef>
#include <vector>

#include "dmorse/complex.hpp"
#include "dmorse/relation.hpp"

namespace dmorse {

enum class DowkerStrategy {
  /// Depth-first over X, intersecting adjacency sets and pruning at the first empty intersection.
  Intersection,
  /// Maximal faces x_neighbors(V) over V ⊆ Y, then downward closure.
  MaximalFaces,
};

/// Subsets of X that are empty or have a common Y-neighbor, over universe X.
SimplicialComplex dowker_left(const Relation& r, DowkerStrategy strategy = DowkerStrategy::Intersection);
/// Subsets of Y that are empty or have a common X-neighbor, over universe Y.
SimplicialComplex dowker_right(const Relation& r, DowkerStrategy strategy = DowkerStrategy::Intersection);

struct DowkerOutput {
  SimplicialComplex left;
  SimplicialComplex right;
};

DowkerOutput dowker(const Relation& r, DowkerStrategy strategy = DowkerStrategy::Intersection);

/// X labels followed by Y labels. X occupies indices [0, |X|), Y the rest.
Universe biclique_universe(const Relation& r);

/// Lifts faces over X (resp. Y) into the X ∪ Y universe.
Face lift_x(const Relation& r, Face u);
Face lift_y(const Relation& r, Face v);
/// Splits a face over X ∪ Y into its X and Y parts (as faces over X and Y).
Face x_part(const Relation& r, Face f);
Face y_part(const Relation& r, Face f);

/// All U ∪ V with U, V nonempty and U × V ⊆ R, over biclique_universe(r).
/// Throws PreconditionError unless r is bipartite.
std::vector<Face> bicliques(const Relation& r);

/// B = bicliques ∪ C_X ∪ C_Y over X ∪ Y.
SimplicialComplex biclique_complex(const Relation& r);

/// Labels "(x,y)" for each pair, in pair order.
Universe rectangle_universe(const Relation& r);

inline constexpr std::size_t kDefaultRectangleFaceBudget = std::size_t{1} << 21;

/// Subsets S ⊆ R with proj_X(S) × proj_Y(S) ⊆ R. Throws SizeError when
/// |R| > 64 or the enumeration would visit more than face_budget subsets.
SimplicialComplex rectangle_complex(const Relation& r, std::size_t face_budget = kDefaultRectangleFaceBudget);

/// Simplicial maps induced by a relation morphism.
SimplicialMap induced_left_map(const RelationMorphism& m);
SimplicialMap induced_right_map(const RelationMorphism& m);
/// φ_l ∪ φ_r on biclique complexes; both relations must be bipartite.
SimplicialMap induced_biclique_map(const RelationMorphism& m);

}  // namespace dmorse
