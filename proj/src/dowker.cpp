#include "dmorse/dowker.hpp"

#include <map>

#include "dmorse/error.hpp"

namespace dmorse {

namespace {

// Visits every nonempty U ⊆ X with a common Y-neighbor, together with that
// neighbor set. Depth is bounded by |X| ≤ 64.
template <typename Visit>
void for_each_conic(const Relation& r, std::size_t start, Face u, Face nbrs, Visit& visit) {
  const std::size_t n = r.x().size();
  for (std::size_t j = start; j < n; ++j) {
    const Face next = nbrs & r.y_adjacency(j);
    if (next.empty()) continue;
    const Face grown = u.with(j);
    visit(grown, next);
    for_each_conic(r, j + 1, grown, next, visit);
  }
}

template <typename Visit>
void for_each_conic(const Relation& r, Visit&& visit) {
  for_each_conic(r, 0, Face{}, r.all_y(), visit);
}

void require_bipartite(const Relation& r, const char* what) {
  if (!r.bipartite()) {
    throw PreconditionError(std::string(what) +
                            " needs a bipartite relation (X and Y label-disjoint); apply disjointify first");
  }
  if (r.x().size() + r.y().size() > kMaxUniverse) {
    throw SizeError("|X| + |Y| = " + std::to_string(r.x().size() + r.y().size()) + " exceeds the universe cap of " +
                    std::to_string(kMaxUniverse));
  }
}

}  // namespace

SimplicialComplex dowker_left(const Relation& r, DowkerStrategy strategy) {
  if (strategy == DowkerStrategy::MaximalFaces) {
    std::vector<Face> facets{Face{}};
    for (std::size_t y = 0; y < r.y().size(); ++y) facets.push_back(r.x_adjacency(y));
    return SimplicialComplex::closure(r.x(), facets);
  }
  std::vector<Face> faces{Face{}};
  for_each_conic(r, [&](Face u, Face) { faces.push_back(u); });
  return SimplicialComplex::from_faces(r.x(), std::move(faces));
}

SimplicialComplex dowker_right(const Relation& r, DowkerStrategy strategy) {
  return dowker_left(r.transpose(), strategy);
}

DowkerOutput dowker(const Relation& r, DowkerStrategy strategy) {
  return {dowker_left(r, strategy), dowker_right(r, strategy)};
}

Universe biclique_universe(const Relation& r) {
  std::vector<std::string> labels = r.x().labels();
  labels.insert(labels.end(), r.y().labels().begin(), r.y().labels().end());
  return Universe(std::move(labels));
}

Face lift_x(const Relation&, Face u) { return u; }
Face lift_y(const Relation& r, Face v) { return Face(r.y().size() == 0 ? 0 : v.bits() << r.x().size()); }

Face x_part(const Relation& r, Face f) { return f & r.all_x(); }
Face y_part(const Relation& r, Face f) { return Face(r.x().size() == 64 ? 0 : f.bits() >> r.x().size()); }

std::vector<Face> bicliques(const Relation& r) {
  require_bipartite(r, "biclique enumeration");
  std::vector<Face> out;
  for_each_conic(r, [&](Face u, Face nbrs) {
    const std::uint64_t m = nbrs.bits();
    for (std::uint64_t s = m; s != 0; s = (s - 1) & m) out.push_back(lift_x(r, u) | lift_y(r, Face(s)));
  });
  return out;
}

SimplicialComplex biclique_complex(const Relation& r) {
  require_bipartite(r, "the biclique complex");
  std::vector<Face> faces = bicliques(r);
  const auto cx = dowker_left(r);
  const auto cy = dowker_right(r);
  for (Face u : cx.faces()) faces.push_back(lift_x(r, u));
  for (Face v : cy.faces()) {
    if (!v.empty()) faces.push_back(lift_y(r, v));
  }
  return SimplicialComplex::from_faces(biclique_universe(r), std::move(faces));
}

Universe rectangle_universe(const Relation& r) {
  if (r.pairs().size() > kMaxUniverse) {
    throw SizeError("relation has " + std::to_string(r.pairs().size()) +
                    " pairs; the rectangle complex supports at most " + std::to_string(kMaxUniverse));
  }
  std::vector<std::string> labels;
  for (auto [a, b] : r.pairs()) labels.push_back("(" + r.x().label(a) + "," + r.y().label(b) + ")");
  return Universe(std::move(labels));
}

SimplicialComplex rectangle_complex(const Relation& r, std::size_t face_budget) {
  Universe universe = rectangle_universe(r);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t i = 0; i < r.pairs().size(); ++i) pair_index.emplace(r.pairs()[i], i);

  // Maximal rectangles are the concepts (x_neighbors(V), V) for V = y_neighbors(U).
  FaceSet rectangles;
  for_each_conic(r, [&](Face, Face nbrs) {
    const Face extent = x_neighbors(r, nbrs);
    Face rect;
    extent.for_each([&](std::size_t a) { nbrs.for_each([&](std::size_t b) { rect = rect.with(pair_index.at({a, b})); }); });
    rectangles.insert(rect);
  });

  std::size_t visits = 1;
  for (Face rect : rectangles) {
    if (rect.size() >= 62) visits = face_budget + 1;
    if (visits <= face_budget) visits += std::size_t{1} << rect.size();
    if (visits > face_budget) {
      throw SizeError("rectangle complex exceeds the enumeration budget of " + std::to_string(face_budget) + " faces");
    }
  }
  std::vector<Face> facets(rectangles.begin(), rectangles.end());
  facets.push_back(Face{});
  return SimplicialComplex::closure(std::move(universe), facets);
}

SimplicialMap induced_left_map(const RelationMorphism& m) {
  auto source = dowker_left(m.source());
  auto target = dowker_left(m.target());
  std::map<std::string, std::string> vm;
  for (std::size_t i = 0; i < m.source().x().size(); ++i) vm[m.source().x().label(i)] = m.target().x().label(m.phi_l()[i]);
  // Restrict to the minimal ground set; the constructor checks the image condition.
  std::map<std::string, std::string> restricted;
  for (const auto& l : minimal_ground_set(source)) restricted[l] = vm.at(l);
  return SimplicialMap(std::move(source), std::move(target), std::move(restricted));
}

SimplicialMap induced_right_map(const RelationMorphism& m) {
  auto source = dowker_right(m.source());
  auto target = dowker_right(m.target());
  std::map<std::string, std::string> restricted;
  for (const auto& l : minimal_ground_set(source)) {
    restricted[l] = m.target().y().label(m.phi_r()[m.source().y().index_of(l)]);
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(restricted));
}

SimplicialMap induced_biclique_map(const RelationMorphism& m) {
  auto source = biclique_complex(m.source());
  auto target = biclique_complex(m.target());
  std::map<std::string, std::string> restricted;
  for (const auto& l : minimal_ground_set(source)) {
    if (auto i = m.source().x().find(l)) {
      restricted[l] = m.target().x().label(m.phi_l()[*i]);
    } else {
      restricted[l] = m.target().y().label(m.phi_r()[m.source().y().index_of(l)]);
    }
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(restricted));
}

}  // namespace dmorse
