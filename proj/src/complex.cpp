#include "dmorse/complex.hpp"

#include <algorithm>
#include <sstream>

#include "dmorse/error.hpp"

namespace dmorse {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverse) {
    throw ConstructionError("universe has " + std::to_string(labels_.size()) + " vertices; the cap is " +
                            std::to_string(kMaxUniverse));
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw ConstructionError("duplicate vertex label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ConstructionError("unknown vertex label '" + std::string(label) + "'");
}

Face::Face(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) bits_ |= std::uint64_t{1} << i;
}

Face Face::from_indices(std::span<const std::size_t> indices) {
  Face f;
  for (auto i : indices) f = f.with(i);
  return f;
}

std::vector<std::size_t> Face::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

namespace {

// True when f has a vertex strictly above index j.
bool has_above(Face f, std::size_t j) { return j < 63 && (f.bits() >> (j + 1)) != 0; }

}  // namespace

bool lex_less(Face a, Face b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const auto j = static_cast<std::size_t>(std::countr_zero(diff));
  // Below j the sequences agree; whichever has j next is smaller unless the other one ends there.
  if (a.contains(j)) return has_above(b, j);
  return !has_above(a, j);
}

bool graded_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

SimplicialComplex::SimplicialComplex(Universe universe, std::vector<Face> faces)
    : universe_(std::move(universe)), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), lex_less);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  index_.reserve(faces_.size());
  index_.insert(faces_.begin(), faces_.end());
}

SimplicialComplex SimplicialComplex::closure(Universe universe, std::span<const Face> facets) {
  const std::uint64_t allowed = universe.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe.size()) - 1;
  FaceSet seen;
  for (Face facet : facets) {
    if ((facet.bits() & ~allowed) != 0) {
      throw ConstructionError("facet uses vertex index " + std::to_string(Face(facet.bits() & ~allowed).max_index()) +
                              " outside a universe of size " + std::to_string(universe.size()));
    }
    if (seen.contains(facet)) continue;
    const std::uint64_t m = facet.bits();
    std::uint64_t s = m;
    while (true) {
      seen.insert(Face(s));
      if (s == 0) break;
      s = (s - 1) & m;
    }
  }
  return SimplicialComplex(std::move(universe), std::vector<Face>(seen.begin(), seen.end()));
}

SimplicialComplex SimplicialComplex::closure(Universe universe, const std::vector<std::vector<std::string>>& facets) {
  std::vector<Face> fs;
  fs.reserve(facets.size());
  for (const auto& facet : facets) {
    Face f;
    for (const auto& label : facet) f = f.with(universe.index_of(label));
    fs.push_back(f);
  }
  return closure(std::move(universe), fs);
}

SimplicialComplex SimplicialComplex::from_faces(Universe universe, std::vector<Face> faces) {
  SimplicialComplex c(std::move(universe), std::move(faces));
  const std::size_t n = c.universe_.size();
  for (Face f : c.faces_) {
    if (!f.empty() && f.max_index() >= n) throw ConstructionError("face uses a vertex outside the universe");
    bool missing = false;
    f.for_each([&](std::size_t v) { missing = missing || !c.contains(f.without(v)); });
    if (missing) throw ConstructionError("face family is not downward closed at " + c.describe(f));
  }
  if (!c.faces_.empty() && !c.contains(Face{})) throw ConstructionError("nonempty face family lacks the empty face");
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : faces_) d = std::max(d, f.dim());
  return d;
}

Face SimplicialComplex::vertex_mask() const {
  Face m;
  for (Face f : faces_) m = m | f;
  return m;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  const std::size_t n = universe_.size();
  for (Face f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!f.contains(v) && contains(f.with(v))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (f.dim() == k) out.push_back(f);
  }
  return out;
}

std::vector<std::string> SimplicialComplex::labels_of(Face f) const {
  std::vector<std::string> out;
  f.for_each([&](std::size_t v) { out.push_back(universe_.label(v)); });
  return out;
}

Face SimplicialComplex::face_of(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) f = f.with(universe_.index_of(l));
  return f;
}

std::string SimplicialComplex::describe(Face f) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  f.for_each([&](std::size_t v) {
    if (!first) os << ',';
    first = false;
    if (v < universe_.size()) {
      os << universe_.label(v);
    } else {
      os << '#' << v;
    }
  });
  os << '}';
  return os.str();
}

std::optional<Face> translate(Face f, const Universe& from, const Universe& to) {
  Face out;
  bool ok = true;
  f.for_each([&](std::size_t v) {
    if (!ok) return;
    auto j = to.find(from.label(v));
    if (!j) {
      ok = false;
      return;
    }
    out = out.with(*j);
  });
  if (!ok) return std::nullopt;
  return out;
}

SimplicialComplex SimplicialComplex::reindexed(const Universe& target) const {
  if (universe_ == target) return *this;
  std::vector<Face> out;
  out.reserve(faces_.size());
  for (Face f : faces_) {
    auto g = translate(f, universe_, target);
    if (!g) throw ConstructionError("face " + describe(f) + " uses a label missing from the target universe");
    out.push_back(*g);
  }
  return SimplicialComplex(target, std::move(out));
}

bool is_subcomplex(const SimplicialComplex& g, const SimplicialComplex& d) {
  const bool same_universe = g.universe() == d.universe();
  for (Face f : g.faces()) {
    if (same_universe) {
      if (!d.contains(f)) return false;
      continue;
    }
    auto t = translate(f, g.universe(), d.universe());
    if (!t || !d.contains(*t)) return false;
  }
  return true;
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.size() == b.size() && is_subcomplex(a, b);
}

std::vector<std::string> minimal_ground_set(const SimplicialComplex& c) { return c.labels_of(c.vertex_mask()); }

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> out;
  for (Face f : c.faces()) {
    if (f.empty()) continue;
    if (out.size() < f.size()) out.resize(f.size(), 0);
    ++out[f.size() - 1];
  }
  return out;
}

long long euler_characteristic(std::span<const std::size_t> f_vec) {
  long long chi = 0;
  for (std::size_t k = 0; k < f_vec.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f_vec[k]);
  }
  return chi;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::map<std::string, std::string> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  const Face ground = source_.vertex_mask();
  const Face target_ground = target_.vertex_mask();
  table_.assign(source_.universe().size(), 0);
  ground.for_each([&](std::size_t v) {
    const auto& label = source_.universe().label(v);
    auto it = vertex_map_.find(label);
    if (it == vertex_map_.end()) throw PreconditionError("vertex map is undefined on '" + label + "'");
    auto j = target_.universe().find(it->second);
    if (!j || !target_ground.contains(*j)) {
      throw PreconditionError("image '" + it->second + "' of '" + label + "' is not a vertex of the target");
    }
    table_[v] = *j;
  });
  for (Face f : source_.faces()) {
    if (!target_.contains(image(f))) {
      throw PreconditionError("image condition fails: " + source_.describe(f) + " maps to " +
                              target_.describe(image(f)) + ", which is not a face of the target");
    }
  }
}

Face SimplicialMap::image(Face f) const {
  Face out;
  f.for_each([&](std::size_t v) { out = out.with(table_[v]); });
  return out;
}

bool SimplicialMap::injective() const {
  Face seen;
  bool ok = true;
  source_.vertex_mask().for_each([&](std::size_t v) {
    if (seen.contains(table_[v])) ok = false;
    seen = seen.with(table_[v]);
  });
  return ok;
}

SimplicialComplex apply_map(const SimplicialMap& m) {
  std::vector<Face> out;
  out.reserve(m.source().size());
  for (Face f : m.source().faces()) out.push_back(m.image(f));
  return SimplicialComplex::from_faces(m.target().universe(), std::move(out));
}

}  // namespace dmorse
