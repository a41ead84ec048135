#include "dmorse/relation.hpp"

#include <algorithm>

#include "dmorse/error.hpp"

namespace dmorse {

namespace {

Face full_mask(std::size_t n) { return Face(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

Face labels_to_face(const Universe& u, const std::vector<std::string>& labels, const char* side) {
  Face f;
  for (const auto& l : labels) {
    auto i = u.find(l);
    if (!i) throw DomainError("'" + l + "' is not an element of " + side);
    f = f.with(*i);
  }
  return f;
}

}  // namespace

Relation::Relation(Universe x, Universe y, std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : x_(std::move(x)), y_(std::move(y)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  y_adj_.assign(x_.size(), Face{});
  x_adj_.assign(y_.size(), Face{});
  for (auto [a, b] : pairs_) {
    if (a >= x_.size() || b >= y_.size()) throw ConstructionError("relation pair index outside its universe");
    y_adj_[a] = y_adj_[a].with(b);
    x_adj_[b] = x_adj_[b].with(a);
  }
}

Relation Relation::from_labels(std::vector<std::string> x, std::vector<std::string> y,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  Universe ux(std::move(x));
  Universe uy(std::move(y));
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto i = ux.find(a);
    if (!i) throw ConstructionError("pair (" + a + "," + b + "): unknown x label '" + a + "'");
    auto j = uy.find(b);
    if (!j) throw ConstructionError("pair (" + a + "," + b + "): unknown y label '" + b + "'");
    idx.emplace_back(*i, *j);
  }
  return Relation(std::move(ux), std::move(uy), std::move(idx));
}

Face Relation::all_x() const { return full_mask(x_.size()); }
Face Relation::all_y() const { return full_mask(y_.size()); }

bool Relation::bipartite() const {
  return std::none_of(x_.labels().begin(), x_.labels().end(), [&](const std::string& l) { return y_.find(l); });
}

Relation Relation::transpose() const {
  std::vector<std::pair<std::size_t, std::size_t>> t;
  t.reserve(pairs_.size());
  for (auto [a, b] : pairs_) t.emplace_back(b, a);
  return Relation(y_, x_, std::move(t));
}

Face y_neighbors(const Relation& r, Face u) {
  Face acc = r.all_y();
  u.for_each([&](std::size_t x) { acc = acc & r.y_adjacency(x); });
  return acc;
}

Face x_neighbors(const Relation& r, Face v) {
  Face acc = r.all_x();
  v.for_each([&](std::size_t y) { acc = acc & r.x_adjacency(y); });
  return acc;
}

bool bold_r(const Relation& r, Face u, Face v) {
  if (u.empty() || v.empty()) return true;
  return v.subset_of(y_neighbors(r, u));
}

Face x_face(const Relation& r, const std::vector<std::string>& labels) { return labels_to_face(r.x(), labels, "X"); }
Face y_face(const Relation& r, const std::vector<std::string>& labels) { return labels_to_face(r.y(), labels, "Y"); }

bool bold_r(const Relation& r, const std::vector<std::string>& u, const std::vector<std::string>& v) {
  return bold_r(r, x_face(r, u), y_face(r, v));
}

RelationMorphism::RelationMorphism(Relation source, Relation target, std::vector<std::size_t> phi_l,
                                   std::vector<std::size_t> phi_r)
    : source_(std::move(source)), target_(std::move(target)), phi_l_(std::move(phi_l)), phi_r_(std::move(phi_r)) {
  if (phi_l_.size() != source_.x().size() || phi_r_.size() != source_.y().size()) {
    throw ConstructionError("morphism maps must be total on the source ground sets");
  }
  for (auto i : phi_l_) {
    if (i >= target_.x().size()) throw ConstructionError("phi_l maps outside the target X");
  }
  for (auto j : phi_r_) {
    if (j >= target_.y().size()) throw ConstructionError("phi_r maps outside the target Y");
  }
  for (auto [a, b] : source_.pairs()) {
    if (!target_.related(phi_l_[a], phi_r_[b])) {
      throw ConstructionError("pair (" + source_.x().label(a) + "," + source_.y().label(b) +
                              ") is not carried into the target relation");
    }
  }
}

RelationMorphism RelationMorphism::identity(const Relation& r) {
  std::vector<std::size_t> l(r.x().size()), rr(r.y().size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = i;
  for (std::size_t j = 0; j < rr.size(); ++j) rr[j] = j;
  return RelationMorphism(r, r, std::move(l), std::move(rr));
}

RelationMorphism RelationMorphism::after(const RelationMorphism& first) const {
  if (!(first.target() == source_)) throw PreconditionError("morphisms are not composable");
  std::vector<std::size_t> l(first.phi_l().size()), rr(first.phi_r().size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = phi_l_[first.phi_l()[i]];
  for (std::size_t j = 0; j < rr.size(); ++j) rr[j] = phi_r_[first.phi_r()[j]];
  return RelationMorphism(first.source(), target_, std::move(l), std::move(rr));
}

Disjointified disjointify(const Relation& r) {
  std::vector<std::string> xs, ys;
  for (const auto& l : r.x().labels()) xs.push_back(left_tag(l));
  for (const auto& l : r.y().labels()) ys.push_back(right_tag(l));
  Relation tagged(Universe(std::move(xs)), Universe(std::move(ys)), r.pairs());
  auto id = RelationMorphism::identity(r);
  return {tagged, RelationMorphism(r, tagged, id.phi_l(), id.phi_r())};
}

std::string face_label(const SimplicialComplex& d, Face f) {
  std::string out = "F:";
  bool first = true;
  f.for_each([&](std::size_t v) {
    if (!first) out += ',';
    first = false;
    out += d.universe().label(v);
  });
  return out;
}

Relation containment_relation(const SimplicialComplex& d) {
  if (d.is_void()) throw PreconditionError("containment relation needs a nonempty complex (one containing the empty face)");
  const auto ground = minimal_ground_set(d);
  for (const auto& l : ground) {
    if (l.rfind("F:", 0) == 0) throw ConstructionError("vertex label '" + l + "' collides with the reserved prefix 'F:'");
  }
  if (d.size() > kMaxUniverse) {
    throw SizeError("complex has " + std::to_string(d.size()) + " faces; containment relation needs at most " +
                    std::to_string(kMaxUniverse));
  }
  Universe ux(ground);
  std::vector<std::string> ys;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto faces = d.faces();
  for (std::size_t j = 0; j < faces.size(); ++j) {
    ys.push_back(face_label(d, faces[j]));
    faces[j].for_each([&](std::size_t v) { pairs.emplace_back(ux.index_of(d.universe().label(v)), j); });
  }
  return Relation(std::move(ux), Universe(std::move(ys)), std::move(pairs));
}

}  // namespace dmorse
