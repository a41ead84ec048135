#include "dmorse/morse.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "dmorse/dowker.hpp"

namespace dmorse {

VertexOrder VertexOrder::declaration(std::size_t n) {
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return from_sequence(std::move(seq));
}

VertexOrder VertexOrder::from_sequence(std::vector<std::size_t> sequence) {
  VertexOrder o;
  o.rank_.assign(sequence.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto v = sequence[i];
    if (v >= sequence.size() || o.rank_[v] != std::numeric_limits<std::size_t>::max()) {
      throw ConstructionError("vertex order is not a permutation");
    }
    o.rank_[v] = i;
  }
  o.sequence_ = std::move(sequence);
  return o;
}

std::size_t VertexOrder::max_of(Face f) const {
  if (f.empty()) throw PreconditionError("the empty face has no largest element");
  std::size_t best = 0;
  bool first = true;
  f.for_each([&](std::size_t v) {
    if (first || rank(v) > rank(best)) best = v;
    first = false;
  });
  return best;
}

Matching::Matching(SimplicialComplex complex, std::vector<std::pair<Face, Face>> pairs)
    : complex_(std::move(complex)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return lex_less(a.second, b.second); });
  mu_.reserve(2 * pairs_.size());
  for (auto [lower, upper] : pairs_) {
    if (!is_cover(lower, upper)) {
      throw ConstructionError("matched faces " + complex_.describe(lower) + " and " + complex_.describe(upper) +
                              " are not a cover pair");
    }
    for (Face f : {lower, upper}) {
      if (!complex_.contains(f)) throw ConstructionError("matched face " + complex_.describe(f) + " is not in the complex");
    }
    if (!mu_.emplace(lower, upper).second || !mu_.emplace(upper, lower).second) {
      throw ConstructionError("a face is matched twice in the pair (" + complex_.describe(lower) + ", " +
                              complex_.describe(upper) + ")");
    }
  }
}

Face Matching::mu(Face f) const {
  auto it = mu_.find(f);
  if (it == mu_.end()) throw PreconditionError("face " + complex_.describe(f) + " is not matched");
  return it->second;
}

bool Matching::is_upper(Face f) const {
  auto it = mu_.find(f);
  return it != mu_.end() && it->second.size() < f.size();
}

std::vector<Face> Matching::faces() const {
  std::vector<Face> out;
  out.reserve(size());
  for (auto [lower, upper] : pairs_) {
    out.push_back(lower);
    out.push_back(upper);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<std::vector<Face>> find_cycle(const Matching& mt) {
  enum : std::uint8_t { kWhite = 0, kGray = 1, kBlack = 2 };
  const std::size_t n = mt.complex().universe().size();
  FaceMap<std::uint8_t> color;
  color.reserve(mt.pairs().size());

  // Frame: upper face and the next vertex to try when extending μ(face).
  struct Frame {
    Face face;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (const auto& root_pair : mt.pairs()) {
    const Face root = root_pair.second;
    if (color[root] != kWhite) continue;
    color[root] = kGray;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const Face lower = mt.mu(top.face);
      bool descended = false;
      while (top.next < n) {
        const std::size_t v = top.next++;
        if (lower.contains(v)) continue;
        const Face h = lower.with(v);
        if (h == top.face || !mt.is_upper(h)) continue;
        auto& c = color[h];
        if (c == kGray) {
          std::vector<Face> cycle;
          auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& fr) { return fr.face == h; });
          for (; it != stack.end(); ++it) cycle.push_back(it->face);
          return cycle;
        }
        if (c == kWhite) {
          c = kGray;
          stack.push_back({h, 0});
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[stack.back().face] = kBlack;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

PairingResult pairing_matching(const SimplicialComplex& d, std::span<const Face> m, const FaceMap<std::size_t>& f,
                               const VertexOrder& order, bool check_c2) {
  FaceSet in_m(m.begin(), m.end());
  auto f_of = [&](Face face) {
    auto it = f.find(face);
    if (it == f.end()) throw PreconditionError("f is undefined on " + d.describe(face));
    return it->second;
  };

  std::vector<std::pair<Face, Face>> pairs;
  for (Face face : m) {
    if (!d.contains(face)) throw PreconditionError("face " + d.describe(face) + " of M is not in the complex");
    const std::size_t w = f_of(face);
    const Face plus = face.with(w);
    const Face minus = face.without(w);
    if (!in_m.contains(plus) || !in_m.contains(minus)) {
      throw PreconditionError("condition C1 fails at " + d.describe(face) + ": " +
                              d.describe(in_m.contains(plus) ? minus : plus) + " is not in M");
    }
    if (f_of(plus) != w || f_of(minus) != w) {
      throw PreconditionError("condition C1 fails at " + d.describe(face) + ": f differs on its partner");
    }
    if (face.contains(w)) pairs.emplace_back(minus, face);
  }

  PairingResult result;
  result.matching = Matching(d, std::move(pairs));
  if (!check_c2) return result;

  // For every face F of d, track the smallest rank of f over M-faces ⊆ F and a
  // face attaining it. Walking faces by cardinality covers all subsets of F
  // because d is downward closed.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Best {
    std::size_t rank = kNone;
    Face face;
  };
  std::vector<Face> graded(d.faces().begin(), d.faces().end());
  std::stable_sort(graded.begin(), graded.end(), [](Face a, Face b) { return a.size() < b.size(); });
  FaceMap<Best> best;
  best.reserve(graded.size());
  result.c2_checked = true;
  result.c2_holds = true;
  for (Face face : graded) {
    Best below;
    face.for_each([&](std::size_t v) {
      const Best& b = best[face.without(v)];
      if (b.rank < below.rank) below = b;
    });
    Best here = below;
    if (in_m.contains(face)) {
      const std::size_t r = order.rank(f.at(face));
      if (below.rank != kNone && r > below.rank && result.c2_holds) {
        result.c2_holds = false;
        result.c2_violation = std::make_pair(face, below.face);
      }
      if (r < here.rank) here = {r, face};
    }
    best[face] = here;
  }
  return result;
}

DowkerMatching dowker_matching(const Relation& r, Side side, const std::optional<VertexOrder>& order) {
  DowkerMatching out;
  out.side = side;
  out.biclique = biclique_complex(r);
  const VertexOrder ord = order ? *order : VertexOrder::declaration(out.biclique.universe().size());
  if (ord.size() != out.biclique.universe().size()) throw PreconditionError("vertex order does not cover X ∪ Y");

  out.target = side == Side::Left ? dowker_left(r) : dowker_right(r);
  const SimplicialComplex lifted = out.target.reindexed(out.biclique.universe());

  std::vector<Face> m;
  for (Face face : out.biclique.faces()) {
    if (lifted.contains(face)) continue;
    m.push_back(face);
    if (side == Side::Left) {
      // F ∩ Y is nonempty and has an X-neighbor for every F ∈ B ∖ C_X.
      const Face nbrs = x_neighbors(r, y_part(r, face));
      out.f.emplace(face, ord.max_of(lift_x(r, nbrs)));
    } else {
      const Face nbrs = y_neighbors(r, x_part(r, face));
      out.f.emplace(face, ord.max_of(lift_y(r, nbrs)));
    }
  }
  out.pairing = pairing_matching(out.biclique, m, out.f, ord, true);
  return out;
}

CollapseCertificate collapse_sequence(const SimplicialComplex& d, const SimplicialComplex& g, const Matching& mt) {
  if (!is_subcomplex(g, d)) throw PreconditionError("target is not a subcomplex of the source");
  const SimplicialComplex sub = g.reindexed(d.universe());
  const SimplicialComplex& mc = mt.complex();
  const bool same_universe = mc.universe() == d.universe();
  if (!same_universe) throw PreconditionError("matching lives on a different universe than the source complex");

  for (Face face : d.faces()) {
    const bool removed = !sub.contains(face);
    if (removed != mt.contains(face)) {
      throw PreconditionError("M differs from the face difference at " + d.describe(face) +
                              (removed ? " (unmatched removed face)" : " (matched face of the target)"));
    }
  }
  for (Face face : mt.faces()) {
    if (!d.contains(face)) throw PreconditionError("matched face " + d.describe(face) + " is not in the source complex");
  }
  if (auto cycle = find_cycle(mt)) {
    std::string desc;
    for (Face face : *cycle) desc += (desc.empty() ? "" : " ") + d.describe(face);
    throw CyclicMatchingError("matching is cyclic: " + desc, *cycle);
  }

  // Pair p = (τ, σ) may go once every other cover of τ and every cover of σ
  // has been removed; an acyclic matching makes these constraints acyclic.
  const auto& pairs = mt.pairs();
  const std::size_t np = pairs.size();
  const std::size_t n = d.universe().size();
  FaceMap<std::uint32_t> pair_of;
  pair_of.reserve(2 * np);
  for (std::size_t i = 0; i < np; ++i) {
    pair_of.emplace(pairs[i].first, static_cast<std::uint32_t>(i));
    pair_of.emplace(pairs[i].second, static_cast<std::uint32_t>(i));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (before, after)
  for (std::size_t i = 0; i < np; ++i) {
    const auto [tau, sigma] = pairs[i];
    for (std::size_t v = 0; v < n; ++v) {
      if (tau.contains(v)) continue;
      const Face up = tau.with(v);
      if (up != sigma && d.contains(up)) edges.emplace_back(pair_of.at(up), static_cast<std::uint32_t>(i));
      if (!sigma.contains(v)) {
        const Face above = sigma.with(v);
        if (d.contains(above)) edges.emplace_back(pair_of.at(above), static_cast<std::uint32_t>(i));
      }
    }
  }
  std::vector<std::uint32_t> offset(np + 1, 0), indegree(np, 0);
  for (auto [a, b] : edges) {
    ++offset[a + 1];
    ++indegree[b];
  }
  for (std::size_t i = 0; i < np; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> succ(edges.size());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (auto [a, b] : edges) succ[fill[a]++] = b;
  }
  edges.clear();
  edges.shrink_to_fit();

  // Ready pairs pop by descending |σ|, then lexicographically smallest σ.
  auto later = [&](std::uint32_t a, std::uint32_t b) {
    const Face sa = pairs[a].second, sb = pairs[b].second;
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return lex_less(sb, sa);
  };
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(later)> ready(later);
  for (std::size_t i = 0; i < np; ++i) {
    if (indegree[i] == 0) ready.push(static_cast<std::uint32_t>(i));
  }
  CollapseCertificate cert{d, g, {}};
  cert.steps.reserve(np);
  while (!ready.empty()) {
    const auto i = ready.top();
    ready.pop();
    cert.steps.push_back({pairs[i].first, pairs[i].second});
    for (auto k = offset[i]; k < offset[i + 1]; ++k) {
      if (--indegree[succ[k]] == 0) ready.push(succ[k]);
    }
  }
  if (cert.steps.size() != np) throw std::logic_error("collapse ordering stalled on an acyclic matching");
  return cert;
}

Verdict verify_certificate(const CollapseCertificate& c) {
  const SimplicialComplex& from = c.from;
  const std::size_t n = from.universe().size();
  FaceSet current(from.faces().begin(), from.faces().end());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto [tau, sigma] = c.steps[i];
    if (!is_cover(tau, sigma)) return Verdict::fail(i, "not a cover pair");
    if (!current.contains(sigma)) return Verdict::fail(i, "sigma " + from.describe(sigma) + " is not in the current complex");
    if (!current.contains(tau)) return Verdict::fail(i, "tau " + from.describe(tau) + " is not in the current complex");
    for (std::size_t v = 0; v < n; ++v) {
      if (sigma.contains(v)) continue;
      if (current.contains(sigma.with(v))) {
        return Verdict::fail(i, "sigma " + from.describe(sigma) + " is not maximal: " +
                                    from.describe(sigma.with(v)) + " remains");
      }
      if (!tau.contains(v) && current.contains(tau.with(v))) {
        return Verdict::fail(i, "tau " + from.describe(tau) + " is not free: " + from.describe(tau.with(v)) +
                                    " remains");
      }
    }
    current.erase(tau);
    current.erase(sigma);
  }
  const std::size_t end = c.steps.size();
  if (current.size() != c.to.size()) return Verdict::fail(end, "final complex differs from the target");
  for (Face face : c.to.faces()) {
    auto t = translate(face, c.to.universe(), from.universe());
    if (!t || !current.contains(*t)) return Verdict::fail(end, "target face " + c.to.describe(face) + " is missing after replay");
  }
  return Verdict::pass();
}

namespace {

Verdict check_relabel(const SimplicialComplex& a, const SimplicialComplex& b, const RelabelArrow& arrow) {
  try {
    SimplicialMap forward(a, b, arrow.vertex_map);
    if (!forward.injective()) return Verdict::fail(std::nullopt, "relabeling is not injective");
    if (minimal_ground_set(a).size() != minimal_ground_set(b).size()) {
      return Verdict::fail(std::nullopt, "relabeling is not onto the target vertices");
    }
    if (!same_faces(apply_map(forward), b)) return Verdict::fail(std::nullopt, "relabeled complex differs from the next node");
  } catch (const Error& e) {
    return Verdict::fail(std::nullopt, e.what());
  }
  return Verdict::pass();
}

Relation relabeled_containment(const Relation& r, const SimplicialComplex& d2, const std::map<std::string, std::string>& alpha) {
  const auto ground2 = minimal_ground_set(d2);
  for (const auto& l : ground2) {
    if (r.y().find(l)) throw ConstructionError("vertex label '" + l + "' collides with a face label");
  }
  Universe x2(ground2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : r.pairs()) pairs.emplace_back(x2.index_of(alpha.at(r.x().label(a))), b);
  return Relation(std::move(x2), r.y(), std::move(pairs));
}

std::map<std::string, std::string> tagging_map(const SimplicialComplex& c, bool left, bool inverse) {
  std::map<std::string, std::string> m;
  for (const auto& l : minimal_ground_set(c)) {
    if (inverse) {
      // Strip "(" and ",k)".
      m[l] = l.substr(1, l.size() - 4);
    } else {
      m[l] = left ? left_tag(l) : right_tag(l);
    }
  }
  return m;
}

}  // namespace

Verdict verify_zigzag(const Zigzag& z) {
  if (z.nodes.size() != z.arrows.size() + 1) return Verdict::fail(std::nullopt, "zigzag needs one more node than arrows");
  for (std::size_t i = 0; i < z.arrows.size(); ++i) {
    const auto& a = z.nodes[i];
    const auto& b = z.nodes[i + 1];
    Verdict v;
    if (const auto* c = std::get_if<CollapseArrow>(&z.arrows[i])) {
      const auto& big = c->direction == Direction::Rightward ? a : b;
      const auto& small = c->direction == Direction::Rightward ? b : a;
      if (!same_faces(c->certificate.from, big) || !same_faces(c->certificate.to, small)) {
        v = Verdict::fail(std::nullopt, "certificate endpoints do not match the adjacent nodes");
      } else {
        v = verify_certificate(c->certificate);
      }
    } else {
      v = check_relabel(a, b, std::get<RelabelArrow>(z.arrows[i]));
    }
    if (!v) {
      v.reason = "arrow " + std::to_string(i) + ": " + v.reason;
      v.step = i;
      return v;
    }
  }
  return Verdict::pass();
}

Zigzag barmak_zigzag(const Relation& r, const ZigzagOptions& options) {
  const Disjointified t = disjointify(r);
  const Relation& rt = t.relation;
  auto left = dowker_matching(rt, Side::Left, options.order);
  auto right = dowker_matching(rt, Side::Right, options.order);

  Zigzag z;
  auto cx = dowker_left(r);
  auto cy = dowker_right(r);
  z.nodes = {cx, left.target, left.biclique, right.target, cy};
  z.arrows.emplace_back(RelabelArrow{tagging_map(cx, true, false)});
  z.arrows.emplace_back(CollapseArrow{Direction::Leftward, collapse_sequence(left.biclique, left.target, left.matching())});
  z.arrows.emplace_back(
      CollapseArrow{Direction::Rightward, collapse_sequence(right.biclique, right.target, right.matching())});
  z.arrows.emplace_back(RelabelArrow{tagging_map(right.target, false, true)});
  return options.expand_relabels ? expand_relabels(z) : z;
}

Zigzag isomorphic_zigzag(const SimplicialComplex& d, const SimplicialComplex& d2,
                         const std::map<std::string, std::string>& alpha) {
  if (d.is_void() || d2.is_void()) throw PreconditionError("isomorphic zigzag needs nonempty complexes");
  {
    SimplicialMap forward(d, d2, alpha);
    std::map<std::string, std::string> inverse;
    for (const auto& l : minimal_ground_set(d)) inverse[alpha.at(l)] = l;
    if (!forward.injective() || inverse.size() != minimal_ground_set(d2).size()) {
      throw PreconditionError("alpha is not a bijection between the vertex sets");
    }
    SimplicialMap backward(d2, d, inverse);
  }

  const Relation r = containment_relation(d);
  const Relation r2 = relabeled_containment(r, d2, alpha);

  auto l1 = dowker_matching(r, Side::Left);
  auto r1 = dowker_matching(r, Side::Right);
  auto l2 = dowker_matching(r2, Side::Left);
  auto r2m = dowker_matching(r2, Side::Right);
  if (!same_faces(l1.target, d) || !same_faces(l2.target, d2)) {
    throw std::logic_error("left Dowker complex of the containment relation differs from the complex");
  }
  if (!same_faces(r1.target, r2m.target)) throw std::logic_error("right Dowker complexes of R and R' differ");

  Zigzag z;
  z.nodes = {d, l1.biclique, r1.target, l2.biclique, d2};
  z.arrows.emplace_back(CollapseArrow{Direction::Leftward, collapse_sequence(l1.biclique, l1.target, l1.matching())});
  z.arrows.emplace_back(CollapseArrow{Direction::Rightward, collapse_sequence(r1.biclique, r1.target, r1.matching())});
  z.arrows.emplace_back(CollapseArrow{Direction::Leftward, collapse_sequence(r2m.biclique, r2m.target, r2m.matching())});
  z.arrows.emplace_back(CollapseArrow{Direction::Rightward, collapse_sequence(l2.biclique, l2.target, l2.matching())});
  return z;
}

Zigzag expand_relabels(const Zigzag& z) {
  Zigzag out;
  if (z.nodes.empty()) return out;
  out.nodes.push_back(z.nodes.front());
  for (std::size_t i = 0; i < z.arrows.size(); ++i) {
    if (const auto* rel = std::get_if<RelabelArrow>(&z.arrows[i])) {
      Zigzag sub = isomorphic_zigzag(z.nodes[i], z.nodes[i + 1], rel->vertex_map);
      out.nodes.insert(out.nodes.end(), sub.nodes.begin() + 1, sub.nodes.end() - 1);
      out.arrows.insert(out.arrows.end(), sub.arrows.begin(), sub.arrows.end());
    } else {
      out.arrows.push_back(z.arrows[i]);
    }
    out.nodes.push_back(z.nodes[i + 1]);
  }
  return out;
}

}  // namespace dmorse
