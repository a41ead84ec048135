#pragma once

// Brute-force reference implementations. Everything here works on label sets
// and enumerates subsets directly, sharing no code paths with the library
// beyond reading a relation's labels and pairs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dmorse/complex.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/relation.hpp"

namespace oracle {

using LFace = std::set<std::string>;
using LComplex = std::set<LFace>;
using PairSet = std::set<std::pair<std::string, std::string>>;

inline PairSet pair_set(const dmorse::Relation& r) {
  PairSet s;
  for (auto [a, b] : r.pairs()) s.emplace(r.x().label(a), r.y().label(b));
  return s;
}

inline LComplex labels(const dmorse::SimplicialComplex& c) {
  LComplex out;
  for (dmorse::Face f : c.faces()) {
    auto l = c.labels_of(f);
    out.emplace(l.begin(), l.end());
  }
  return out;
}

inline LFace labels(const dmorse::SimplicialComplex& c, dmorse::Face f) {
  auto l = c.labels_of(f);
  return {l.begin(), l.end()};
}

template <typename Fn>
void for_each_subset(const std::vector<std::string>& ground, Fn&& fn) {
  const std::size_t n = ground.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    LFace s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1u) s.insert(ground[i]);
    }
    fn(s);
  }
}

inline bool has_common(const PairSet& p, const LFace& us, const std::vector<std::string>& other, bool left) {
  for (const auto& o : other) {
    bool all = true;
    for (const auto& u : us) all = all && p.contains(left ? std::pair{u, o} : std::pair{o, u});
    if (all) return true;
  }
  return false;
}

inline LComplex dowker_left(const dmorse::Relation& r) {
  const auto p = pair_set(r);
  LComplex out;
  for_each_subset(r.x().labels(), [&](const LFace& u) {
    if (u.empty() || has_common(p, u, r.y().labels(), true)) out.insert(u);
  });
  return out;
}

inline LComplex dowker_right(const dmorse::Relation& r) {
  const auto p = pair_set(r);
  LComplex out;
  for_each_subset(r.y().labels(), [&](const LFace& v) {
    if (v.empty() || has_common(p, v, r.x().labels(), false)) out.insert(v);
  });
  return out;
}

/// Every S ⊆ X ∪ Y that is a biclique, X-conic or Y-conic. X and Y must be label-disjoint.
inline LComplex biclique_complex(const dmorse::Relation& r) {
  const auto p = pair_set(r);
  const LFace xs(r.x().labels().begin(), r.x().labels().end());
  std::vector<std::string> all = r.x().labels();
  all.insert(all.end(), r.y().labels().begin(), r.y().labels().end());
  LComplex out;
  for_each_subset(all, [&](const LFace& s) {
    LFace u, v;
    for (const auto& e : s) (xs.contains(e) ? u : v).insert(e);
    bool ok;
    if (u.empty() && v.empty()) {
      ok = true;
    } else if (v.empty()) {
      ok = has_common(p, u, r.y().labels(), true);
    } else if (u.empty()) {
      ok = has_common(p, v, r.x().labels(), false);
    } else {
      ok = true;
      for (const auto& a : u)
        for (const auto& b : v) ok = ok && p.contains({a, b});
    }
    if (ok) out.insert(s);
  });
  return out;
}

inline std::string pair_label(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

/// S ⊆ R is a face iff proj_X(S) × proj_Y(S) ⊆ R.
inline LComplex rectangle_complex(const dmorse::Relation& r) {
  const auto p = pair_set(r);
  std::vector<std::pair<std::string, std::string>> pv(p.begin(), p.end());
  LComplex out;
  const std::size_t n = pv.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::set<std::string> px, py;
    LFace s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1u) {
        px.insert(pv[i].first);
        py.insert(pv[i].second);
        s.insert(pair_label(pv[i].first, pv[i].second));
      }
    }
    bool ok = true;
    for (const auto& a : px)
      for (const auto& b : py) ok = ok && p.contains({a, b});
    if (ok) out.insert(s);
  }
  return out;
}

inline bool is_cover(const LFace& a, const LFace& b) {
  return b.size() == a.size() + 1 && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Hasse diagram with matched edges pointing up and all others down; the
/// matching is acyclic iff this digraph has no directed cycle.
inline bool acyclic(const LComplex& d, const std::vector<std::pair<LFace, LFace>>& matched) {
  std::set<std::pair<LFace, LFace>> up(matched.begin(), matched.end());
  std::map<LFace, std::vector<LFace>> out;
  std::map<LFace, int> indeg;
  for (const auto& f : d) indeg[f];
  for (const auto& b : d) {
    for (const auto& e : b) {
      LFace a = b;
      a.erase(e);
      if (up.contains({a, b})) {
        out[a].push_back(b);
        ++indeg[b];
      } else {
        out[b].push_back(a);
        ++indeg[a];
      }
    }
  }
  std::vector<LFace> ready;
  for (const auto& [f, k] : indeg) {
    if (k == 0) ready.push_back(f);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const LFace f = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& g : out[f]) {
      if (--indeg[g] == 0) ready.push_back(g);
    }
  }
  return seen == d.size();
}

inline std::vector<std::pair<LFace, LFace>> label_pairs(const dmorse::Matching& m) {
  std::vector<std::pair<LFace, LFace>> out;
  for (auto [a, b] : m.pairs()) out.emplace_back(labels(m.complex(), a), labels(m.complex(), b));
  return out;
}

/// Free-face replay over label sets.
inline bool replay(LComplex current, const std::vector<std::pair<LFace, LFace>>& steps, const LComplex& to) {
  for (const auto& [tau, sigma] : steps) {
    if (!is_cover(tau, sigma) || !current.contains(tau) || !current.contains(sigma)) return false;
    for (const auto& f : current) {
      if (f == tau || f == sigma) continue;
      if (std::includes(f.begin(), f.end(), tau.begin(), tau.end())) return false;
      if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) return false;
    }
    current.erase(tau);
    current.erase(sigma);
  }
  return current == to;
}

/// Betti numbers over ℚ by exact Gaussian elimination on dense boundary matrices.
inline std::vector<std::size_t> betti(const LComplex& c) {
  using Q = boost::multiprecision::cpp_rational;
  std::map<std::size_t, std::vector<LFace>> by_size;
  std::size_t top = 0;
  for (const auto& f : c) {
    if (f.empty()) continue;
    by_size[f.size()].push_back(f);
    top = std::max(top, f.size());
  }
  auto rank = [&](std::size_t k) -> std::size_t {  // rank of ∂ from size k to size k-1
    if (k < 2 || !by_size.contains(k)) return 0;
    const auto& rows = by_size[k - 1];
    const auto& cols = by_size[k];
    std::map<LFace, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    std::vector<std::vector<Q>> a(rows.size(), std::vector<Q>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (const auto& e : cols[j]) {
        LFace g = cols[j];
        g.erase(e);
        a[row_of.at(g)][j] = sign;
        sign = -sign;
      }
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols.size() && r < rows.size(); ++col) {
      std::size_t piv = r;
      while (piv < rows.size() && a[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(a[piv], a[r]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (a[i][col] == 0) continue;
        const Q factor = a[i][col] / a[r][col];
        for (std::size_t j = col; j < cols.size(); ++j) a[i][j] -= factor * a[r][j];
      }
      ++r;
    }
    return r;
  };
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= top; ++k) out.push_back(by_size[k].size() - rank(k) - rank(k + 1));
  return out;
}

/// Pairwise Condition C2: G ⊆ F in M implies rank(f(F)) ≤ rank(f(G)).
inline bool c2_pairwise(const std::vector<dmorse::Face>& m, const dmorse::FaceMap<std::size_t>& f,
                        const dmorse::VertexOrder& order) {
  for (auto a : m)
    for (auto b : m) {
      if (a.subset_of(b) && order.rank(f.at(b)) > order.rank(f.at(a))) return false;
    }
  return true;
}

/// Random complex: closure of a few random facets on the first n labels of v0, v1, ...
inline dmorse::SimplicialComplex random_complex(std::mt19937_64& gen, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> nd(1, max_vertices);
  const std::size_t n = nd(gen);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> kd(1, 4);
  std::uniform_int_distribution<std::uint64_t> md(0, (std::uint64_t{1} << n) - 1);
  std::vector<dmorse::Face> facets;
  const std::size_t k = kd(gen);
  for (std::size_t i = 0; i < k; ++i) facets.emplace_back(md(gen));
  return dmorse::SimplicialComplex::closure(dmorse::Universe(names), facets);
}

}  // namespace oracle
