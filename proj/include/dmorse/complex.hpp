#pragma once

// Faces, simplicial complexes over an indexed vertex universe, and
// simplicial maps between them.
//
// A face is a bit set over the universe (at most 64 vertices). Complexes are
// immutable once built; every constructor enforces downward closure.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

namespace dmorse {

inline constexpr std::size_t kMaxUniverse = 64;

/// Ordered, label-distinct vertex universe. Index i is the i-th declared label.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws ConstructionError naming the label when it is not declared.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Finite vertex set, stored as a bit set keyed by universe index.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  Face(std::initializer_list<std::size_t> indices);
  static Face from_indices(std::span<const std::size_t> indices);
  static constexpr Face singleton(std::size_t i) { return Face(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr int dim() const { return static_cast<int>(size()) - 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Face with(std::size_t v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
  constexpr Face without(std::size_t v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }
  /// Largest vertex index; undefined on the empty face.
  constexpr std::size_t max_index() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<std::size_t> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
  friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Face a, Face b) = default;

  template <typename H>
  friend H AbslHashValue(H h, Face f) {
    return H::combine(std::move(h), f.bits_);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing index sequences: {} < {0} < {0,1} < {0,2} < {1}.
bool lex_less(Face a, Face b);

/// Orders by cardinality first, then lexicographically.
bool graded_less(Face a, Face b);

/// a ≺ b: a ⊆ b and b has exactly one extra vertex.
constexpr bool is_cover(Face a, Face b) { return a.subset_of(b) && b.size() == a.size() + 1; }

using FaceSet = absl::flat_hash_set<Face>;
template <typename T>
using FaceMap = absl::flat_hash_map<Face, T>;

/// Downward-closed family of faces over a universe. The void complex (no
/// faces) and {∅} are distinct values.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// All subsets of the given facets. An empty facet list yields the void complex.
  static SimplicialComplex closure(Universe universe, std::span<const Face> facets);
  static SimplicialComplex closure(Universe universe, const std::vector<std::vector<std::string>>& facets);
  /// Takes an explicit face family and verifies downward closure.
  static SimplicialComplex from_faces(Universe universe, std::vector<Face> faces);

  const Universe& universe() const { return universe_; }
  /// Faces in lexicographic order.
  std::span<const Face> faces() const& { return faces_; }
  std::span<const Face> faces() const&& = delete;
  std::size_t size() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }
  bool contains(Face f) const { return index_.contains(f); }
  /// Highest face dimension; -1 for {∅} and the void complex.
  int dimension() const;
  /// Union of all faces as a bit set.
  Face vertex_mask() const;

  std::vector<Face> facets() const;
  std::vector<Face> faces_of_dim(int k) const;

  std::vector<std::string> labels_of(Face f) const;
  Face face_of(const std::vector<std::string>& labels) const;
  std::string describe(Face f) const;

  /// Same faces re-indexed over another universe; every used label must exist there.
  SimplicialComplex reindexed(const Universe& target) const;

 private:
  SimplicialComplex(Universe universe, std::vector<Face> faces);

  Universe universe_;
  std::vector<Face> faces_;
  FaceSet index_;
};

/// Label-level face-set equality; the universes may differ.
bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

/// Vertices occurring in at least one face, in universe order.
std::vector<std::string> minimal_ground_set(const SimplicialComplex& c);

/// Entry k counts faces of cardinality k+1.
std::vector<std::size_t> f_vector(const SimplicialComplex& c);

long long euler_characteristic(std::span<const std::size_t> f_vec);

/// Every face of g is a face of d (compared by labels).
bool is_subcomplex(const SimplicialComplex& g, const SimplicialComplex& d);

/// Translates a face between universes by label; nullopt if a label is missing.
std::optional<Face> translate(Face f, const Universe& from, const Universe& to);

/// Vertex map between minimal ground sets satisfying the image condition.
class SimplicialMap {
 public:
  /// Throws PreconditionError naming one offending face if the image condition fails.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::map<std::string, std::string> vertex_map);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }

  Face image(Face f) const;
  /// Injective on the minimal ground set.
  bool injective() const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::map<std::string, std::string> vertex_map_;
  std::vector<std::size_t> table_;  // source index -> target index
};

/// { f(F) : F ∈ source }, over the target's universe.
SimplicialComplex apply_map(const SimplicialMap& m);

}  // namespace dmorse
