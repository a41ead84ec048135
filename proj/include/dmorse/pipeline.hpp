#pragma once

// End-to-end verification of one relation and the random-relation generator
// used by the property suites.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dmorse/morse.hpp"
#include "dmorse/relation.hpp"

namespace dmorse {

/// Total order given as label sequences of the input relation's X and Y.
struct OrderSpec {
  std::vector<std::string> x;
  std::vector<std::string> y;
};

/// Order over the biclique universe of `working` (a relation or its
/// disjointified copy); `tagged` maps the order's labels through the tagging.
VertexOrder order_for(const Relation& working, const OrderSpec& spec, bool tagged);

OrderSpec order_spec_from_json(const nlohmann::json& j);

struct PipelineOptions {
  std::optional<OrderSpec> order;
  /// Recompute homology every `replay_stride` certificate steps; 0 disables.
  std::size_t replay_stride = 0;
  std::size_t rectangle_face_budget = std::size_t{1} << 17;
  std::optional<std::uint64_t> seed;
};

struct PipelineCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  nlohmann::json relation;
  nlohmann::json complexes = nlohmann::json::object();
  nlohmann::json matchings = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::object();
  nlohmann::json homology = nlohmann::json::object();
  std::vector<PipelineCheck> checks;
  std::vector<std::string> notices;
  std::vector<std::pair<std::string, double>> timing;
  std::optional<std::uint64_t> seed;

  bool passed() const;
  const PipelineCheck* find(const std::string& name) const;
  /// Timing goes under its own key so the rest diffs cleanly across runs.
  nlohmann::json to_json(bool include_timing = true) const;
};

PipelineReport run_pipeline(const Relation& r, const PipelineOptions& options = {});

inline constexpr const char* kPrngName = "mt19937_64/v1";

/// Each pair included independently with probability `density`; labels x0.., y0...
Relation random_relation(std::size_t nx, std::size_t ny, double density, std::uint64_t seed);

/// Replays the certificate, comparing homology with the starting complex every
/// `stride` steps and at the end. Complexes too large for the oracle are skipped.
bool replay_preserves_homology(const CollapseCertificate& c, std::size_t stride, std::string* detail = nullptr);

}  // namespace dmorse
