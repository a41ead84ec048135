#include "dmorse/pipeline.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "dmorse/dowker.hpp"
#include "dmorse/error.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/io.hpp"

namespace dmorse {

using nlohmann::json;

VertexOrder order_for(const Relation& working, const OrderSpec& spec, bool tagged) {
  const std::size_t nx = working.x().size();
  if (spec.x.size() != nx || spec.y.size() != working.y().size()) {
    throw PreconditionError("order must list every element of X and of Y exactly once");
  }
  std::vector<std::size_t> seq;
  seq.reserve(nx + working.y().size());
  for (const auto& l : spec.x) {
    auto i = working.x().find(tagged ? left_tag(l) : l);
    if (!i) throw DomainError("order names '" + l + "', which is not in X");
    seq.push_back(*i);
  }
  for (const auto& l : spec.y) {
    auto j = working.y().find(tagged ? right_tag(l) : l);
    if (!j) throw DomainError("order names '" + l + "', which is not in Y");
    seq.push_back(nx + *j);
  }
  return VertexOrder::from_sequence(std::move(seq));
}

OrderSpec order_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw ParseError("order file needs 'x' and 'y' label lists");
  return {j.at("x").get<std::vector<std::string>>(), j.at("y").get<std::vector<std::string>>()};
}

bool PipelineReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PipelineCheck& c) { return c.passed; });
}

const PipelineCheck* PipelineReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json PipelineReport::to_json(bool include_timing) const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks_json.push_back(e);
  }
  json out = {{"relation", relation},       {"complexes", complexes}, {"matchings", matchings},
              {"certificates", certificates}, {"homology", homology},   {"checks", checks_json},
              {"notices", notices},         {"passed", passed()},     {"prng", kPrngName}};
  out["seed"] = seed ? json(*seed) : json(nullptr);
  if (include_timing) {
    json t = json::object();
    for (const auto& [stage, secs] : timing) t[stage] = secs;
    out["timing"] = t;
  }
  return out;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink, std::string stage)
      : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    sink_.emplace_back(stage_, d.count());
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

json complex_summary(const SimplicialComplex& c) {
  const auto fv = f_vector(c);
  return {{"faces", c.size()}, {"f_vector", fv}, {"euler", euler_characteristic(fv)}};
}

bool every_face_conic(const Relation& r, const SimplicialComplex& c, bool left) {
  for (Face f : c.faces()) {
    if (f.empty()) continue;
    if ((left ? y_neighbors(r, f) : x_neighbors(r, f)).empty()) return false;
  }
  return true;
}

}  // namespace

PipelineReport run_pipeline(const Relation& r, const PipelineOptions& options) {
  PipelineReport rep;
  rep.seed = options.seed;
  rep.relation = {{"x", r.x().size()}, {"y", r.y().size()}, {"pairs", r.pairs().size()}, {"bipartite", r.bipartite()}};

  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  // Runs a stage; an exception becomes a failed check named after the stage.
  auto guarded = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const std::exception& e) {
      check(name, false, e.what());
      return false;
    }
  };

  const Disjointified tagged = disjointify(r);
  const Relation& rt = tagged.relation;

  SimplicialComplex cx, cy, cxt, cyt, b, e;
  bool have_e = false;
  {
    Stopwatch sw(rep.timing, "dowker");
    cx = dowker_left(r);
    cy = dowker_right(r);
    cxt = dowker_left(rt);
    cyt = dowker_right(rt);
  }
  check("dowker.left_faces_conic", every_face_conic(r, cx, true));
  check("dowker.right_faces_conic", every_face_conic(r, cy, false));
  check("dowker.strategies_agree", same_faces(cx, dowker_left(r, DowkerStrategy::MaximalFaces)) &&
                                       same_faces(cy, dowker_right(r, DowkerStrategy::MaximalFaces)));
  guarded("disjointify.induced_isomorphisms", [&] {
    const auto lm = induced_left_map(tagged.tagging);
    const auto rm = induced_right_map(tagged.tagging);
    check("disjointify.induced_isomorphisms",
          lm.injective() && rm.injective() && same_faces(apply_map(lm), cxt) && same_faces(apply_map(rm), cyt));
  });
  rep.complexes["left"] = complex_summary(cx);
  rep.complexes["right"] = complex_summary(cy);

  {
    Stopwatch sw(rep.timing, "biclique");
    b = biclique_complex(rt);
  }
  rep.complexes["biclique"] = complex_summary(b);
  check("biclique.contains_left", is_subcomplex(cxt, b));
  check("biclique.contains_right", is_subcomplex(cyt, b));
  {
    const std::size_t n_bicliques = bicliques(rt).size();
    check("biclique.face_count", b.size() + 1 == cxt.size() + cyt.size() + n_bicliques,
          "|B| = " + std::to_string(b.size()) + ", |C_X| + |C_Y| + bicliques - 1 = " +
              std::to_string(cxt.size() + cyt.size() + n_bicliques - 1));
  }

  {
    Stopwatch sw(rep.timing, "rectangle");
    try {
      e = rectangle_complex(r, options.rectangle_face_budget);
      have_e = true;
      rep.complexes["rectangle"] = complex_summary(e);
    } catch (const SizeError& err) {
      rep.notices.push_back(std::string("rectangle complex skipped: ") + err.what());
    }
  }

  std::optional<VertexOrder> order;
  if (options.order) order = order_for(rt, *options.order, true);

  const std::pair<Side, std::string> sides[] = {{Side::Left, "left"}, {Side::Right, "right"}};
  std::vector<CollapseCertificate> certs;
  for (const auto& [side, name] : sides) {
    DowkerMatching dm;
    bool built = false;
    {
      Stopwatch sw(rep.timing, "matching." + name);
      built = guarded("matching." + name + ".c1", [&] {
        dm = dowker_matching(rt, side, order);
        check("matching." + name + ".c1", true);
      });
    }
    if (!built) continue;
    const auto& mt = dm.matching();
    rep.matchings[name] = {{"faces", mt.size()}, {"pairs", mt.pairs().size()}};
    check("matching." + name + ".c2", dm.pairing.acyclic_certified(),
          dm.pairing.c2_violation ? "violated at " + b.describe(dm.pairing.c2_violation->first) : "");
    {
      bool invariant = true;
      for (Face f : mt.faces()) invariant = invariant && dm.f.at(mt.mu(f)) == dm.f.at(f);
      check("matching." + name + ".f_mu_invariant", invariant);
    }
    {
      Stopwatch sw(rep.timing, "acyclicity." + name);
      const auto cycle = find_cycle(mt);
      check("matching." + name + ".acyclic", !cycle.has_value());
    }
    Stopwatch sw(rep.timing, "certificate." + name);
    guarded("certificate." + name + ".verified", [&] {
      auto cert = collapse_sequence(dm.biclique, dm.target, mt);
      const Verdict v = verify_certificate(cert);
      check("certificate." + name + ".verified", v.ok,
            v.ok ? "" : "step " + (v.step ? std::to_string(*v.step) : std::string("-")) + ": " + v.reason);
      check("certificate." + name + ".step_count", cert.steps.size() * 2 == mt.size());
      rep.certificates[name] = {{"steps", cert.steps.size()}};
      certs.push_back(std::move(cert));
    });
  }

  if (options.replay_stride > 0) {
    Stopwatch sw(rep.timing, "replay");
    for (std::size_t i = 0; i < certs.size(); ++i) {
      std::string detail;
      const bool ok = replay_preserves_homology(certs[i], options.replay_stride, &detail);
      check("certificate." + std::string(i == 0 ? "left" : "right") + ".replay_homology", ok, detail);
    }
  }

  {
    Stopwatch sw(rep.timing, "zigzag");
    guarded("zigzag.verified", [&] {
      ZigzagOptions zo;
      zo.order = order;
      const Verdict v = verify_zigzag(barmak_zigzag(r, zo));
      check("zigzag.verified", v.ok, v.reason);
    });
  }

  {
    Stopwatch sw(rep.timing, "homology");
    std::vector<std::pair<std::string, const SimplicialComplex*>> targets = {
        {"left", &cx}, {"right", &cy}, {"biclique", &b}};
    if (have_e) targets.emplace_back("rectangle", &e);
    std::vector<std::pair<std::string, HomologyProfile>> profiles;
    for (const auto& [name, c] : targets) {
      check("oracle." + name + ".boundary_squared_zero", boundary_squares_to_zero(*c));
      try {
        auto p = homology(*c);
        rep.homology[name] = io::to_json(p);
        check("oracle." + name + ".euler", p.euler == euler_characteristic(f_vector(*c)));
        profiles.emplace_back(name, std::move(p));
      } catch (const SizeError& err) {
        rep.notices.push_back("homology of " + name + " skipped: " + err.what());
      }
    }
    for (std::size_t i = 1; i < profiles.size(); ++i) {
      check("homology." + profiles[0].first + "_eq_" + profiles[i].first,
            profiles_equal(profiles[0].second, profiles[i].second));
    }
  }
  return rep;
}

Relation random_relation(std::size_t nx, std::size_t ny, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
  if (nx + ny > kMaxUniverse) {
    throw SizeError("nx + ny = " + std::to_string(nx + ny) + " exceeds the cap of " + std::to_string(kMaxUniverse));
  }
  std::mt19937_64 gen(seed);
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      // 53 high bits as a uniform double in [0, 1); independent of the standard library's distributions.
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < density) pairs.emplace_back(i, j);
    }
  }
  return Relation(Universe(std::move(xs)), Universe(std::move(ys)), std::move(pairs));
}

bool replay_preserves_homology(const CollapseCertificate& c, std::size_t stride, std::string* detail) {
  if (stride == 0) stride = 1;
  HomologyProfile base;
  try {
    base = homology(c.from);
  } catch (const SizeError& e) {
    if (detail) *detail = std::string("skipped: ") + e.what();
    return true;
  }
  FaceSet current(c.from.faces().begin(), c.from.faces().end());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    current.erase(c.steps[i].tau);
    current.erase(c.steps[i].sigma);
    if ((i + 1) % stride != 0 && i + 1 != c.steps.size()) continue;
    const auto now = SimplicialComplex::from_faces(c.from.universe(), std::vector<Face>(current.begin(), current.end()));
    if (!profiles_equal(base, homology(now))) {
      if (detail) *detail = "homology changed after step " + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace dmorse
