// JSON-string bindings. The Python package wraps these with dict conversion.
#include <map>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmorse/dowker.hpp"
#include "dmorse/error.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/io.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/pipeline.hpp"

namespace py = pybind11;
using namespace dmorse;
using nlohmann::json;

namespace {

json parse(const std::string& text) { return io::parse_json(text, "<python>"); }

Side side_of(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw DomainError("side must be 'left' or 'right', got '" + s + "'");
}

// Non-bipartite relations go through their tagged copy, as in the CLI.
Relation working(const std::string& relation) {
  const auto r = io::relation_from_json(parse(relation));
  return r.bipartite() ? r : disjointify(r).relation;
}

json verdict_json(const Verdict& v) {
  json j = {{"ok", v.ok}};
  if (v.step) j["step"] = *v.step;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

std::string dowker_json(const std::string& relation, const std::string& side, const std::string& strategy) {
  const auto r = io::relation_from_json(parse(relation));
  if (strategy != "intersection" && strategy != "maximal") throw DomainError("unknown strategy '" + strategy + "'");
  const auto s = strategy == "maximal" ? DowkerStrategy::MaximalFaces : DowkerStrategy::Intersection;
  if (side == "both") {
    const auto d = dowker(r, s);
    return json{{"left", io::to_json(d.left)}, {"right", io::to_json(d.right)}}.dump();
  }
  return io::to_json(side_of(side) == Side::Left ? dowker_left(r, s) : dowker_right(r, s)).dump();
}

std::string matching_json(const std::string& relation, const std::string& side) {
  const auto dm = dowker_matching(working(relation), side_of(side));
  json j = io::to_json(dm.matching());
  j["side"] = side;
  j["c2_holds"] = dm.pairing.c2_holds;
  return j.dump();
}

std::string collapse_json(const std::string& relation, const std::string& side) {
  const auto dm = dowker_matching(working(relation), side_of(side));
  return io::to_json(collapse_sequence(dm.biclique, dm.target, dm.matching())).dump();
}

std::string verify_json(const std::string& text) {
  const json j = parse(text);
  const Verdict v =
      j.contains("nodes") ? verify_zigzag(io::zigzag_from_json(j)) : verify_certificate(io::certificate_from_json(j));
  return verdict_json(v).dump();
}

std::string find_cycle_json(const std::string& matching) {
  const Matching mt = io::matching_from_json(parse(matching));
  const auto cycle = find_cycle(mt);
  if (!cycle) return "null";
  json faces = json::array();
  for (Face f : *cycle) faces.push_back(io::face_json(mt.complex(), f));
  return faces.dump();
}

std::string pipeline_json(const std::string& relation, std::optional<std::uint64_t> seed, std::size_t replay,
                          bool timing) {
  PipelineOptions o;
  o.seed = seed;
  o.replay_stride = replay;
  return run_pipeline(io::relation_from_json(parse(relation)), o).to_json(timing).dump();
}

std::string zigzag_json(const std::string& relation, bool expand) {
  ZigzagOptions o;
  o.expand_relabels = expand;
  return io::to_json(barmak_zigzag(io::relation_from_json(parse(relation)), o)).dump();
}

std::string iso_zigzag_json(const std::string& a, const std::string& b, const std::map<std::string, std::string>& alpha) {
  return io::to_json(isomorphic_zigzag(io::complex_from_json(parse(a)), io::complex_from_json(parse(b)), alpha)).dump();
}

}  // namespace

PYBIND11_MODULE(_dmorse, m) {
  m.doc() = "Dowker complexes, acyclic matchings and collapse certificates";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CyclicMatchingError>(m, "CyclicMatchingError", pre.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.attr("PRNG") = kPrngName;
  m.attr("DEFAULT_RECTANGLE_BUDGET") = kDefaultRectangleFaceBudget;

  m.def("_dowker", &dowker_json, py::arg("relation"), py::arg("side") = "both", py::arg("strategy") = "intersection");
  m.def("_biclique", [](const std::string& r) { return io::to_json(biclique_complex(working(r))).dump(); });
  m.def("_rectangle", [](const std::string& r, std::size_t budget) {
    return io::to_json(rectangle_complex(io::relation_from_json(parse(r)), budget)).dump();
  });
  m.def("_disjointify", [](const std::string& r) {
    return io::to_json(disjointify(io::relation_from_json(parse(r))).relation).dump();
  });
  m.def("_matching", &matching_json);
  m.def("_collapse", &collapse_json);
  m.def("_verify", &verify_json);
  m.def("_find_cycle", &find_cycle_json);
  m.def("_homology", [](const std::string& c) { return io::to_json(homology(io::complex_from_json(parse(c)))).dump(); });
  m.def("_pipeline", &pipeline_json);
  m.def("_random_relation", [](std::size_t nx, std::size_t ny, double density, std::uint64_t seed) {
    return io::to_json(random_relation(nx, ny, density, seed)).dump();
  });
  m.def("_zigzag", &zigzag_json);
  m.def("_isomorphic_zigzag", &iso_zigzag_json);
}
