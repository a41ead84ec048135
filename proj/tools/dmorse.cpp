// dmorse: command-line front end.
//
// Every subcommand reads and writes JSON; "-" is standard input or output.
// Exit status: 0 pass, 1 check failure, 2 usage, parse or size error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dmorse/dowker.hpp"
#include "dmorse/error.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/io.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace dmorse;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string order_file;
  std::string side = "left";
  std::optional<std::uint64_t> seed;
  bool expand = false;
  bool stats = false;
};

/// X, Y labels kept when already disjoint, otherwise tagged.
struct Working {
  Relation relation;
  bool tagged = false;
};

Working working_relation(const Relation& r) {
  if (r.bipartite()) return {r, false};
  std::cerr << "note: X and Y share labels; working on the tagged copy\n";
  return {disjointify(r).relation, true};
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw CLI::ValidationError("--side", "expected left or right, got '" + s + "'");
}

std::optional<VertexOrder> load_order(const Globals& g, const Working& w) {
  if (g.order_file.empty()) return std::nullopt;
  return order_for(w.relation, order_spec_from_json(io::read_json(g.order_file)), w.tagged);
}

json stats_of(const SimplicialComplex& c) {
  const auto fv = f_vector(c);
  return {{"faces", c.size()}, {"f_vector", fv}, {"euler", euler_characteristic(fv)}};
}

/// Sidecar next to the output file, or standard error when writing to stdout.
void emit_stats(const Globals& g, const std::string& out, const json& s) {
  if (!g.stats) return;
  if (out == "-") {
    std::cerr << s.dump(2) << "\n";
  } else {
    io::write_json(out + ".stats.json", s);
  }
}

void emit_complex(const Globals& g, const std::string& out, const SimplicialComplex& c) {
  io::write_json(out, io::to_json(c));
  emit_stats(g, out, stats_of(c));
}

json verdict_json(const Verdict& v) {
  json j = {{"ok", v.ok}};
  if (v.step) j["step"] = *v.step;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dowker complexes, biclique collapses and their certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--order", g.order_file, "Total order file {\"x\": [...], \"y\": [...]}");
  app.add_option("--side", g.side, "left or right")->check(CLI::IsMember({"left", "right", "both"}));
  app.add_option("--seed", g.seed, "PRNG seed");
  app.add_flag("--expand-relabels", g.expand, "Replace relabel arrows by collapse zigzags");
  app.add_flag("--stats", g.stats, "Also write f-vector and Euler characteristic");

  std::string input = "-";
  std::string output = "-";
  auto io_opts = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input JSON file or -");
    sub->add_option("-o,--output", output, "Output JSON file or -");
  };

  auto* dowker_cmd = app.add_subcommand("dowker", "Dowker complexes C_X and C_Y");
  io_opts(dowker_cmd);
  std::string strategy = "intersection";
  dowker_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"intersection", "maximal"}));

  auto* biclique_cmd = app.add_subcommand("biclique", "Biclique complex B");
  io_opts(biclique_cmd);

  auto* rectangle_cmd = app.add_subcommand("rectangle", "Rectangle complex E");
  io_opts(rectangle_cmd);
  std::size_t budget = kDefaultRectangleFaceBudget;
  rectangle_cmd->add_option("--budget", budget, "Face enumeration budget");

  auto* matching_cmd = app.add_subcommand("matching", "Dowker matching on B");
  io_opts(matching_cmd);

  auto* collapse_cmd = app.add_subcommand("collapse", "Collapse certificate from a relation or a matching");
  io_opts(collapse_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate or a zigzag");
  io_opts(verify_cmd);

  auto* verify_matching_cmd = app.add_subcommand("verify-matching", "Acyclicity of a matching");
  io_opts(verify_matching_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex");
  io_opts(homology_cmd);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run every check on a relation");
  io_opts(pipeline_cmd);
  std::size_t replay = 0;
  bool no_timing = false;
  pipeline_cmd->add_option("--replay", replay, "Recompute homology every N certificate steps");
  std::size_t pipeline_budget = PipelineOptions{}.rectangle_face_budget;
  pipeline_cmd->add_option("--budget", pipeline_budget, "Rectangle complex face budget");
  pipeline_cmd->add_flag("--no-timing", no_timing, "Omit wall-clock fields");

  auto* random_cmd = app.add_subcommand("random", "Random relation");
  std::size_t nx = 4, ny = 4;
  double density = 0.5;
  random_cmd->add_option("--nx", nx);
  random_cmd->add_option("--ny", ny);
  random_cmd->add_option("--density", density);
  random_cmd->add_option("-o,--output", output);

  auto* zigzag_cmd = app.add_subcommand("zigzag", "Zigzag C_X ... C_Y, or between isomorphic complexes with --iso");
  io_opts(zigzag_cmd);
  std::vector<std::string> iso;
  std::string map_file;
  zigzag_cmd->add_option("--iso", iso, "Two complex files")->expected(2);
  zigzag_cmd->add_option("--map", map_file, "Vertex map file {label: label}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (g.side == "both" && !dowker_cmd->parsed()) throw CLI::ValidationError("--side", "'both' only applies to dowker");

    if (dowker_cmd->parsed()) {
      const auto r = io::relation_from_json(io::read_json(input));
      const auto s = strategy == "maximal" ? DowkerStrategy::MaximalFaces : DowkerStrategy::Intersection;
      if (g.side == "both") {
        const auto d = dowker(r, s);
        io::write_json(output, {{"left", io::to_json(d.left)}, {"right", io::to_json(d.right)}});
        emit_stats(g, output, {{"left", stats_of(d.left)}, {"right", stats_of(d.right)}});
      } else {
        emit_complex(g, output, parse_side(g.side) == Side::Left ? dowker_left(r, s) : dowker_right(r, s));
      }
      return kPass;
    }

    if (biclique_cmd->parsed()) {
      const auto w = working_relation(io::relation_from_json(io::read_json(input)));
      emit_complex(g, output, biclique_complex(w.relation));
      return kPass;
    }

    if (rectangle_cmd->parsed()) {
      emit_complex(g, output, rectangle_complex(io::relation_from_json(io::read_json(input)), budget));
      return kPass;
    }

    if (matching_cmd->parsed()) {
      const auto w = working_relation(io::relation_from_json(io::read_json(input)));
      const auto dm = dowker_matching(w.relation, parse_side(g.side), load_order(g, w));
      json j = io::to_json(dm.matching());
      j["side"] = g.side;
      j["c2_holds"] = dm.pairing.c2_holds;
      io::write_json(output, j);
      emit_stats(g, output, {{"matched_faces", dm.matching().size()}, {"biclique", stats_of(dm.biclique)}});
      return dm.pairing.acyclic_certified() ? kPass : kCheckFailed;
    }

    if (collapse_cmd->parsed()) {
      const json j = io::read_json(input);
      CollapseCertificate cert;
      if (j.contains("complex")) {
        // A matching: collapse its complex onto the unmatched faces.
        const Matching mt = io::matching_from_json(j);
        std::vector<Face> rest;
        for (Face f : mt.complex().faces()) {
          if (!mt.contains(f)) rest.push_back(f);
        }
        cert = collapse_sequence(mt.complex(), SimplicialComplex::from_faces(mt.complex().universe(), rest), mt);
      } else {
        const auto w = working_relation(io::relation_from_json(j));
        const auto dm = dowker_matching(w.relation, parse_side(g.side), load_order(g, w));
        cert = collapse_sequence(dm.biclique, dm.target, dm.matching());
      }
      io::write_json(output, io::to_json(cert));
      emit_stats(g, output, {{"steps", cert.steps.size()}, {"from", stats_of(cert.from)}, {"to", stats_of(cert.to)}});
      return kPass;
    }

    if (verify_cmd->parsed()) {
      const json j = io::read_json(input);
      const Verdict v = j.contains("nodes") ? verify_zigzag(io::zigzag_from_json(j))
                                            : verify_certificate(io::certificate_from_json(j));
      io::write_json(output, verdict_json(v));
      return v.ok ? kPass : kCheckFailed;
    }

    if (verify_matching_cmd->parsed()) {
      const Matching mt = io::matching_from_json(io::read_json(input));
      const auto cycle = find_cycle(mt);
      json out = {{"acyclic", !cycle.has_value()}};
      if (cycle) {
        json faces = json::array();
        for (Face f : *cycle) faces.push_back(io::face_json(mt.complex(), f));
        out["cycle"] = faces;
      }
      io::write_json(output, out);
      return cycle ? kCheckFailed : kPass;
    }

    if (homology_cmd->parsed()) {
      const auto c = io::complex_from_json(io::read_json(input));
      io::write_json(output, io::to_json(homology(c)));
      emit_stats(g, output, stats_of(c));
      return kPass;
    }

    if (pipeline_cmd->parsed()) {
      PipelineOptions opts;
      opts.replay_stride = replay;
      opts.rectangle_face_budget = pipeline_budget;
      opts.seed = g.seed;
      if (!g.order_file.empty()) opts.order = order_spec_from_json(io::read_json(g.order_file));
      const auto report = run_pipeline(io::relation_from_json(io::read_json(input)), opts);
      io::write_json(output, report.to_json(!no_timing));
      json timing = json::object();
      for (const auto& [stage, secs] : report.timing) timing[stage] = secs;
      emit_stats(g, output, {{"complexes", report.complexes}, {"checks", report.checks.size()}, {"timing", timing}});
      for (const auto& c : report.checks) {
        if (!c.passed) std::cerr << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
      for (const auto& n : report.notices) std::cerr << "note: " << n << "\n";
      return report.passed() ? kPass : kCheckFailed;
    }

    if (random_cmd->parsed()) {
      const std::uint64_t seed = g.seed.value_or(0);
      json j = io::to_json(random_relation(nx, ny, density, seed));
      j["generator"] = {{"prng", kPrngName}, {"seed", seed}, {"density", density}};
      io::write_json(output, j);
      return kPass;
    }

    if (zigzag_cmd->parsed()) {
      Zigzag z;
      if (!iso.empty()) {
        if (map_file.empty()) throw CLI::ValidationError("--map", "required with --iso");
        const auto a = io::complex_from_json(io::read_json(iso[0]));
        const auto b = io::complex_from_json(io::read_json(iso[1]));
        z = isomorphic_zigzag(a, b, io::read_json(map_file).get<std::map<std::string, std::string>>());
      } else {
        const auto r = io::relation_from_json(io::read_json(input));
        ZigzagOptions zo;
        zo.expand_relabels = g.expand;
        if (!g.order_file.empty()) zo.order = order_for(disjointify(r).relation, order_spec_from_json(io::read_json(g.order_file)), true);
        z = barmak_zigzag(r, zo);
      }
      io::write_json(output, io::to_json(z));
      json s = json::array();
      for (const auto& n : z.nodes) s.push_back(stats_of(n));
      emit_stats(g, output, {{"nodes", s}});
      return kPass;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CyclicMatchingError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const SizeError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
