#include "dmorse/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "dmorse/error.hpp"

namespace dmorse::io {

namespace {

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      out.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      out.push_back(std::to_string(e.get<long long>()));
    } else {
      throw ParseError(std::string(what) + " entries must be strings");
    }
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json bigint_json(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

}  // namespace

json to_json(const Relation& r) {
  json pairs = json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({r.x().label(a), r.y().label(b)});
  return {{"x", r.x().labels()}, {"y", r.y().labels()}, {"pairs", pairs}};
}

Relation relation_from_json(const json& j) {
  auto xs = label_list(field(j, "x"), "x");
  auto ys = label_list(field(j, "y"), "y");
  if (j.contains("pairs") == j.contains("matrix")) throw ParseError("relation needs exactly one of 'pairs' or 'matrix'");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("pairs")) {
    for (const auto& p : j.at("pairs")) {
      auto two = label_list(p, "pair");
      if (two.size() != 2) throw ParseError("each pair must have two entries");
      pairs.emplace_back(two[0], two[1]);
    }
  } else {
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != xs.size()) throw ParseError("matrix must have one row per x");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!m[i].is_array() || m[i].size() != ys.size()) throw ParseError("matrix row " + std::to_string(i) + " must have one entry per y");
      for (std::size_t k = 0; k < ys.size(); ++k) {
        const auto& e = m[i][k];
        if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1)) throw ParseError("matrix entries must be 0 or 1");
        if (e.get<int>() == 1) pairs.emplace_back(xs[i], ys[k]);
      }
    }
  }
  return Relation::from_labels(std::move(xs), std::move(ys), pairs);
}

json face_json(const SimplicialComplex& c, Face f) { return c.labels_of(f); }

Face face_from_json(const SimplicialComplex& c, const json& j) { return c.face_of(label_list(j, "face")); }

json to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (Face f : c.facets()) facets.push_back(face_json(c, f));
  return {{"universe", c.universe().labels()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  Universe u(label_list(field(j, "universe"), "universe"));
  const auto& fj = field(j, "facets");
  if (!fj.is_array()) throw ParseError("facets must be an array");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : fj) facets.push_back(label_list(f, "facet"));
  return SimplicialComplex::closure(std::move(u), facets);
}

json to_json(const Matching& m) {
  json pairs = json::array();
  for (auto [lower, upper] : m.pairs()) pairs.push_back({face_json(m.complex(), lower), face_json(m.complex(), upper)});
  return {{"complex", to_json(m.complex())}, {"pairs", pairs}};
}

Matching matching_from_json(const json& j, const SimplicialComplex* complex) {
  SimplicialComplex c = complex ? *complex : complex_from_json(field(j, "complex"));
  std::vector<std::pair<Face, Face>> pairs;
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each matched pair must have two faces");
    Face a = face_from_json(c, p[0]);
    Face b = face_from_json(c, p[1]);
    if (a.size() > b.size()) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  return Matching(std::move(c), std::move(pairs));
}

json to_json(const CollapseCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"tau", face_json(c.from, s.tau)}, {"sigma", face_json(c.from, s.sigma)}});
  return {{"from", to_json(c.from)}, {"to", to_json(c.to)}, {"steps", steps}};
}

CollapseCertificate certificate_from_json(const json& j) {
  CollapseCertificate c{complex_from_json(field(j, "from")), complex_from_json(field(j, "to")), {}};
  for (const auto& s : field(j, "steps")) {
    c.steps.push_back({face_from_json(c.from, field(s, "tau")), face_from_json(c.from, field(s, "sigma"))});
  }
  return c;
}

json to_json(const Zigzag& z) {
  json nodes = json::array();
  for (const auto& n : z.nodes) nodes.push_back(to_json(n));
  json arrows = json::array();
  for (const auto& a : z.arrows) {
    if (const auto* c = std::get_if<CollapseArrow>(&a)) {
      arrows.push_back({{"kind", "collapse"},
                        {"direction", c->direction == Direction::Leftward ? "leftward" : "rightward"},
                        {"certificate", to_json(c->certificate)}});
    } else {
      arrows.push_back({{"kind", "relabel"}, {"map", std::get<RelabelArrow>(a).vertex_map}});
    }
  }
  return {{"nodes", nodes}, {"arrows", arrows}};
}

Zigzag zigzag_from_json(const json& j) {
  Zigzag z;
  for (const auto& n : field(j, "nodes")) z.nodes.push_back(complex_from_json(n));
  for (const auto& a : field(j, "arrows")) {
    const auto kind = field(a, "kind").get<std::string>();
    if (kind == "collapse") {
      const auto dir = field(a, "direction").get<std::string>();
      if (dir != "leftward" && dir != "rightward") throw ParseError("unknown arrow direction '" + dir + "'");
      z.arrows.emplace_back(CollapseArrow{dir == "leftward" ? Direction::Leftward : Direction::Rightward,
                                          certificate_from_json(field(a, "certificate"))});
    } else if (kind == "relabel") {
      z.arrows.emplace_back(RelabelArrow{field(a, "map").get<std::map<std::string, std::string>>()});
    } else {
      throw ParseError("unknown arrow kind '" + kind + "'");
    }
  }
  return z;
}

json to_json(const HomologyProfile& p) {
  json torsion = json::array();
  for (const auto& t : p.torsion) {
    json row = json::array();
    for (const auto& d : t) row.push_back(bigint_json(d));
    torsion.push_back(row);
  }
  return {{"betti", p.betti}, {"torsion", torsion}, {"euler", p.euler}};
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::istringstream lines(text);
    std::string context;
    for (std::size_t i = 0; i < line && std::getline(lines, context); ++i) {
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what() +
                     "\n  | " + context);
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json(text, path == "-" ? "<stdin>" : path);
}

void write_json(const std::string& path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

}  // namespace dmorse::io
