#pragma once

// JSON interchange for relations, complexes, matchings, certificates,
// zigzags and homology profiles.
//
//   relation    {"x": [...], "y": [...], "pairs": [[x, y], ...]}  or  "matrix": [[0,1,...], ...]
//   complex     {"universe": [...], "facets": [[...], ...]}
//   matching    {"complex": <complex>, "pairs": [[lower, upper], ...]}
//   certificate {"from": <complex>, "to": <complex>, "steps": [{"tau": [...], "sigma": [...]}, ...]}

#include <string>

#include "json.hpp"

#include "dmorse/complex.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/relation.hpp"

namespace dmorse::io {

using nlohmann::json;

json to_json(const Relation& r);
Relation relation_from_json(const json& j);

json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json face_json(const SimplicialComplex& c, Face f);
Face face_from_json(const SimplicialComplex& c, const json& j);

json to_json(const Matching& m);
/// Uses the embedded "complex" unless one is supplied.
Matching matching_from_json(const json& j, const SimplicialComplex* complex = nullptr);

json to_json(const CollapseCertificate& c);
CollapseCertificate certificate_from_json(const json& j);

json to_json(const Zigzag& z);
Zigzag zigzag_from_json(const json& j);

json to_json(const HomologyProfile& p);

/// Reads a file, or standard input for "-". Parse failures report line and column.
json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

/// Parses text; `source` names it in error messages.
json parse_json(const std::string& text, const std::string& source);

}  // namespace dmorse::io
