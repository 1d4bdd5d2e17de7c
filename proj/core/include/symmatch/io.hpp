#pragma once

// JSON file formats. Objects are emitted with a fixed field order and all
// set-valued data in canonical order, so equal values serialize identically.
//
//   FiniteBigraph  {"left": n, "right": m, "edges": [[i, j], ...]}
//                  or with weights [[i, j, w], ...]
//   SymGraph       {"group": {"family": "zd"|"cyclic"|"free", "param": k},
//                   "a_orbits": n, "b_orbits": m, "triples": [[i, "<g>", j], ...]}

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symmatch/amenability.hpp"
#include "symmatch/bigraph.hpp"
#include "symmatch/symmetry.hpp"

namespace symmatch::io {

using Json = nlohmann::ordered_json;

// Throws InputError carrying line and column of the first syntax error.
Json parse(std::string_view text);
std::string read_file(const std::string& path);

FiniteBigraph bigraph_from_json(const Json& j);
Json to_json(const FiniteBigraph& g);

GroupDescriptor group_from_json(const Json& j);
Json to_json(const GroupDescriptor& g);

SymGraph symgraph_from_json(const Json& j);
Json to_json(const SymGraph& sg);

Json to_json(const Matching& m);
Json to_json(const HallWitness& w);
Json to_json(const FactorGraph& f);
Json to_json(const SymMatching& sm);
SymMatching symmatching_from_json(const SymGraph& sg, const Json& j);
Json to_json(const FolnerReport& r);
Json to_json(const ProbeReport& r);

}  // namespace symmatch::io
