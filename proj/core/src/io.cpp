#include "symmatch/io.hpp"

#include <fstream>
#include <sstream>

#include "symmatch/error.hpp"

namespace symmatch::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid ") + what + ": " + e.what());
  }
}

Json index_list(const IndexSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v);
  return out;
}

Json ratio_json(const Ratio& r) { return to_string(r); }

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::size_t begin = text.rfind('\n', stop == 0 ? 0 : stop - 1);
    begin = begin == std::string_view::npos || stop == 0 ? 0 : begin + 1;
    std::size_t end = text.find('\n', stop);
    if (end == std::string_view::npos) end = text.size();
    throw InputError("JSON parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + std::string(text.substr(begin, end - begin)));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteBigraph bigraph_from_json(const Json& j) {
  return guarded("bipartite graph", [&] {
    const int left = j.at("left").get<int>();
    const int right = j.at("right").get<int>();
    std::vector<Edge> edges;
    std::vector<double> weights;
    std::size_t weighted = 0;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
        throw InputError("edges must be [i, j] or [i, j, w]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
      if (e.size() == 3) {
        weights.push_back(e[2].get<double>());
        ++weighted;
      }
    }
    if (weighted != 0 && weighted != edges.size()) {
      throw InputError("either all edges or none carry a weight");
    }
    if (weighted == 0) return FiniteBigraph(left, right, std::move(edges));
    return FiniteBigraph(left, right, std::move(edges), std::move(weights));
  });
}

Json to_json(const FiniteBigraph& g) {
  Json out;
  out["left"] = g.left_count();
  out["right"] = g.right_count();
  Json edges = Json::array();
  const auto w = g.weights();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    Json e = Json::array({g.edges()[k].left, g.edges()[k].right});
    if (!w.empty()) e.push_back(w[k]);
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  return out;
}

GroupDescriptor group_from_json(const Json& j) {
  return guarded("group", [&] {
    GroupDescriptor g{GroupDescriptor::parse_family(j.at("family").get<std::string>()),
                      j.at("param").get<int>()};
    g.validate();
    return g;
  });
}

Json to_json(const GroupDescriptor& g) {
  Json out;
  out["family"] = g.family_name();
  out["param"] = g.param;
  return out;
}

SymGraph symgraph_from_json(const Json& j) {
  return guarded("symmetric graph", [&] {
    const auto group = group_from_json(j.at("group"));
    std::vector<Triple> triples;
    for (const auto& t : j.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw InputError("triples must be [i, \"g\", j]");
      triples.push_back({t[0].get<int>(), GroupElem::parse(group, t[1].get<std::string>()),
                         t[2].get<int>()});
    }
    return SymGraph(group, j.at("a_orbits").get<int>(), j.at("b_orbits").get<int>(),
                    std::move(triples));
  });
}

Json to_json(const SymGraph& sg) {
  Json out;
  out["group"] = to_json(sg.group());
  out["a_orbits"] = sg.a_orbits();
  out["b_orbits"] = sg.b_orbits();
  Json triples = Json::array();
  for (const auto& t : sg.triples()) triples.push_back(Json::array({t.a, t.g.to_string(), t.b}));
  out["triples"] = std::move(triples);
  return out;
}

Json to_json(const Matching& m) {
  Json out;
  out["size"] = m.size();
  Json pairs = Json::array();
  for (const auto& e : m.pairs) pairs.push_back(Json::array({e.left, e.right}));
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const HallWitness& w) {
  Json out;
  out["side"] = side_name(w.side);
  out["subset"] = index_list(w.subset);
  out["neighborhood_size"] = w.neighborhood_size;
  out["deficiency"] = w.deficiency();
  return out;
}

Json to_json(const FactorGraph& f) {
  Json out = to_json(f.underlying);
  Json mult = Json::array();
  for (const auto& [key, list] : f.multiplicity) {
    Json elems = Json::array();
    for (const auto& g : list) elems.push_back(g.to_string());
    mult.push_back(Json::array({key.first, key.second, std::move(elems)}));
  }
  out["multiplicity"] = std::move(mult);
  return out;
}

Json to_json(const SymMatching& sm) {
  Json out;
  out["size"] = sm.chosen.size();
  Json chosen = Json::array();
  for (const auto& [key, g] : sm.chosen) {
    chosen.push_back(Json::array({key.first, g.to_string(), key.second}));
  }
  out["chosen"] = std::move(chosen);
  return out;
}

SymMatching symmatching_from_json(const SymGraph& sg, const Json& j) {
  return guarded("symmetric matching", [&] {
    SymMatching sm;
    for (const auto& t : j.at("chosen")) {
      if (!t.is_array() || t.size() != 3) throw InputError("chosen entries must be [i, \"g\", j]");
      const OrbitPair key{t[0].get<int>(), t[2].get<int>()};
      if (!sm.chosen.emplace(key, GroupElem::parse(sg.group(), t[1].get<std::string>())).second) {
        throw InputError("duplicate orbit pair in symmetric matching");
      }
    }
    return sm;
  });
}

Json to_json(const FolnerReport& r) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["window"] = row.window;
    j["F"] = row.f;
    j["FU"] = row.fu;
    j["ratio"] = ratio_json(row.ratio);
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  out["infimum_so_far"] = r.rows.empty() ? Json() : ratio_json(r.infimum_so_far);
  return out;
}

Json to_json(const ProbeReport& r) {
  Json out;
  out["side"] = side_name(r.side);
  Json windows = Json::array();
  for (const auto& w : r.windows) {
    Json j;
    j["window"] = w.window;
    j["size"] = w.size;
    j["interior"] = w.interior;
    j["violation"] = w.violation ? to_json(*w.violation) : Json();
    windows.push_back(std::move(j));
  }
  out["windows"] = std::move(windows);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["window"] = row.window;
    j["orbits"] = index_list(row.orbits);
    j["F"] = row.f;
    j["X"] = row.x;
    j["Y"] = row.y;
    j["FU"] = row.fu;
    j["EFX"] = row.efx;
    j["ratio"] = ratio_json(row.ratio);
    j["counting_holds"] = row.counting_holds;
    j["certifies"] = row.certifies;
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace symmatch::io
