#include "commands.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "symmatch/amenability.hpp"
#include "symmatch/counterexample.hpp"
#include "symmatch/error.hpp"
#include "symmatch/twinlattice.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace symmatch::cli {

using io::Json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
  return buf;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::kLeft;
  if (s == "right") return Side::kRight;
  throw InputError("side must be 'left' or 'right'");
}

Json optional_witness(const std::optional<HallWitness>& w) {
  return w ? io::to_json(*w) : Json();
}

// "3", "-1/2", "0.25" as exact rationals.
Ratio parse_ratio(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const auto den = std::stoll(text.substr(slash + 1));
      if (den == 0) throw InputError("zero denominator in '" + text + "'");
      return Ratio(std::stoll(text.substr(0, slash)), den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Ratio(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 12) throw InputError("too many decimals in '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const bool negative = !text.empty() && text[0] == '-';
    const std::string whole = text.substr(0, dot);
    const std::int64_t int_part = whole.empty() || whole == "-" ? 0 : std::llabs(std::stoll(whole));
    const std::int64_t frac_part = frac.empty() ? 0 : std::stoll(frac);
    const Ratio magnitude(int_part * scale + frac_part, scale);
    return negative ? -magnitude : magnitude;
  } catch (const std::logic_error&) {
    throw InputError("cannot parse rational '" + text + "'");
  }
}

FiniteSubset parse_u(const GroupDescriptor& group, const std::string& text) {
  if (text == "e") return FiniteSubset(group, {GroupElem::identity(group)});
  if (text == "generators") return generators(group);
  if (text == "cross") {
    std::vector<GroupElem> u{GroupElem::identity(group)};
    if (group.family == Family::kZd) {
      for (int i = 0; i < group.param; ++i) {
        std::vector<std::int64_t> v(group.param, 0);
        v[i] = 1;
        u.push_back(GroupElem::vector(std::move(v)));
      }
    } else if (group.family == Family::kCyclic) {
      u.push_back(GroupElem::residue(1, group.param));
    } else {
      for (int g = 0; g < group.param; ++g) {
        u.push_back(GroupElem::word(std::string(1, static_cast<char>('a' + g)), group.param));
      }
    }
    return FiniteSubset(group, std::move(u));
  }
  std::vector<GroupElem> u;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) u.push_back(GroupElem::parse(group, item));
  return FiniteSubset(group, std::move(u));
}

std::string folner_table(const FolnerReport& r, const std::vector<Ratio>& defects) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %10s %10s %14s %12s %14s\n", "window", "|F|", "|FU|",
                "ratio", "ratio~", "max|F\\Fg|/|F|");
  out << line;
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    std::snprintf(line, sizeof line, "%-12s %10lld %10lld %14s %12s %14s\n", row.window.c_str(),
                  static_cast<long long>(row.f), static_cast<long long>(row.fu),
                  to_string(row.ratio).c_str(), fixed6(to_double(row.ratio)).c_str(),
                  to_string(defects[k]).c_str());
    out << line;
  }
  if (!r.rows.empty()) out << "infimum so far: " << to_string(r.infimum_so_far) << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Outcome cmd_match(const MatchOptions& o) {
  const auto text = io::read_file(o.path);
  const auto g = io::bigraph_from_json(io::parse(text));
  spdlog::debug("match: {} x {} graph with {} edges", g.left_count(), g.right_count(),
                g.edges().size());
  const auto m = max_matching(g);
  const bool perfect = is_perfect(g, m);
  Json result;
  result["left"] = g.left_count();
  result["right"] = g.right_count();
  result["edges"] = g.edges().size();
  result["matching"] = io::to_json(m);
  result["perfect"] = perfect;
  Json hall;
  hall["left"] = optional_witness(hall_check(g, Side::kLeft));
  hall["right"] = optional_witness(hall_check(g, Side::kRight));
  result["hall"] = std::move(hall);
  if (g.weighted() && !g.edges().empty()) {
    const auto b = bottleneck_matching(g);
    if (b) {
      Json bj;
      bj["threshold"] = b->threshold;
      bj["matching"] = io::to_json(b->matching);
      result["bottleneck"] = std::move(bj);
    } else {
      result["bottleneck"] = Json();
    }
  }
  return {std::move(result), (o.require_perfect && !perfect) ? kNegative : kSuccess, {}, text};
}

Outcome cmd_factor(const FactorOptions& o) {
  const auto text = io::read_file(o.path);
  const auto sg = io::symgraph_from_json(io::parse(text));
  const auto f = factor(sg);
  Json result;
  result["factor"] = io::to_json(f);
  result["proper"] = is_proper(sg);
  return {std::move(result), kSuccess, {}, text};
}

Outcome cmd_symmatch(const SymmatchOptions& o) {
  const auto text = io::read_file(o.path);
  const auto sg = io::symgraph_from_json(io::parse(text));
  const auto outcome = symmetric_perfect_matching(sg);
  Json result;
  int code = kSuccess;
  if (const auto* sm = std::get_if<SymMatching>(&outcome)) {
    result["status"] = "symmetric_perfect_matching";
    result["matching"] = io::to_json(*sm);
    result["witness"] = Json();
  } else {
    result["status"] = "factor_hall_violation";
    result["matching"] = Json();
    result["witness"] = io::to_json(std::get<HallWitness>(outcome));
    code = kNegative;
  }
  if (o.window) {
    if (*o.window < 0) throw InputError("window radius must be >= 0");
    const auto w = materialize(sg, ball(sg.group(), *o.window));
    Json wj;
    wj["radius"] = *o.window;
    wj["left"] = w.graph.left_count();
    wj["right"] = w.graph.right_count();
    wj["edges"] = w.graph.edges().size();
    wj["interior_left"] = w.interior_count(Side::kLeft);
    wj["interior_right"] = w.interior_count(Side::kRight);
    if (const auto* sm = std::get_if<SymMatching>(&outcome)) {
      const auto m = restrict_to_window(*sm, w);
      validate_matching(w.graph, m);
      wj["matched_pairs"] = m.size();
      wj["covers_interior"] = covers_interior(w, m);
    } else {
      wj["interior_violation_left"] = optional_witness(interior_hall_violation(w, Side::kLeft));
      wj["interior_violation_right"] = optional_witness(interior_hall_violation(w, Side::kRight));
    }
    result["window"] = std::move(wj);
  }
  return {std::move(result), code, {}, text};
}

Outcome cmd_probe(const ProbeOptions& o) {
  const auto text = io::read_file(o.path);
  const auto sg = io::symgraph_from_json(io::parse(text));
  std::vector<FiniteSubset> windows;
  for (int r : o.radii) {
    if (r < 0) throw InputError("probe radii must be >= 0");
    windows.push_back(ball(sg.group(), r));
  }
  const auto report = window_hall_probe(sg, windows, parse_side(o.side));
  Json result = io::to_json(report);
  Json radii = Json::array();
  for (int r : o.radii) radii.push_back(r);
  result["radii"] = std::move(radii);
  std::string source = text + "|" + o.side;
  for (int r : o.radii) source += "|" + std::to_string(r);
  return {std::move(result), report.any_violation() ? kNegative : kSuccess, {}, source};
}

Outcome cmd_folner(const FolnerOptions& o) {
  GroupDescriptor group{GroupDescriptor::parse_family(o.family), o.param};
  group.validate();
  const auto u = parse_u(group, o.u);
  std::vector<NamedWindow> windows;
  for (int n : o.boxes) {
    if (n < 1) throw InputError("box sides must be >= 1");
    windows.push_back({"box " + std::to_string(n), box(group, 0, n - 1)});
  }
  for (int r : o.balls) {
    windows.push_back({"ball " + std::to_string(r), ball(group, r)});
  }
  if (windows.empty()) throw InputError("give --boxes or --balls");
  const auto report = folner_ratio(group, windows, u);
  std::vector<Ratio> defects;
  for (const auto& w : windows) defects.push_back(folner_witness_translate(group, w.set, u));

  Json result;
  result["group"] = io::to_json(group);
  Json uj = Json::array();
  for (const auto& g : u.elements()) uj.push_back(g.to_string());
  result["U"] = std::move(uj);
  Json rj = io::to_json(report);
  for (std::size_t k = 0; k < defects.size(); ++k) {
    rj["rows"][k]["max_translate_defect"] = to_string(defects[k]);
  }
  result["report"] = std::move(rj);

  std::string source = o.family + "|" + std::to_string(o.param) + "|" + o.u;
  for (int n : o.boxes) source += "|box" + std::to_string(n);
  for (int r : o.balls) source += "|ball" + std::to_string(r);
  return {std::move(result), kSuccess, folner_table(report, defects), source};
}

Outcome cmd_paradox(const ParadoxOptions& o) {
  ParadoxMutation mutation = ParadoxMutation::kNone;
  if (o.mutation == "no-hotel-fix") {
    mutation = ParadoxMutation::kNoHotelFix;
  } else if (o.mutation == "corrupted-table") {
    mutation = ParadoxMutation::kCorruptedTable;
  } else if (o.mutation != "none") {
    throw InputError("unknown mutation '" + o.mutation + "'");
  }
  if (o.radius < 0) throw InputError("radius must be >= 0");
  const auto p = standard_f2_paradox(mutation);
  const auto verdict = verify_paradox(p, o.radius);

  Json result;
  result["radius"] = o.radius;
  result["mutation"] = o.mutation;
  const auto index_set = p.index_set();
  Json index = Json::array();
  for (const auto& g : index_set.elements()) index.push_back(g.to_string());
  result["index_set"] = std::move(index);
  int code = kSuccess;
  if (const auto* cert = std::get_if<ParadoxCertificate>(&verdict)) {
    Json c;
    c["words_classified"] = cert->words_classified;
    c["interior_words"] = cert->interior_words;
    c["images"] = cert->images;
    result["certificate"] = std::move(c);
    result["violation"] = Json();
  } else {
    const auto& v = std::get<ParadoxViolation>(verdict);
    Json j;
    j["kind"] = violation_kind_name(v.kind);
    j["word"] = v.word.to_string();
    j["detail"] = v.detail;
    result["certificate"] = Json();
    result["violation"] = std::move(j);
    code = kNegative;
  }

  std::string text;
  if (o.table_radius) {
    Json rows = Json::array();
    std::ostringstream table;
    table << "word        A-index  B-index\n";
    for (const auto& row : classification_table(p, *o.table_radius)) {
      rows.push_back(Json::array(
          {row.word.to_string(), row.a_index.to_string(), row.b_index.to_string()}));
      char line[96];
      std::snprintf(line, sizeof line, "%-11s %-8s %s\n", row.word.to_string().c_str(),
                    row.a_index.to_string().c_str(), row.b_index.to_string().c_str());
      table << line;
    }
    result["classification"] = std::move(rows);
    text = table.str();
  }
  text += result["violation"].is_null() ? "certificate: ok\n"
                                        : "violation: " + result["violation"].dump() + "\n";
  const std::string source = std::to_string(o.radius) + "|" + o.mutation + "|" +
                             (o.table_radius ? std::to_string(*o.table_radius) : "-");
  return {std::move(result), code, text, source};
}

Outcome cmd_counterexample(const CounterexampleOptions& o) {
  const auto p = standard_f2_paradox();
  Json result;
  int code = kSuccess;
  const std::string source = std::string(o.emit ? "emit" : "") + "|" +
                             (o.verify ? std::to_string(*o.verify) : "-") + "|" +
                             (o.untwisted ? "untwisted" : "twisted") + "|" +
                             (o.corrupt_latin ? "corrupt" : "latin");
  if (o.untwisted) {
    const auto sg = build_untwisted_counterexample(p);
    result["sym_graph"] = io::to_json(sg);
    result["factor"] = io::to_json(factor(sg));
    result["proper"] = is_proper(sg);
    const auto improper = find_improper_pair(sg, ball(sg.group(), 1));
    result["improper_pair"] =
        improper ? Json::array({Json::array({improper->first.h.to_string(), improper->first.orbit}),
                                Json::array({improper->second.h.to_string(),
                                             improper->second.orbit})})
                 : Json();
    return {std::move(result), kSuccess, {}, source};
  }

  auto phi = LatinSquare::cyclic(static_cast<int>(p.index_set().size()));
  if (o.corrupt_latin) {
    auto table = phi.table();
    table[0][1] = table[0][0];  // repeated row entry
    phi = LatinSquare::unchecked(std::move(table));
  }
  const auto bundle = build_counterexample(p, phi);
  const auto f = factor(bundle.sym_graph);
  result["index_set"] = Json::array();
  for (const auto& g : bundle.index_set.elements()) result["index_set"].push_back(g.to_string());
  Json latin = Json::array();
  for (const auto& row : phi.table()) latin.push_back(row);
  result["latin_square"] = std::move(latin);
  result["latin"] = phi.is_latin();
  result["proper"] = is_proper(bundle.sym_graph);
  if (!result["proper"].get<bool>()) code = kNegative;
  result["factor_max_matching"] = max_matching(f.underlying).size();
  result["witness"] = io::to_json(certify_no_symmetric_matching(bundle));
  if (o.emit) {
    result["sym_graph"] = io::to_json(bundle.sym_graph);
    result["factor"] = io::to_json(f);
  }
  if (o.verify) {
    if (*o.verify < 0) throw InputError("verify radius must be >= 0");
    Json rows = Json::array();
    for (int r = 0; r <= *o.verify; ++r) {
      const auto v = verify_window(bundle, r);
      Json j;
      j["radius"] = v.radius;
      j["left"] = v.left;
      j["right"] = v.right;
      j["interior_left"] = v.interior_left;
      j["interior_right"] = v.interior_right;
      j["matched"] = v.matched;
      j["valid_matching"] = v.valid_matching;
      j["uncovered_interior"] = v.uncovered_interior;
      j["doubly_covered"] = v.doubly_covered;
      j["ok"] = v.ok();
      if (!v.ok()) code = kNegative;
      rows.push_back(std::move(j));
    }
    result["verification"] = std::move(rows);
  }
  return {std::move(result), code, {}, source};
}

Outcome cmd_twinlattice(const TwinOptions& o) {
  if (o.t.size() != 2) throw InputError("--t takes two values");
  std::string source;
  for (auto v : o.pqc) source += std::to_string(v) + ",";
  source += "|" + (o.angle ? fixed6(*o.angle) : std::string("-")) + (o.degrees ? "deg" : "") +
            "|" + o.t[0] + "," + o.t[1] + "|" + (o.rcap ? fixed6(*o.rcap) : "-") + "|" +
            (o.window ? std::to_string(*o.window) : "-") + "|" + fixed6(o.r_max);

  Json result;
  if (o.window) {
    double angle = 0.0;
    if (o.angle) {
      angle = o.degrees ? *o.angle * std::numbers::pi / 180.0 : *o.angle;
    } else if (o.pqc.size() == 3) {
      angle = std::atan2(static_cast<double>(o.pqc[1]), static_cast<double>(o.pqc[0]));
    } else {
      throw InputError("give --angle or --pqc");
    }
    const std::array<double, 2> t{to_double(parse_ratio(o.t[0])), to_double(parse_ratio(o.t[1]))};
    const auto est = irrational_window_estimate(angle, t, *o.window, o.r_max);
    result["mode"] = "window";
    result["angle"] = fixed6(est.angle);
    result["t"] = Json::array({fixed6(t[0]), fixed6(t[1])});
    result["window_radius"] = est.window_radius;
    result["left_points"] = est.left_points;
    result["right_points"] = est.right_points;
    result["candidates"] = est.candidates;
    result["violation_found"] = est.violation_found;
    result["lower_bound"] = fixed6(est.lower_bound);
    result["matching_at"] = est.matching_at ? Json(fixed6(*est.matching_at)) : Json();
    result["upper_is_heuristic"] = true;
    return {std::move(result), kSuccess, {}, source};
  }

  if (o.pqc.size() != 3) throw InputError("rational mode needs --pqc p q c");
  const auto rot = RationalRotation::make(o.pqc[0], o.pqc[1], o.pqc[2],
                                          {parse_ratio(o.t[0]), parse_ratio(o.t[1])});
  const double cap = period_cap(rot);
  const double rcap = o.rcap ? *o.rcap : std::min(2.0, cap) * 0.99;
  const auto lattice = common_sublattice(rot);
  result["mode"] = "rational";
  result["rotation"] = Json::array({rot.p, rot.q, rot.c});
  result["t"] = Json::array({to_string(rot.t[0]), to_string(rot.t[1])});
  result["sublattice"] = Json::array({Json::array({lattice.basis[0][0], lattice.basis[0][1]}),
                                      Json::array({lattice.basis[1][0], lattice.basis[1][1]})});
  result["index"] = lattice.index;
  result["rcap"] = fixed6(rcap);

  const auto bound = bottleneck_bound(rot, rcap);
  if (const auto* inf = std::get_if<BottleneckInfeasible>(&bound)) {
    result["status"] = "infeasible";
    result["largest_tested_squared"] =
        inf->largest_squared ? Json(to_string(*inf->largest_squared)) : Json();
    return {std::move(result), kNegative, {}, source};
  }
  const auto& b = std::get<BottleneckBound>(bound);
  result["status"] = "ok";
  result["r_squared"] = to_string(b.squared);
  result["r"] = fixed6(b.value);
  result["matching"] = io::to_json(b.matching);
  if (!o.export_quotient.empty()) {
    write_text_file(o.export_quotient, io::to_json(b.quotient.graph).dump(2) + "\n");
  }
  if (!o.emit_points.empty()) {
    write_text_file(o.emit_points, format_point_pairs(matching_points(b, o.periods)));
  }
  return {std::move(result), kSuccess, {}, source};
}

Outcome cmd_selftest(const SelftestOptions& o) {
  if (o.cases < 1) throw InputError("--cases must be >= 1");
  testing::Rng rng(o.seed);
  std::uniform_int_distribution<int> size(0, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  int matching_failures = 0;
  int hall_failures = 0;
  int transfer_failures = 0;
  int transfer_checked = 0;
  Json failures = Json::array();
  for (int k = 0; k < o.cases; ++k) {
    const auto g = testing::random_bigraph(rng, size(rng), size(rng), density(rng));
    const auto m = max_matching(g);
    validate_matching(g, m);
    if (static_cast<int>(m.size()) != oracle::max_matching_size(g)) {
      ++matching_failures;
      failures.push_back(Json{{"case", k}, {"check", "matching"}, {"graph", io::to_json(g)}});
    }
    for (Side side : {Side::kLeft, Side::kRight}) {
      const auto w = hall_check(g, side);
      const int d = oracle::deficiency(g, side);
      const bool consistent = w ? (w->deficiency() == d && static_cast<int>(neighborhood(
                                                              g, side, w->subset)
                                                              .size()) == w->neighborhood_size)
                                : d == 0;
      if (!consistent) {
        ++hall_failures;
        failures.push_back(Json{{"case", k}, {"check", "hall"}, {"graph", io::to_json(g)}});
      }
    }

    const auto sg =
        testing::random_proper_symgraph(rng, k % 2 == 0 ? Family::kZd : Family::kCyclic);
    const auto outcome = symmetric_perfect_matching(sg);
    if (const auto* sm = std::get_if<SymMatching>(&outcome)) {
      const auto w = materialize(sg, ball(sg.group(), 2));
      const auto restricted = restrict_to_window(*sm, w);
      validate_matching(w.graph, restricted);
      ++transfer_checked;
      if (!covers_interior(w, restricted)) {
        ++transfer_failures;
        failures.push_back(Json{{"case", k}, {"check", "transfer"}, {"graph", io::to_json(sg)}});
      }
    }
  }
  spdlog::info("selftest: {} cases, {} symmetric transfers checked", o.cases, transfer_checked);
  Json result;
  result["seed"] = o.seed;
  result["cases"] = o.cases;
  result["matching_failures"] = matching_failures;
  result["hall_failures"] = hall_failures;
  result["transfers_checked"] = transfer_checked;
  result["transfer_failures"] = transfer_failures;
  result["failures"] = std::move(failures);
  const bool ok = matching_failures == 0 && hall_failures == 0 && transfer_failures == 0;
  result["ok"] = ok;
  return {std::move(result), ok ? kSuccess : kNegative, {},
          std::to_string(o.seed) + "|" + std::to_string(o.cases)};
}

}  // namespace symmatch::cli
