#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "symmatch/error.hpp"

namespace {

using symmatch::cli::Outcome;

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("symmatch");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SYMMATCH_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  namespace cli = symmatch::cli;

  CLI::App app{"Symmetric perfect matchings in group-invariant bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool no_timing = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--no-timing", no_timing, "Omit timing_ms from the report");

  std::function<Outcome()> run;
  std::string command;
  auto bind = [&](CLI::App* sub, auto fn) {
    sub->callback([&, sub, fn] {
      command = sub->get_name();
      run = fn;
    });
  };

  cli::MatchOptions match;
  auto* s_match = app.add_subcommand("match", "Maximum matching and Hall witnesses of a finite graph");
  s_match->add_option("file", match.path, "Graph JSON")->required();
  s_match->add_flag("--require-perfect", match.require_perfect, "Exit 1 unless perfect");
  bind(s_match, [&] { return cli::cmd_match(match); });

  cli::FactorOptions fac;
  auto* s_factor = app.add_subcommand("factor", "Factor graph of a symmetric graph");
  s_factor->add_option("file", fac.path, "Symmetric graph JSON")->required();
  bind(s_factor, [&] { return cli::cmd_factor(fac); });

  cli::SymmatchOptions sym;
  auto* s_sym = app.add_subcommand("symmatch", "Decide existence of a symmetric perfect matching");
  s_sym->add_option("file", sym.path, "Symmetric graph JSON")->required();
  s_sym->add_option("--window", sym.window, "Also check the ball of this radius");
  bind(s_sym, [&] { return cli::cmd_symmatch(sym); });

  cli::ProbeOptions probe;
  auto* s_probe = app.add_subcommand("probe", "Window Hall probe with counting rows");
  s_probe->add_option("file", probe.path, "Symmetric graph JSON")->required();
  s_probe->add_option("--radii", probe.radii, "Ball radii")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->capture_default_str();
  s_probe->add_option("--side", probe.side, "left or right")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  bind(s_probe, [&] { return cli::cmd_probe(probe); });

  cli::FolnerOptions folner;
  auto* s_folner = app.add_subcommand("folner", "Folner ratios |FU|/|F| over a window family");
  s_folner->add_option("--family", folner.family, "zd, cyclic or free")->capture_default_str();
  s_folner->add_option("--param", folner.param, "Dimension, order or rank")->capture_default_str();
  s_folner->add_option("--boxes", folner.boxes, "Box sides n for [0, n-1]^d")
      ->delimiter(',')
      ->allow_extra_args(false);
  s_folner->add_option("--balls", folner.balls, "Ball radii")
      ->delimiter(',')
      ->allow_extra_args(false);
  s_folner->add_option("--u", folner.u, "e, generators, cross or \"g1;g2;...\"")
      ->capture_default_str();
  bind(s_folner, [&] { return cli::cmd_folner(folner); });

  cli::ParadoxOptions paradox;
  auto* s_paradox = app.add_subcommand("paradox", "Verify the paradoxical decomposition of F_2");
  s_paradox->add_option("--radius", paradox.radius, "Verification radius")->capture_default_str();
  s_paradox->add_option("--mutation", paradox.mutation, "none, no-hotel-fix or corrupted-table")
      ->check(CLI::IsMember({"none", "no-hotel-fix", "corrupted-table"}))
      ->capture_default_str();
  s_paradox->add_option("--table", paradox.table_radius, "Print the classification up to radius");
  bind(s_paradox, [&] { return cli::cmd_paradox(paradox); });

  cli::CounterexampleOptions counter;
  auto* s_counter =
      app.add_subcommand("counterexample", "Perfect matching with no symmetric perfect matching");
  s_counter->add_flag("--emit", counter.emit, "Include the graph and its factor");
  s_counter->add_option("--verify", counter.verify, "Verify the explicit matching up to radius");
  s_counter->add_flag("--untwisted", counter.untwisted, "Build the improper first version");
  s_counter->add_flag("--corrupt-latin", counter.corrupt_latin, "Use a non-Latin table");
  bind(s_counter, [&] { return cli::cmd_counterexample(counter); });

  cli::TwinOptions twin;
  auto* s_twin = app.add_subcommand("twinlattice", "Bottleneck matching between Z^2 and R Z^2 + t");
  s_twin->add_option("--pqc", twin.pqc, "Pythagorean triple p q c")->expected(3);
  s_twin->add_option("--angle", twin.angle, "Rotation angle (radians unless --degrees)");
  s_twin->add_flag("--degrees", twin.degrees, "Angle is in degrees");
  s_twin->add_option("--t", twin.t, "Translation, e.g. 1/2 0")->expected(2);
  s_twin->add_option("--rcap", twin.rcap, "Largest threshold tried");
  s_twin->add_option("--window", twin.window, "Finite-window estimate on a disc of this radius");
  s_twin->add_option("--r-max", twin.r_max, "Largest candidate in window mode")
      ->capture_default_str();
  s_twin->add_option("--emit-points", twin.emit_points, "Write matched point pairs to FILE");
  s_twin->add_option("--periods", twin.periods, "Periods per direction for --emit-points")
      ->capture_default_str();
  s_twin->add_option("--export-quotient", twin.export_quotient,
                     "Write the quotient graph JSON to FILE");
  bind(s_twin, [&] { return cli::cmd_twinlattice(twin); });

  cli::SelftestOptions self;
  auto* s_self = app.add_subcommand("selftest", "Randomized cross-checks against brute force");
  s_self->add_option("--seed", self.seed, "RNG seed")->capture_default_str();
  s_self->add_option("--cases", self.cases, "Number of random cases")->capture_default_str();
  bind(s_self, [&] { return cli::cmd_selftest(self); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = run();
  } catch (const symmatch::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "text" && outcome.text) {
    std::cout << *outcome.text;
    return outcome.exit_code;
  }
  symmatch::io::Json report;
  report["command"] = command;
  report["input_digest"] = cli::digest(outcome.digest_source);
  report["result"] = std::move(outcome.result);
  if (!no_timing) report["timing_ms"] = elapsed;
  std::cout << report.dump(format == "text" ? 2 : -1) << "\n";
  return outcome.exit_code;
}
