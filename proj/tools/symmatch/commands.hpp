#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmatch/io.hpp"

namespace symmatch::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2 };

struct Outcome {
  io::Json result;
  int exit_code = kSuccess;
  // Human-readable rendering for --format text, when the command has one.
  std::optional<std::string> text;
  // Bytes hashed into the report's input digest.
  std::string digest_source;
};

struct MatchOptions {
  std::string path;
  bool require_perfect = false;
};
Outcome cmd_match(const MatchOptions& o);

struct FactorOptions {
  std::string path;
};
Outcome cmd_factor(const FactorOptions& o);

struct SymmatchOptions {
  std::string path;
  std::optional<int> window;
};
Outcome cmd_symmatch(const SymmatchOptions& o);

struct ProbeOptions {
  std::string path;
  std::vector<int> radii{1, 2, 3};
  std::string side = "left";
};
Outcome cmd_probe(const ProbeOptions& o);

struct FolnerOptions {
  std::string family = "zd";
  int param = 2;
  std::vector<int> boxes;  // zd: sides n of [0, n-1]^d
  std::vector<int> balls;  // radii
  std::string u = "cross";  // e | generators | cross | explicit "g1;g2;..."
};
Outcome cmd_folner(const FolnerOptions& o);

struct ParadoxOptions {
  int radius = 6;
  std::string mutation = "none";
  std::optional<int> table_radius;
};
Outcome cmd_paradox(const ParadoxOptions& o);

struct CounterexampleOptions {
  bool emit = false;
  std::optional<int> verify;
  bool untwisted = false;
  bool corrupt_latin = false;
};
Outcome cmd_counterexample(const CounterexampleOptions& o);

struct TwinOptions {
  std::vector<std::int64_t> pqc;
  std::optional<double> angle;
  bool degrees = false;
  std::vector<std::string> t{"0", "0"};
  std::optional<double> rcap;
  std::optional<int> window;
  double r_max = 1.25;
  std::string emit_points;
  int periods = 1;
  std::string export_quotient;
};
Outcome cmd_twinlattice(const TwinOptions& o);

struct SelftestOptions {
  std::uint64_t seed = 1;
  int cases = 200;
};
Outcome cmd_selftest(const SelftestOptions& o);

// FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

}  // namespace symmatch::cli
