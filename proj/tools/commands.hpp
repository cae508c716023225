#pragma once

// Implementation of the dhm command-line verbs. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dhm/linalg.hpp"
#include "problem_spec.hpp"

namespace dhm::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kWall = 3,
};

/// Rectangular rational grid, iterated with the first coordinate slowest.
struct Grid {
  Rational step{1, 17};
  std::vector<std::pair<Rational, Rational>> bounds;  // per axis, inclusive

  /// All points lo + k*step <= hi, lexicographic order. Empty if some lo > hi.
  std::vector<RationalVector> points() const;
};

struct Options {
  std::optional<IntegerVector> eta;
  std::optional<IntegerVector> group_eta;
  std::optional<IntegerMatrix> subtorus;
  std::optional<Grid> grid;
  std::optional<Rational> grid_step;  // used with default bounds when `grid` is unset
  std::optional<std::size_t> flip_sign;
  std::optional<std::string> output;
  std::uint64_t seed = 42;
  std::uint64_t samples = 1'000'000;
  double halfwidth = 1.0 / 32.0;
  bool strict = false;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// "1,2" -> (1,2)
IntegerVector parse_integer_list(std::string_view text);
/// "1,2;3,4" -> columns (1,2) and (3,4)
IntegerMatrix parse_columns(std::string_view text, std::size_t rows);
/// "-1,2" (every axis) or "-1,2;0,3" (per axis)
std::vector<std::pair<Rational, Rational>> parse_bounds(std::string_view text, std::size_t dim);

int cmd_polarize(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_density(const ProblemSpec& spec, const Options& opt, const RationalVector& point, std::ostream& out,
                std::ostream& err);
int cmd_check_identity(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_grid(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_mc(const ProblemSpec& spec, const Options& opt, const RationalVector& point, std::ostream& out,
           std::ostream& err);
int cmd_toric_data(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err);

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
  std::vector<RationalVector> mismatch_points;  // first few only
};

/// The check-identity sweep without the report: fixed-point decomposition of
/// the spec's polytope versus the polytope oracle at every grid point regular
/// for both. Throws dhm::Error on bad input.
SweepSummary run_identity_sweep(const ProblemSpec& spec, const Options& opt);

}  // namespace dhm::cli
