// dhm: Duistermaat-Heckman densities from fixed-point data.
//
// Exit codes: 0 ok, 1 identity mismatch, 2 bad input or non-generic eta,
// 3 wall point (density --strict, mc).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  using namespace dhm::cli;

  CLI::App app{"Duistermaat-Heckman measures from torus fixed-point data"};
  app.require_subcommand(1);

  std::string spec_path = "-";
  std::string eta_text, group_eta_text, subtorus_text, step_text = "1/17", bounds_text, output;
  std::vector<std::string> point_text;
  long flip_sign = -1;
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_path, "Problem file (JSON); '-' reads stdin")->capture_default_str();
    sub->add_option("--eta", eta_text, "Polarizing vector, e.g. 1,2 (overrides the file)");
    sub->add_option("--subtorus", subtorus_text, "Subtorus generators, e.g. 1,2 or 1,0;0,1");
    sub->add_option("--flip-sign", flip_sign, "Debug: negate summand K");
  };
  auto gridded = [&](CLI::App* sub) {
    sub->add_option("--grid-step", step_text, "Rational grid step")->capture_default_str();
    sub->add_option("--bounds", bounds_text, "LO,HI for every axis or LO,HI;LO,HI per axis");
    sub->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  };

  auto* polarize = app.add_subcommand("polarize", "Polarized weights, flip counts and signs per fixed point");
  common(polarize);
  auto* density = app.add_subcommand("density", "Exact density at a point, or WALL");
  common(density);
  density->add_option("point", point_text, "Coordinates, rationals p/q")->required();
  density->add_flag("--strict", opt.strict, "Exit 3 on a wall point");
  auto* check = app.add_subcommand("check-identity", "Compare the decomposition with the polytope oracle on a grid");
  common(check);
  gridded(check);
  auto* grid = app.add_subcommand("grid", "Write densities on a grid as CSV");
  common(grid);
  gridded(grid);
  grid->add_option("--output", output, "CSV path (stdout when omitted)");
  grid->add_option("--group-eta", group_eta_text, "Also split by fixed components of this vector");
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate next to the exact density");
  common(mc);
  mc->add_option("point", point_text, "Coordinates, rationals p/q")->required();
  mc->add_option("--samples", opt.samples, "Samples per summand")->capture_default_str();
  mc->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  mc->add_option("--halfwidth", opt.halfwidth, "Half side of the averaging window")->capture_default_str();
  auto* toric = app.add_subcommand("toric-data", "Print fixed-point data of the problem's polytope");
  common(toric);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  ProblemSpec spec;
  try {
    std::string text;
    if (spec_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream f(spec_path, std::ios::binary);
      if (!f) throw dhm::Error("cannot open " + spec_path);
      text = read_all(f);
    }
    spec = parse_problem(text);
    if (!eta_text.empty()) opt.eta = parse_integer_list(eta_text);
    if (!group_eta_text.empty()) opt.group_eta = parse_integer_list(group_eta_text);
    if (!subtorus_text.empty()) opt.subtorus = parse_columns(subtorus_text, spec.torus_dim);
    if (flip_sign >= 0) opt.flip_sign = static_cast<std::size_t>(flip_sign);
    if (!output.empty()) opt.output = output;
    const std::size_t dim = opt.subtorus ? opt.subtorus->cols() : spec.subtorus ? spec.subtorus->cols() : spec.torus_dim;
    if (!bounds_text.empty()) {
      Grid g;
      g.step = dhm::parse_rational(step_text);
      g.bounds = parse_bounds(bounds_text, dim);
      opt.grid = g;
    } else {
      opt.grid_step = dhm::parse_rational(step_text);
    }
  } catch (const dhm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  auto parse_point = [&]() {
    std::vector<dhm::Rational> xs;
    for (const auto& t : point_text) xs.push_back(dhm::parse_rational(t));
    return dhm::RationalVector(std::move(xs));
  };

  try {
    if (*polarize) return cmd_polarize(spec, opt, std::cout, std::cerr);
    if (*density) return cmd_density(spec, opt, parse_point(), std::cout, std::cerr);
    if (*check) return cmd_check_identity(spec, opt, std::cout, std::cerr);
    if (*grid) return cmd_grid(spec, opt, std::cout, std::cerr);
    if (*mc) return cmd_mc(spec, opt, parse_point(), std::cout, std::cerr);
    if (*toric) return cmd_toric_data(spec, opt, std::cout, std::cerr);
  } catch (const dhm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
