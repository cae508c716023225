#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dhm/gls.hpp"
#include "dhm/mc_oracle.hpp"
#include "dhm/toric.hpp"

namespace dhm::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const NonGenericPolarization& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

PolarizingVector effective_eta(const ProblemSpec& spec, const Options& opt, std::size_t dim) {
  const auto& eta = opt.eta ? opt.eta : spec.eta;
  // A circle subtorus has a canonical polarization when none of its own is given.
  if (dim == 1 && (!eta || eta->size() != 1) && (opt.subtorus || spec.subtorus)) return PolarizingVector{1};
  if (!eta) throw Error("no polarizing vector: pass --eta or set \"eta\" in the problem file");
  if (eta->size() != dim) throw Error("polarizing vector must have " + std::to_string(dim) + " entries");
  return PolarizingVector(*eta);
}

std::optional<IntegerMatrix> effective_subtorus(const ProblemSpec& spec, const Options& opt) {
  return opt.subtorus ? opt.subtorus : spec.subtorus;
}

// Fixed-point data from the spec, restricted to the subtorus when one is given.
std::vector<FixedPointDatum> source_data(const ProblemSpec& spec, const Options& opt) {
  std::vector<FixedPointDatum> data =
      spec.fixed_points ? *spec.fixed_points : vertex_data(*spec.polytope).vertex_data;
  const auto sub = effective_subtorus(spec, opt);
  if (!sub) return data;
  if (sub->rows() != spec.torus_dim) throw Error("subtorus generators must have torus_dim entries");
  std::vector<FixedPointDatum> restricted;
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto r = restrict_to_subtorus(data[i], *sub);
    if (!r) {
      throw Error("fixed point #" + std::to_string(i) +
                  " is not isolated for the subtorus (a weight restricts to zero)");
    }
    restricted.push_back(std::move(*r));
  }
  return restricted;
}

std::size_t data_dim(const ProblemSpec& spec, const Options& opt) {
  const auto sub = effective_subtorus(spec, opt);
  return sub ? sub->cols() : spec.torus_dim;
}

DHMeasure build_measure(const ProblemSpec& spec, const Options& opt, const std::vector<FixedPointDatum>& data) {
  DHMeasure m = assemble(data, effective_eta(spec, opt, data_dim(spec, opt)));
  if (opt.flip_sign) {
    if (*opt.flip_sign >= m.summands.size()) throw Error("--flip-sign index out of range");
    m = m.with_flipped_sign(*opt.flip_sign);
  }
  return m;
}

// Evaluates fn(i) for i in [0, n) on worker threads; results by index.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, std::size_t threads, Fn fn) {
  std::vector<R> results(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) results[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

Grid default_grid(const ProblemSpec& spec, const Options& opt) {
  if (opt.grid) return *opt.grid;
  // Bounding box of the (projected) polytope, widened by 1.
  const VPolytope vp = vertices(*spec.polytope);
  const auto sub = effective_subtorus(spec, opt);
  std::vector<RationalVector> pts;
  for (const auto& v : vp.vertices) pts.push_back(sub ? sub->transpose() * v : v);
  Grid g;
  if (opt.grid_step) g.step = *opt.grid_step;
  const std::size_t d = data_dim(spec, opt);
  for (std::size_t i = 0; i < d; ++i) {
    Rational lo = pts.front()[i], hi = pts.front()[i];
    for (const auto& p : pts) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    g.bounds.emplace_back(lo - 1, hi + 1);
  }
  return g;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, std::size_t dim, const std::vector<RationalVector>& pts,
               const std::vector<DensityValue>& values) {
  for (std::size_t i = 0; i < dim; ++i) os << 'x' << (i + 1) << ',';
  os << "density,regular\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t i = 0; i < dim; ++i) os << to_string(pts[k][i]) << ',';
    if (values[k].regular) {
      os << to_string(values[k].value) << ",1\n";
    } else {
      os << ",0\n";
    }
  }
}

std::string group_path(const std::string& output, std::size_t k) {
  const std::string suffix = ".group" + std::to_string(k);
  const std::size_t slash = output.find_last_of('/');
  const std::size_t dot = output.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return output + suffix + ".csv";
  return output.substr(0, dot) + suffix + output.substr(dot);
}

}  // namespace

std::vector<RationalVector> Grid::points() const {
  if (step <= 0) throw Error("grid step must be positive");
  std::vector<std::vector<Rational>> axes;
  for (const auto& [lo, hi] : bounds) {
    std::vector<Rational> ax;
    for (Rational x = lo; x <= hi; x += step) ax.push_back(x);
    if (ax.empty()) return {};
    axes.push_back(std::move(ax));
  }
  std::vector<RationalVector> out;
  if (axes.empty()) return out;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    RationalVector p(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) p[i] = axes[i][idx[i]];
    out.push_back(std::move(p));
    std::size_t i = axes.size();
    while (i > 0 && ++idx[i - 1] == axes[i - 1].size()) {
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

IntegerVector parse_integer_list(std::string_view text) {
  std::vector<Integer> v;
  for (std::string_view part : split(text, ',')) {
    const Rational q = parse_rational(part);
    if (q.get_den() != 1) throw Error("expected integers in '" + std::string(text) + "'");
    v.push_back(q.get_num());
  }
  return IntegerVector(std::move(v));
}

IntegerMatrix parse_columns(std::string_view text, std::size_t rows) {
  std::vector<IntegerVector> cols;
  for (std::string_view part : split(text, ';')) cols.push_back(parse_integer_list(part));
  return IntegerMatrix::from_columns(rows, cols);
}

std::vector<std::pair<Rational, Rational>> parse_bounds(std::string_view text, std::size_t dim) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::string_view axis : split(text, ';')) {
    const auto lohi = split(axis, ',');
    if (lohi.size() != 2) throw Error("bounds must look like LO,HI or LO,HI;LO,HI");
    out.emplace_back(parse_rational(lohi[0]), parse_rational(lohi[1]));
  }
  if (out.size() == 1 && dim > 1) out.resize(dim, out.front());
  if (out.size() != dim) throw Error("bounds given for " + std::to_string(out.size()) + " axes, need " + std::to_string(dim));
  return out;
}

int cmd_polarize(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = source_data(spec, opt);
    const std::size_t d = data_dim(spec, opt);
    if (data.empty()) return static_cast<int>(kOk);
    const PolarizingVector eta = effective_eta(spec, opt, d);
    std::ostringstream report;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const PolarizedWeights pw = polarize(data[i].weights, eta);
      report << "fixed point " << i << ": moment " << data[i].moment_value << " columns";
      for (const auto& c : pw.columns.columns()) report << ' ' << c;
      report << " flips " << pw.flip_count << " sign " << sign_char(pw.sign) << "\n";
    }
    out << report.str();
    return static_cast<int>(kOk);
  });
}

int cmd_density(const ProblemSpec& spec, const Options& opt, const RationalVector& point, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const auto data = source_data(spec, opt);
    const DHMeasure m = build_measure(spec, opt, data);
    if (point.size() != m.torus_dim) throw Error("point must have " + std::to_string(m.torus_dim) + " coordinates");
    const DensityValue v = eval_density(m, point);
    if (!v.regular) {
      out << "WALL\n";
      return static_cast<int>(opt.strict ? kWall : kOk);
    }
    out << to_string(v.value) << "\n";
    return static_cast<int>(kOk);
  });
}

SweepSummary run_identity_sweep(const ProblemSpec& spec, const Options& opt) {
  if (!spec.polytope) throw Error("check-identity needs a \"polytope\" in the problem file");
  const auto sub = effective_subtorus(spec, opt);
  if (!sub && !vertex_data(*spec.polytope).unimodular) {
    throw Error("polytope has non-unimodular vertex cones; the full-torus identity only holds for "
                "unimodular input (use --subtorus)");
  }
  const auto data = source_data(spec, opt);
  const DHMeasure m = build_measure(spec, opt, data);
  const std::vector<RationalVector> pts = default_grid(spec, opt).points();

  struct Outcome {
    bool skipped = false;
    bool mismatch = false;
  };
  const auto outcomes = parallel_map<Outcome>(pts.size(), opt.threads, [&](std::size_t k) {
    const DensityValue g = eval_density(m, pts[k]);
    if (!g.regular) return Outcome{true, false};
    const DensityValue o =
        sub ? oracle_density_subtorus(*spec.polytope, *sub, pts[k]) : oracle_density_full(*spec.polytope, pts[k]);
    if (!o.regular) return Outcome{true, false};
    return Outcome{false, g.value != o.value};
  });

  SweepSummary s;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (outcomes[k].skipped) {
      ++s.skipped;
      continue;
    }
    ++s.checked;
    if (outcomes[k].mismatch) {
      ++s.mismatches;
      if (s.mismatch_points.size() < 5) s.mismatch_points.push_back(pts[k]);
    }
  }
  return s;
}

int cmd_check_identity(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SweepSummary s = run_identity_sweep(spec, opt);
    out << "checked " << s.checked << "\n"
        << "skipped " << s.skipped << "\n"
        << "mismatches " << s.mismatches << "\n";
    for (const auto& p : s.mismatch_points) out << "mismatch at " << p << "\n";
    return static_cast<int>(s.mismatches == 0 ? kOk : kMismatch);
  });
}

int cmd_grid(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opt.grid) throw Error("grid needs --bounds");
    const auto data = source_data(spec, opt);
    const DHMeasure m = build_measure(spec, opt, data);
    const std::vector<RationalVector> pts = opt.grid->points();

    auto render = [&](const DHMeasure& measure) {
      const auto values = parallel_map<DensityValue>(pts.size(), opt.threads,
                                                     [&](std::size_t k) { return eval_density(measure, pts[k]); });
      std::ostringstream csv;
      write_csv(csv, m.torus_dim, pts, values);
      return csv.str();
    };
    auto emit = [&](const std::string& path, const std::string& body) {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot write " + path);
      f << body;
    };

    if (!opt.group_eta) {
      const std::string body = render(m);
      if (opt.output) {
        emit(*opt.output, body);
      } else {
        out << body;
      }
      return static_cast<int>(kOk);
    }

    if (!opt.output) throw Error("grouped grids need --output (one file per group)");
    if (opt.group_eta->size() != m.torus_dim) throw Error("--group-eta has wrong dimension");
    const auto groups = group_by_eta(m, data, PolarizingVector(*opt.group_eta));
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const std::string path = group_path(*opt.output, k);
      emit(path, render(m.subset(groups[k].members)));
      out << "group " << k << " label " << to_string(groups[k].label) << " members";
      for (std::size_t i : groups[k].members) out << ' ' << i;
      out << " -> " << path << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_mc(const ProblemSpec& spec, const Options& opt, const RationalVector& point, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    const auto data = source_data(spec, opt);
    const DHMeasure m = build_measure(spec, opt, data);
    if (point.size() != m.torus_dim) throw Error("point must have " + std::to_string(m.torus_dim) + " coordinates");
    const DensityValue exact = eval_density(m, point);
    if (!exact.regular) {
      out << "WALL\n";
      return static_cast<int>(kWall);
    }
    double mean = 0.0, variance = 0.0;
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
      const ConeMeasure& c = m.summands[i];
      MCEstimate e;
      try {
        e = estimate_density(c, point, opt.halfwidth, opt.samples, opt.seed + i);
      } catch (const Error& ex) {
        err << "error: summand " << i << ": " << ex.what() << "\n";
        return static_cast<int>(kWall);
      }
      mean += c.sign() * e.mean;
      variance += e.std_error * e.std_error;
    }
    const double se = std::sqrt(variance);
    const double diff = std::abs(exact.value.get_d() - mean);
    out << "exact " << to_string(exact.value) << "\n"
        << "estimate " << format_double(mean) << "\n"
        << "stderr " << format_double(se) << "\n"
        << "ratio " << (se > 0 ? format_double(diff / se) : (diff == 0 ? std::string("0") : std::string("inf")))
        << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_toric_data(const ProblemSpec& spec, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!spec.polytope) throw Error("toric-data needs a \"polytope\" in the problem file");
    const DelzantData dd = vertex_data(*spec.polytope);
    if (!dd.unimodular) err << "note: polytope has non-unimodular vertex cones\n";
    ProblemSpec result;
    result.torus_dim = spec.torus_dim;
    result.fixed_points = dd.vertex_data;
    result.eta = opt.eta ? opt.eta : spec.eta;
    result.subtorus = effective_subtorus(spec, opt);
    out << print_problem(result);
    return static_cast<int>(kOk);
  });
}

}  // namespace dhm::cli
