#pragma once

// Run orchestration: manifests built from config files and command-line
// settings, single experiments with CSV, SVG, and JSON emission, and
// refinement sweeps that tabulate errors across viscosities and increments.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stbspline/errors.hpp"
#include "stbspline/metrics.hpp"
#include "stbspline/oracle.hpp"
#include "stbspline/problems.hpp"
#include "stbspline/stepper.hpp"
#include "stbspline/svg_plot.hpp"
#include "stbspline/version.hpp"

namespace stbs::runio {

// Everything a single run needs. Defaults depend on the problem, so build
// through default_manifest or parse_config rather than direct construction.
struct RunManifest {
  problems::ProblemKind kind = problems::ProblemKind::shock;
  problems::FrontParams front_params{};
  stepper::SolverConfig cfg{};
  std::vector<double> sample_times;
  bool sample_times_set = false;
  std::filesystem::path out_dir = "out";
  bool with_oracle = false;
  bool with_plots = false;
  bool emit_profiles = true;
};

inline RunManifest default_manifest(problems::ProblemKind kind) {
  RunManifest m;
  m.kind = kind;
  m.cfg.viscosity = 0.01;
  m.cfg.h = 0.01;
  m.cfg.dt = 0.01;
  if (kind == problems::ProblemKind::shock) {
    m.cfg.t_start = 1.0;
    m.cfg.t_end = 3.25;
  } else {
    m.cfg.t_start = 0.0;
    m.cfg.t_end = 1.2;
  }
  return m;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\'')))
    return s.substr(1, s.size() - 2);
  return s;
}

inline double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing text");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw config_error("config key \"" + key + "\": \"" + value + "\" is not a number");
  }
}

inline int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  const double r = std::round(v);
  if (std::abs(v - r) > 0.0 || std::abs(r) > 1e9)
    throw config_error("config key \"" + key + "\": \"" + value + "\" is not an integer");
  return static_cast<int>(r);
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw config_error("config key \"" + key + "\": \"" + value + "\" is not a boolean");
}

// Accepts "1.5, 2" as well as "[1.5, 2]"; an empty list is allowed.
inline std::vector<double> parse_number_list(const std::string& key, const std::string& value) {
  std::string body = trim(value);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw config_error("config key \"" + key + "\": unterminated list");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      if (out.empty() && ss.eof()) break;
      throw config_error("config key \"" + key + "\": empty list entry");
    }
    out.push_back(parse_number(key, item));
  }
  return out;
}

inline std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

inline void write_text_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw io_error("cannot open " + p.string() + " for writing");
  f << body;
  f.flush();
  if (!f.good()) throw io_error("failed while writing " + p.string());
}

}  // namespace detail

inline problems::ProblemKind parse_problem_kind(const std::string& value) {
  if (value == "shock") return problems::ProblemKind::shock;
  if (value == "front") return problems::ProblemKind::front;
  throw config_error("unknown problem \"" + value + "\" (expected shock or front)");
}

// Apply one key = value setting. Unknown keys and malformed values raise
// config_error naming the key. The "problem" key is handled by parse_config
// before defaults are chosen and is rejected here.
inline void apply_setting(RunManifest& m, const std::string& key, const std::string& value) {
  using detail::parse_bool;
  using detail::parse_int;
  using detail::parse_number;
  if (key == "problem")
    throw config_error("config key \"problem\" must be handled before other settings");
  else if (key == "nu")
    m.cfg.viscosity = parse_number(key, value);
  else if (key == "h")
    m.cfg.h = parse_number(key, value);
  else if (key == "dt")
    m.cfg.dt = parse_number(key, value);
  else if (key == "t_start")
    m.cfg.t_start = parse_number(key, value);
  else if (key == "t_end")
    m.cfg.t_end = parse_number(key, value);
  else if (key == "inner_iters")
    m.cfg.inner_iterations = parse_int(key, value);
  else if (key == "mode") {
    if (value == "summed")
      m.cfg.mode = stepper::Mode::summed;
    else if (value == "direct")
      m.cfg.mode = stepper::Mode::direct;
    else
      throw config_error("config key \"mode\": expected summed or direct, got \"" + value + "\"");
  } else if (key == "init") {
    if (value == "pde-derivative")
      m.cfg.init = stepper::InitStrategy::pde_derivative;
    else if (value == "symmetric")
      m.cfg.init = stepper::InitStrategy::symmetric;
    else
      throw config_error("config key \"init\": expected pde-derivative or symmetric, got \"" +
                         value + "\"");
  } else if (key == "l2_weighting") {
    if (value == "unweighted")
      m.cfg.l2_weighting = metrics::L2Weighting::unweighted;
    else if (value == "h-weighted")
      m.cfg.l2_weighting = metrics::L2Weighting::h_weighted;
    else
      throw config_error("config key \"l2_weighting\": expected unweighted or h-weighted, got \"" +
                         value + "\"");
  } else if (key == "sample_times") {
    m.sample_times = detail::parse_number_list(key, value);
    m.sample_times_set = true;
  } else if (key == "out")
    m.out_dir = detail::unquote(value);
  else if (key == "oracle")
    m.with_oracle = parse_bool(key, value);
  else if (key == "plots")
    m.with_plots = parse_bool(key, value);
  else if (key == "profiles")
    m.emit_profiles = parse_bool(key, value);
  else if (key == "alpha")
    m.front_params.alpha = parse_number(key, value);
  else if (key == "mu")
    m.front_params.mu = parse_number(key, value);
  else if (key == "gamma")
    m.front_params.gamma = parse_number(key, value);
  else
    throw config_error("unknown config key \"" + key + "\"");
}

// key = value per line, # comments, blank lines ignored. Returns settings in
// file order.
inline std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot read config file " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::unquote(detail::trim(line.substr(eq + 1)));
    if (key.empty())
      throw config_error(path.string() + ":" + std::to_string(lineno) + ": empty key");
    out.push_back({key, value});
  }
  return out;
}

// Sample times must be sorted, deduplicated, and on the run's time grid.
inline void finalize_manifest(RunManifest& m) {
  m.cfg.validate();
  if (!m.sample_times_set) m.sample_times = {m.cfg.t_end};
  std::sort(m.sample_times.begin(), m.sample_times.end());
  m.sample_times.erase(std::unique(m.sample_times.begin(), m.sample_times.end()),
                       m.sample_times.end());
  const int steps = m.cfg.step_count();
  for (double ts : m.sample_times) {
    int k = 0;
    try {
      k = stepper::checked_multiple(ts - m.cfg.t_start, m.cfg.dt, "sample time");
    } catch (const config_error&) {
      throw config_error("config key \"sample_times\": " + detail::fmt_short(ts) +
                         " is not on the time grid");
    }
    if (k > steps)
      throw config_error("config key \"sample_times\": " + detail::fmt_short(ts) +
                         " lies past t_end");
  }
}

// Build a manifest from an optional config file plus command-line settings;
// the latter win. A problem must be named by one of the two sources.
inline RunManifest parse_config(
    const std::optional<std::filesystem::path>& file,
    const std::vector<std::pair<std::string, std::string>>& flag_settings) {
  std::vector<std::pair<std::string, std::string>> file_settings;
  if (file) file_settings = read_config_file(*file);

  std::optional<problems::ProblemKind> kind;
  for (const auto& [k, v] : file_settings)
    if (k == "problem") kind = parse_problem_kind(v);
  for (const auto& [k, v] : flag_settings)
    if (k == "problem") kind = parse_problem_kind(v);
  if (!kind) throw config_error("no problem selected (set problem = shock or front)");

  RunManifest m = default_manifest(*kind);
  for (const auto& [k, v] : file_settings)
    if (k != "problem") apply_setting(m, k, v);
  for (const auto& [k, v] : flag_settings)
    if (k != "problem") apply_setting(m, k, v);
  finalize_manifest(m);
  return m;
}

// Scores for one recorded sample time.
struct SampleScore {
  double time = 0.0;
  int step = 0;
  std::vector<double> x;
  std::vector<double> numeric;
  std::vector<double> exact_values;
  std::vector<double> abs_err;
  metrics::ErrorReport report;
  double l2_unweighted = 0.0;
  double l2_h_weighted = 0.0;
  std::optional<metrics::ErrorReport> oracle_report;
  std::vector<double> oracle_values;
};

struct OutputBundle {
  RunManifest manifest;
  basis::UniformGrid grid;
  std::vector<SampleScore> samples;
  std::vector<std::filesystem::path> files;
  std::filesystem::path metadata_path;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
};

namespace detail {

inline std::string profile_csv(const SampleScore& s, const std::vector<double>& values) {
  std::string out = "x,u_numeric,u_exact,abs_err\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    out += fmt_full(s.x[i]);
    out += ',';
    out += fmt_full(values[i]);
    out += ',';
    out += fmt_full(s.exact_values[i]);
    out += ',';
    out += fmt_full(std::abs(values[i] - s.exact_values[i]));
    out += '\n';
  }
  return out;
}

inline std::string time_token(double t) {
  std::string s = fmt_short(t);
  for (char& c : s)
    if (c == '-') c = 'm';
  return s;
}

inline const char* l2_label(metrics::L2Weighting w) {
  return w == metrics::L2Weighting::unweighted ? "unweighted" : "h-weighted";
}

}  // namespace detail

// Run one experiment end to end and write every requested artifact. The
// metadata file is always produced and lists the rest.
inline OutputBundle run_experiment(const RunManifest& manifest) {
  const auto t_begin = std::chrono::steady_clock::now();
  RunManifest m = manifest;
  finalize_manifest(m);

  const problems::ProblemSpec problem =
      problems::make_problem(m.kind, m.cfg.viscosity, m.front_params, m.cfg.t_start);
  const int cells = stepper::checked_multiple(problem.b - problem.a, m.cfg.h, "the domain length");
  const basis::UniformGrid grid(problem.a, m.cfg.h, cells, 3);

  const std::vector<stepper::TimedProfile> profiles = stepper::run(problem, m.cfg, m.sample_times);

  std::vector<oracle::FdProfile> fd;
  if (m.with_oracle) fd = oracle::cn_fd_run(problem, m.cfg.h, m.cfg.dt, m.cfg.t_end);

  OutputBundle bundle;
  bundle.manifest = m;
  bundle.grid = grid;
  for (const stepper::TimedProfile& p : profiles) {
    SampleScore s;
    s.time = p.time;
    s.step = p.step;
    s.numeric = p.values;
    s.x.resize(p.values.size());
    s.exact_values.resize(p.values.size());
    s.abs_err.resize(p.values.size());
    for (int i = 0; i <= grid.interior_count; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      s.x[k] = grid.node(i);
      s.exact_values[k] = problem.exact(s.x[k], p.time);
      s.abs_err[k] = std::abs(s.numeric[k] - s.exact_values[k]);
    }
    s.report = metrics::score(s.numeric, s.exact_values, grid, m.cfg.l2_weighting, p.time);
    s.l2_unweighted =
        metrics::l2_norm(s.numeric, s.exact_values, grid.spacing, metrics::L2Weighting::unweighted);
    s.l2_h_weighted =
        metrics::l2_norm(s.numeric, s.exact_values, grid.spacing, metrics::L2Weighting::h_weighted);
    if (m.with_oracle) {
      s.oracle_values = fd[static_cast<std::size_t>(p.step)].values;
      s.oracle_report =
          metrics::score(s.oracle_values, s.exact_values, grid, m.cfg.l2_weighting, p.time);
    }
    bundle.samples.push_back(std::move(s));
  }

  std::error_code ec;
  std::filesystem::create_directories(m.out_dir, ec);
  if (ec) throw io_error("cannot create output directory " + m.out_dir.string());

  const auto emit = [&bundle](const std::filesystem::path& p, const std::string& body) {
    detail::write_text_file(p, body);
    bundle.files.push_back(p);
  };

  if (m.emit_profiles) {
    for (const SampleScore& s : bundle.samples) {
      emit(m.out_dir / ("profile_t" + detail::time_token(s.time) + ".csv"),
           detail::profile_csv(s, s.numeric));
      if (s.oracle_report)
        emit(m.out_dir / ("oracle_t" + detail::time_token(s.time) + ".csv"),
             detail::profile_csv(s, s.oracle_values));
    }
  }

  {
    std::string csv =
        "problem,nu,h,dt,mode,init,inner_iters,time,linf,l2_unweighted,l2_h_weighted,peak_value,"
        "peak_x\n";
    std::string txt;
    txt += "problem " + std::string(problems::kind_name(m.kind)) +
           "   nu=" + detail::fmt_short(m.cfg.viscosity) + "   h=" + detail::fmt_short(m.cfg.h) +
           "   dt=" + detail::fmt_short(m.cfg.dt) + "   mode=" + stepper::mode_name(m.cfg.mode) +
           "   init=" + stepper::init_name(m.cfg.init) +
           "   inner=" + std::to_string(m.cfg.inner_iterations) + "\n";
    txt += "reported L2 weighting: " + std::string(detail::l2_label(m.cfg.l2_weighting)) + "\n\n";
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-14s %-14s %-14s %-12s %-10s\n", "time", "Linf",
                  "L2(unw)", "L2(h-w)", "peak", "peak_x");
    txt += line;
    for (const SampleScore& s : bundle.samples) {
      csv += std::string(problems::kind_name(m.kind)) + "," + detail::fmt_full(m.cfg.viscosity) +
             "," + detail::fmt_full(m.cfg.h) + "," + detail::fmt_full(m.cfg.dt) + "," +
             stepper::mode_name(m.cfg.mode) + "," + stepper::init_name(m.cfg.init) + "," +
             std::to_string(m.cfg.inner_iterations) + "," + detail::fmt_full(s.time) + "," +
             detail::fmt_full(s.report.linf) + "," + detail::fmt_full(s.l2_unweighted) + "," +
             detail::fmt_full(s.l2_h_weighted) + "," + detail::fmt_full(s.report.peak_value) +
             "," + detail::fmt_full(s.report.peak_location) + "\n";
      std::snprintf(line, sizeof(line), "%-10.6g %-14.6g %-14.6g %-14.6g %-12.6g %-10.6g\n",
                    s.time, s.report.linf, s.l2_unweighted, s.l2_h_weighted, s.report.peak_value,
                    s.report.peak_location);
      txt += line;
      if (s.oracle_report) {
        std::snprintf(line, sizeof(line), "%-10s %-14.6g %-14.6g %-14s %-12.6g %-10.6g\n",
                      "  oracle", s.oracle_report->linf,
                      metrics::l2_norm(s.oracle_values, s.exact_values, grid.spacing,
                                       metrics::L2Weighting::unweighted),
                      "", s.oracle_report->peak_value, s.oracle_report->peak_location);
        txt += line;
      }
    }
    emit(m.out_dir / "summary.csv", csv);
    emit(m.out_dir / "summary.txt", txt);
  }

  if (m.with_plots) {
    if (bundle.samples.empty()) {
      bundle.notes.push_back("plot omitted: no sample times recorded");
    } else {
      static const char* palette[] = {"#1f6fb2", "#d1495b", "#3f8f4a", "#8f5fb2", "#b27f1f"};
      std::vector<plot::Curve> top;
      std::vector<plot::Curve> bottom;
      std::size_t ci = 0;
      for (const SampleScore& s : bundle.samples) {
        const std::string color = palette[ci++ % 5];
        top.push_back({"t=" + detail::fmt_short(s.time), color, false, s.x, s.numeric});
        top.push_back({"exact t=" + detail::fmt_short(s.time), "#777777", true, s.x,
                       s.exact_values});
        bottom.push_back({"t=" + detail::fmt_short(s.time), color, false, s.x, s.abs_err});
      }
      const std::filesystem::path fig = m.out_dir / "figure.svg";
      plot::write_figure(fig.string(),
                         std::string(problems::kind_name(m.kind)) +
                             ", nu=" + detail::fmt_short(m.cfg.viscosity) +
                             ", h=" + detail::fmt_short(m.cfg.h) +
                             ", dt=" + detail::fmt_short(m.cfg.dt),
                         top, bottom);
      bundle.files.push_back(fig);
    }
  }

  bundle.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();

  nlohmann::ordered_json meta;
  meta["tool"] = {{"name", "stbspline"}, {"version", version_string}};
  nlohmann::ordered_json man;
  man["problem"] = problems::kind_name(m.kind);
  man["nu"] = m.cfg.viscosity;
  man["h"] = m.cfg.h;
  man["dt"] = m.cfg.dt;
  man["t_start"] = m.cfg.t_start;
  man["t_end"] = m.cfg.t_end;
  man["mode"] = stepper::mode_name(m.cfg.mode);
  man["init"] = stepper::init_name(m.cfg.init);
  man["inner_iters"] = m.cfg.inner_iterations;
  man["l2_weighting"] = detail::l2_label(m.cfg.l2_weighting);
  man["sample_times"] = m.sample_times;
  man["out"] = m.out_dir.string();
  man["oracle"] = m.with_oracle;
  man["plots"] = m.with_plots;
  man["profiles"] = m.emit_profiles;
  if (m.kind == problems::ProblemKind::front)
    man["front_params"] = {{"alpha", m.front_params.alpha},
                           {"mu", m.front_params.mu},
                           {"gamma", m.front_params.gamma}};
  meta["manifest"] = man;
  meta["grid"] = {{"origin", grid.origin},
                  {"spacing", grid.spacing},
                  {"interior_count", grid.interior_count},
                  {"ghost_count", grid.ghost_count}};
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const SampleScore& s : bundle.samples) {
    nlohmann::ordered_json row;
    row["time"] = s.time;
    row["step"] = s.step;
    row["linf"] = s.report.linf;
    row["l2"] = s.report.l2;
    row["l2_unweighted"] = s.l2_unweighted;
    row["l2_h_weighted"] = s.l2_h_weighted;
    row["peak_value"] = s.report.peak_value;
    row["peak_x"] = s.report.peak_location;
    if (s.oracle_report) {
      row["oracle_linf"] = s.oracle_report->linf;
      row["oracle_peak_value"] = s.oracle_report->peak_value;
    }
    results.push_back(row);
  }
  meta["results"] = results;
  meta["notes"] = bundle.notes;
  meta["wall_seconds"] = bundle.wall_seconds;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const std::filesystem::path& p : bundle.files) files.push_back(p.filename().string());
  files.push_back("metadata.json");
  meta["files"] = files;

  bundle.metadata_path = m.out_dir / "metadata.json";
  detail::write_text_file(bundle.metadata_path, meta.dump(2) + "\n");
  bundle.files.push_back(bundle.metadata_path);
  return bundle;
}

// A refinement sweep: the cross product of viscosities and h = dt increments,
// each combination run to the same end time and scored there.
struct SweepManifest {
  problems::ProblemKind kind = problems::ProblemKind::shock;
  problems::FrontParams front_params{};
  std::vector<double> viscosities;
  std::vector<double> increments;
  stepper::SolverConfig base;
  std::filesystem::path out_dir = "sweep";
  bool with_plots = false;
};

inline SweepManifest default_sweep(problems::ProblemKind kind) {
  SweepManifest s;
  s.kind = kind;
  s.viscosities = {0.01, 0.005};
  s.increments = {0.01, 0.005, 0.001};
  RunManifest m = default_manifest(kind);
  s.base = m.cfg;
  return s;
}

struct SweepRow {
  double nu = 0.0;
  double increment = 0.0;
  metrics::ErrorReport report;
  double l2_unweighted = 0.0;
  double l2_h_weighted = 0.0;
};

struct SweepResult {
  SweepManifest manifest;
  std::vector<SweepRow> rows;
  std::vector<std::filesystem::path> files;
  double wall_seconds = 0.0;
};

inline SweepResult run_sweep(const SweepManifest& sweep) {
  const auto t_begin = std::chrono::steady_clock::now();
  if (sweep.viscosities.empty() || sweep.increments.empty())
    throw config_error("sweep needs at least one viscosity and one increment");

  SweepResult result;
  result.manifest = sweep;
  for (double nu : sweep.viscosities) {
    for (double inc : sweep.increments) {
      RunManifest m = default_manifest(sweep.kind);
      m.front_params = sweep.front_params;
      m.cfg = sweep.base;
      m.cfg.viscosity = nu;
      m.cfg.h = inc;
      m.cfg.dt = inc;
      m.sample_times = {m.cfg.t_end};
      m.sample_times_set = true;
      m.with_plots = sweep.with_plots;
      m.out_dir = sweep.out_dir / ("nu" + detail::time_token(nu) + "_inc" + detail::time_token(inc));
      const OutputBundle bundle = run_experiment(m);
      const SampleScore& s = bundle.samples.back();
      result.rows.push_back({nu, inc, s.report, s.l2_unweighted, s.l2_h_weighted});
      result.files.insert(result.files.end(), bundle.files.begin(), bundle.files.end());
    }
  }

  std::string csv = "problem,nu,h_dt,time,linf,l2_unweighted,l2_h_weighted,peak_value,peak_x\n";
  std::string txt = "problem " + std::string(problems::kind_name(sweep.kind)) +
                    "   mode=" + stepper::mode_name(sweep.base.mode) +
                    "   init=" + stepper::init_name(sweep.base.init) +
                    "   inner=" + std::to_string(sweep.base.inner_iterations) +
                    "   t_end=" + detail::fmt_short(sweep.base.t_end) + "\n";
  char line[256];
  for (double nu : sweep.viscosities) {
    txt += "\nnu=" + detail::fmt_short(nu) + "\n";
    std::snprintf(line, sizeof(line), "  %-10s %-14s %-14s %-14s %-12s %-10s\n", "h=dt", "Linf",
                  "L2(unw)", "L2(h-w)", "peak", "peak_x");
    txt += line;
    for (const SweepRow& r : result.rows) {
      if (r.nu != nu) continue;
      csv += std::string(problems::kind_name(sweep.kind)) + "," + detail::fmt_full(r.nu) + "," +
             detail::fmt_full(r.increment) + "," + detail::fmt_full(r.report.time) + "," +
             detail::fmt_full(r.report.linf) + "," + detail::fmt_full(r.l2_unweighted) + "," +
             detail::fmt_full(r.l2_h_weighted) + "," + detail::fmt_full(r.report.peak_value) +
             "," + detail::fmt_full(r.report.peak_location) + "\n";
      std::snprintf(line, sizeof(line), "  %-10.6g %-14.6g %-14.6g %-14.6g %-12.6g %-10.6g\n",
                    r.increment, r.report.linf, r.l2_unweighted, r.l2_h_weighted,
                    r.report.peak_value, r.report.peak_location);
      txt += line;
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(sweep.out_dir, ec);
  if (ec) throw io_error("cannot create output directory " + sweep.out_dir.string());
  detail::write_text_file(sweep.out_dir / "summary.csv", csv);
  detail::write_text_file(sweep.out_dir / "summary.txt", txt);
  result.files.push_back(sweep.out_dir / "summary.csv");
  result.files.push_back(sweep.out_dir / "summary.txt");
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
  return result;
}

}  // namespace stbs::runio
