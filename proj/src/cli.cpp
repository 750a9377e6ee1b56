#include "torus_echo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "torus_echo/classical.hpp"
#include "torus_echo/csv.hpp"
#include "torus_echo/echo_engine.hpp"
#include "torus_echo/nm_measures.hpp"
#include "torus_echo/parallel.hpp"
#include "torus_echo/phase_scan.hpp"
#include "torus_echo/plot_script.hpp"
#include "torus_echo/qubit_channel.hpp"
#include "torus_echo/semiclassics.hpp"

namespace torus_echo {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Options shared by every computing subcommand.
struct Common {
  std::string out_dir = ".";
  std::string output;
  int threads = 0;
  std::uint64_t seed = 1;
  bool plot = false;

  int thread_count() const { return threads > 0 ? threads : thread_count_hint(); }
};

// Options that do not change file contents and stay out of the metadata line.
const std::set<std::string> kUnechoed = {"out-dir", "output", "threads", "plot", "help"};

void add_common(CLI::App* sub, Common& c, bool seeded) {
  sub->add_option("--out-dir", c.out_dir, "Output directory");
  sub->add_option("--output", c.output, "Output file name inside --out-dir");
  sub->add_option("--threads", c.threads,
                  "Worker threads (0: TORUS_ECHO_THREADS or hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  if (seeded) sub->add_option("--seed", c.seed, "Random seed");
  sub->add_flag("--plot", c.plot, "Also write a gnuplot script next to the output");
}

struct KGrid {
  double min = 0.5;
  double max = 2.5;
  int points = 0;
  std::vector<double> list;

  void add(CLI::App* sub) {
    auto* lo = sub->add_option("--k-min", min, "Smallest K of an evenly spaced grid");
    auto* hi = sub->add_option("--k-max", max, "Largest K of an evenly spaced grid");
    auto* n = sub->add_option("--k-points", points, "Number of grid points")
                  ->check(CLI::PositiveNumber);
    auto* l = sub->add_option("--k-list", list, "Explicit comma-separated K values")
                  ->delimiter(',');
    l->excludes(lo)->excludes(hi)->excludes(n);
  }

  // Options that did not shape this run's grid.
  std::set<std::string> unused() const {
    if (!list.empty()) return {"k-min", "k-max", "k-points"};
    return {"k-list"};
  }

  std::vector<double> values() const {
    if (!list.empty()) return list;
    if (points < 1) throw ConfigError("give either --k-list or --k-points (with --k-min/--k-max)");
    return linspace(min, max, points);
  }
};

struct DkhGrid {
  double dkh = 2.0;
  double min = 0.0;
  double max = 0.0;
  int points = 0;

  void add(CLI::App* sub) {
    auto* single = sub->add_option("--dkh", dkh, "Perturbation strength deltaK/hbar");
    auto* lo = sub->add_option("--dkh-min", min, "Smallest deltaK/hbar of a grid");
    auto* hi = sub->add_option("--dkh-max", max, "Largest deltaK/hbar of a grid");
    auto* n = sub->add_option("--dkh-points", points, "Number of deltaK/hbar grid points")
                  ->check(CLI::PositiveNumber);
    single->excludes(lo)->excludes(hi)->excludes(n);
  }

  std::set<std::string> unused() const {
    if (points > 0) return {"dkh"};
    return {"dkh-min", "dkh-max", "dkh-points"};
  }

  std::vector<double> values() const {
    if (points > 0) return linspace(min, max, points);
    return {dkh};
  }
};

struct MapOptions {
  std::string map = "sm";
  double k = 0.98;
  std::optional<double> k2;

  void add(CLI::App* sub, bool with_k) {
    sub->add_option("--map", map, "Map family: sm or hm");
    if (with_k) {
      sub->add_option("--k", k, "Kick strength K (K1 for the Harper map)");
      sub->add_option("--k2", k2, "Harper map K2 (default: equal to K)");
    }
  }

  MapFamily family() const { return parse_family(map); }

  MapSpec spec(HilbertDim dim) const {
    if (family() == MapFamily::Standard) return standard_map(dim, k);
    return harper_map(dim, k, k2.value_or(k));
  }

  ClassicalMap classical() const { return {family(), k, k2.value_or(k)}; }
};

// Echo of every captured option, in declaration order: "name=value ...".
std::string metadata(const CLI::App* sub, const std::set<std::string>& unused) {
  std::ostringstream line;
  line << "torus-echo " << sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (kUnechoed.count(name) != 0 || unused.count(name) != 0) continue;
    std::string value;
    if (opt->get_type_size() == 0) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      for (const auto& r : opt->results()) {
        if (!value.empty()) value += ',';
        value += r;
      }
    } else {
      value = opt->get_default_str();
    }
    if (value.empty()) continue;
    line << ' ' << name << '=' << value;
  }
  return line.str();
}

class Outputs {
 public:
  Outputs(const Common& c, std::ostream& out) : common_(c), out_(out) {}

  fs::path path(const std::string& default_name) const {
    fs::path dir(common_.out_dir);
    return dir / (common_.output.empty() ? default_name : common_.output);
  }

  // Writes `text` to `file`, creating the directory as needed.
  void write(const fs::path& file, const std::string& text) {
    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    std::ofstream f(file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + file.string());
    f << text;
    if (!f) throw std::runtime_error("write failed for " + file.string());
    written_.push_back(file);
  }

  void plot(PlotKind kind, const std::vector<fs::path>& inputs) {
    if (!common_.plot) return;
    fs::path script = inputs.front();
    script.replace_extension(".gp");
    emit_plot_script(kind, inputs, script);
    written_.push_back(script);
  }

  void summary(std::chrono::steady_clock::time_point start) const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_ << "wrote ";
    for (std::size_t i = 0; i < written_.size(); ++i) {
      out_ << (i ? ", " : "") << written_[i].generic_string();
    }
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << secs;
    out_ << " (" << s.str() << " s)\n";
  }

 private:
  const Common& common_;
  std::ostream& out_;
  std::vector<fs::path> written_;
};

std::function<void(std::size_t, std::size_t)> progress_to(std::ostream& err, std::string label) {
  return [&err, label = std::move(label)](std::size_t done, std::size_t total) {
    err << label << ": cell " << done << '/' << total << '\n';
  };
}

std::string table_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  return row + '\n';
}

// Adds `--key=value` for config entries not already given on the command
// line, directly after the subcommand token.
std::vector<std::string> merge_config(std::vector<std::string> args,
                                      const std::set<std::string>& subcommands) {
  std::optional<fs::path> config;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      config = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (!config) return rest;

  const auto entries = read_config_file(*config);
  const auto sub_it = std::find_if(rest.begin(), rest.end(),
                                   [&](const std::string& a) { return subcommands.count(a); });
  if (sub_it == rest.end()) return rest;

  std::set<std::string> given;
  for (auto it = sub_it + 1; it != rest.end(); ++it) {
    if (it->rfind("--", 0) != 0) continue;
    given.insert(it->substr(2, it->find('=') == std::string::npos ? std::string::npos
                                                                   : it->find('=') - 2));
  }
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    if (given.count(name)) continue;
    injected.push_back("--" + name + "=" + value);
  }
  rest.insert(sub_it + 1, injected.begin(), injected.end());
  return rest;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::map<std::string, std::string> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": empty key");
    }
    entries[key] = trim(t.substr(eq + 1));
  }
  return entries;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loschmidt-echo non-Markovianity on kicked quantum maps", "torus-echo"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  MapOptions map;
  KGrid kgrid;
  DkhGrid dgrid;
  int n = 256;
  int horizon = 1000;
  std::string kind = "trace";
  double q0 = 0.3;
  double p0 = 0.2;
  int grid_side = 16;
  int blp_pairs = 0;

  auto add_nt = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Hilbert-space dimension N")->check(CLI::Range(2, 1 << 24));
    sub->add_option("--t", horizon, "Number of kicks T")->check(CLI::PositiveNumber);
  };

  auto* fidelity = app.add_subcommand("fidelity", "Fidelity amplitude series f(t)");
  map.add(fidelity, true);
  fidelity->add_option("--dkh", dgrid.dkh, "Perturbation strength deltaK/hbar");
  add_nt(fidelity);
  fidelity->add_option("--kind", kind, "trace or pure")
      ->check(CLI::IsMember({"trace", "pure"}));
  fidelity->add_option("--q0", q0, "Coherent-state center q0 (pure)");
  fidelity->add_option("--p0", p0, "Coherent-state center p0 (pure)");
  fidelity->add_option("--blp-pairs", blp_pairs,
                       "Also estimate the measure from this many sampled qubit pairs")
      ->check(CLI::NonNegativeNumber);
  add_common(fidelity, common, true);

  auto* nm_sweep = app.add_subcommand("nm-sweep", "Mixed-environment measure over a K grid");
  map.add(nm_sweep, false);
  kgrid.add(nm_sweep);
  dgrid.add(nm_sweep);
  add_nt(nm_sweep);
  add_common(nm_sweep, common, false);

  auto* avg_sweep =
      app.add_subcommand("avg-mp-sweep", "Phase-space average of the pure-state measure");
  map.add(avg_sweep, false);
  kgrid.add(avg_sweep);
  dgrid.add(avg_sweep);
  add_nt(avg_sweep);
  avg_sweep->add_option("--grid-side", grid_side, "Coherent-state grid side s")
      ->check(CLI::PositiveNumber);
  add_common(avg_sweep, common, false);

  auto* scan = app.add_subcommand("phase-scan", "Pure-state measure on an s x s grid");
  map.add(scan, true);
  scan->add_option("--dkh", dgrid.dkh, "Perturbation strength deltaK/hbar");
  add_nt(scan);
  scan->add_option("--grid-side", grid_side, "Grid side s")->check(CLI::PositiveNumber);
  add_common(scan, common, false);

  double q_start = 0.0, p_start = 0.0, q_end = 0.5, p_end = 0.5;
  int line_points = 101;
  auto* line = app.add_subcommand("line-scan", "Pure-state measure along a segment");
  map.add(line, true);
  line->add_option("--dkh", dgrid.dkh, "Perturbation strength deltaK/hbar");
  add_nt(line);
  line->add_option("--q-start", q_start, "Segment start q");
  line->add_option("--p-start", p_start, "Segment start p");
  line->add_option("--q-end", q_end, "Segment end q");
  line->add_option("--p-end", p_end, "Segment end p");
  line->add_option("--points", line_points, "Points on the segment, ends included")
      ->check(CLI::Range(2, 1 << 20));
  add_common(line, common, false);

  int orbits = 400;
  int steps = 500;
  auto* portrait = app.add_subcommand("classical-portrait", "Classical phase portrait");
  map.add(portrait, true);
  portrait->add_option("--orbits", orbits, "Number of orbits")->check(CLI::PositiveNumber);
  portrait->add_option("--steps", steps, "Iterations per orbit")->check(CLI::NonNegativeNumber);
  add_common(portrait, common, true);

  int diff_orbits = 4000;
  int diff_horizon = 16000;
  auto* diffusion = app.add_subcommand("diffusion", "Classical momentum diffusion over K");
  map.add(diffusion, false);
  kgrid.add(diffusion);
  diffusion->add_option("--orbits", diff_orbits, "Number of orbits")->check(CLI::PositiveNumber);
  diffusion->add_option("--horizon", diff_horizon, "Iterations per orbit")
      ->check(CLI::PositiveNumber);
  add_common(diffusion, common, true);

  double dk = 1e-3;
  int cnm_side = 32;
  int cnm_horizon = 20000;
  auto* cnm = app.add_subcommand("classical-nm", "Classical analogue of the measure over K");
  map.add(cnm, false);
  kgrid.add(cnm);
  cnm->add_option("--dk", dk, "Classical perturbation dK");
  cnm->add_option("--grid-side", cnm_side, "Initial-condition grid side")
      ->check(CLI::PositiveNumber);
  cnm->add_option("--t", cnm_horizon, "Number of iterations T")->check(CLI::PositiveNumber);
  add_common(cnm, common, false);

  double dkh_max = 12.0;
  int gamma_points = 1200;
  auto* gamma = app.add_subcommand("gamma-curve", "Short-time rate -ln|J0(deltaK/hbar)|");
  gamma->add_option("--dkh-max", dkh_max, "Largest deltaK/hbar");
  gamma->add_option("--points", gamma_points, "Number of points")->check(CLI::Range(2, 1 << 24));
  add_common(gamma, common, false);

  std::vector<double> check_dkh{1.0, 2.0, 3.0};
  auto* short_time =
      app.add_subcommand("short-time-check", "Compare f(1) of the trace fidelity with J0");
  map.add(short_time, true);
  short_time->add_option("--dkh", check_dkh, "Comma-separated deltaK/hbar values")
      ->delimiter(',');
  short_time->add_option("--n", n, "Hilbert-space dimension N")->check(CLI::Range(2, 1 << 24));
  add_common(short_time, common, false);

  std::string plot_kind;
  std::vector<std::string> plot_inputs;
  std::string plot_script;
  auto* plot = app.add_subcommand("plot", "Write a gnuplot script for existing outputs");
  plot->add_option("--kind", plot_kind,
                   "series, sweep, sweep-map, overlay, heatmap, line, gamma, portrait, "
                   "diffusion, classical-nm")
      ->required();
  plot->add_option("--input", plot_inputs, "Input file(s); overlay takes sweep then gamma")
      ->required();
  plot->add_option("--script", plot_script, "Script path")->required();

  std::set<std::string> names;
  for (const CLI::App* sub : app.get_subcommands({})) names.insert(sub->get_name());

  try {
    std::vector<std::string> args = merge_config(raw_args, names);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  const auto start = std::chrono::steady_clock::now();
  Outputs files(common, out);
  const CLI::App* sub = app.get_subcommands().front();
  std::set<std::string> unused;
  if (sub == nm_sweep || sub == avg_sweep || sub == diffusion || sub == cnm) unused = kgrid.unused();
  if (sub == nm_sweep || sub == avg_sweep) unused.merge(dgrid.unused());
  const std::string meta = metadata(sub, unused);

  try {
    if (sub == fidelity) {
      const auto base = map.spec(HilbertDim(n));
      const auto pair = make_pair_dkh(base, dgrid.dkh);
      std::optional<FidelitySeries> series;
      if (kind == "trace") {
        check_matrix_guard(n);
        series = fidelity_trace(pair, horizon, common.thread_count());
      } else {
        series = fidelity_pure(pair, PhasePoint{q0, p0}, horizon);
      }
      std::ostringstream csv;
      write_series_csv(csv, *series, meta);
      const auto path = files.path("fidelity.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::Series, {path});
      const double closed = measure(*series).value;
      err << "measure " << format_double(closed);
      if (blp_pairs > 0) {
        err << ", sampled " << format_double(blp_sampled(*series, blp_pairs, common.seed));
      }
      err << '\n';
    } else if (sub == nm_sweep || sub == avg_sweep) {
      SweepSpec spec;
      spec.family = map.family();
      spec.k_values = kgrid.values();
      spec.dkh_values = dgrid.values();
      spec.n = n;
      spec.horizon = horizon;
      spec.grid_side = grid_side;
      spec.threads = common.thread_count();
      spec.kind = sub == nm_sweep ? SweepKind::Trace : SweepKind::PureAverage;
      spec.progress = progress_to(err, sub->get_name());
      validate(spec);
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "K,deltaK_over_hbar,N,T,kind,value\n";
      if (sub == nm_sweep) {
        for (const auto& row : sweep_mm(spec)) {
          csv << table_row({format_double(row.k), format_double(row.dkh), std::to_string(n),
                            std::to_string(horizon), "trace", format_double(row.result.value)});
        }
      } else {
        for (const auto& row : sweep_avg_mp(spec)) {
          csv << table_row({format_double(row.k), format_double(row.dkh), std::to_string(n),
                            std::to_string(horizon), "pure-avg", format_double(row.value)});
        }
      }
      const auto path = files.path(sub == nm_sweep ? "nm_sweep.csv" : "avg_mp_sweep.csv");
      files.write(path, csv.str());
      files.plot(spec.dkh_values.size() > 1 ? PlotKind::SweepMap : PlotKind::Sweep, {path});
    } else if (sub == scan) {
      SweepSpec spec;
      spec.family = map.family();
      spec.k_values = {map.k};
      spec.dkh_values = {dgrid.dkh};
      spec.n = n;
      spec.horizon = horizon;
      spec.kind = SweepKind::PureGrid;
      spec.grid_side = grid_side;
      spec.threads = common.thread_count();
      spec.progress = progress_to(err, "phase-scan");
      validate(spec);
      const auto grid = scan_phase_space(spec, map.k, dgrid.dkh);
      std::ostringstream csv;
      write_grid_csv(csv, grid, meta);
      std::ostringstream pgm;
      write_grid_pgm(pgm, grid);
      const auto path = files.path("phase_scan.csv");
      files.write(path, csv.str());
      fs::path image = path;
      image.replace_extension(".pgm");
      files.write(image, pgm.str());
      files.plot(PlotKind::Heatmap, {path});
    } else if (sub == line) {
      SweepSpec spec;
      spec.family = map.family();
      spec.k_values = {map.k};
      spec.dkh_values = {dgrid.dkh};
      spec.n = n;
      spec.horizon = horizon;
      spec.kind = SweepKind::PureGrid;
      spec.threads = common.thread_count();
      spec.progress = progress_to(err, "line-scan");
      validate(spec);
      std::vector<PhasePoint> points;
      for (int i = 0; i < line_points; ++i) {
        const double s = static_cast<double>(i) / (line_points - 1);
        points.push_back({q_start + (q_end - q_start) * s, p_start + (p_end - p_start) * s});
      }
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "q0,p0,value\n";
      for (const auto& pt : line_scan(spec, map.k, dgrid.dkh, points)) {
        csv << table_row({format_double(pt.center.q), format_double(pt.center.p),
                          format_double(pt.value)});
      }
      const auto path = files.path("line_scan.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::Line, {path});
    } else if (sub == portrait) {
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "x,p\n";
      for (const auto& pt : phase_portrait(map.classical(), orbits, steps, common.seed)) {
        csv << format_double(pt.x) << ',' << format_double(pt.p) << '\n';
      }
      const auto path = files.path("portrait.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::Portrait, {path});
    } else if (sub == diffusion) {
      const auto ks = kgrid.values();
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "K,horizon,D\n";
      for (std::size_t i = 0; i < ks.size(); ++i) {
        ClassicalMap m = map.classical();
        m.k = m.k2 = ks[i];
        const auto stats =
            diffusion_coefficient(m, diff_orbits, diff_horizon, common.seed, common.thread_count());
        csv << table_row({format_double(ks[i]), std::to_string(diff_horizon),
                          format_double(stats.diffusion)});
        err << "diffusion: cell " << i + 1 << '/' << ks.size() << '\n';
      }
      const auto path = files.path("diffusion.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::Diffusion, {path});
    } else if (sub == cnm) {
      const auto ks = kgrid.values();
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "K,T,value\n";
      for (std::size_t i = 0; i < ks.size(); ++i) {
        ClassicalMap m = map.classical();
        m.k = m.k2 = ks[i];
        const double value = classical_nm_grid(m, dk, cnm_side, cnm_horizon, common.thread_count());
        csv << table_row({format_double(ks[i]), std::to_string(cnm_horizon), format_double(value)});
        err << "classical-nm: cell " << i + 1 << '/' << ks.size() << '\n';
      }
      const auto path = files.path("classical_nm.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::ClassicalNm, {path});
    } else if (sub == gamma) {
      std::ostringstream csv;
      write_gamma_csv(csv, gamma_curve(dkh_max, gamma_points), meta);
      const auto path = files.path("gamma.csv");
      files.write(path, csv.str());
      files.plot(PlotKind::Gamma, {path});
    } else if (sub == short_time) {
      check_matrix_guard(n);
      const auto base = map.spec(HilbertDim(n));
      std::vector<PerturbedPair> pairs;
      for (double d : check_dkh) pairs.push_back(make_pair_dkh(base, d));
      std::ostringstream csv;
      csv << "# " << meta << '\n' << "map,K,dkh,N,measured,predicted,residual\n";
      for (const auto& pair : pairs) {
        const auto c = short_time_check(pair);
        csv << table_row({map.map, format_double(map.k), format_double(pair.dkh()),
                          std::to_string(n), format_double(c.measured),
                          format_double(c.predicted), format_double(c.residual)});
      }
      files.write(files.path("short_time.csv"), csv.str());
    } else if (sub == plot) {
      std::vector<fs::path> inputs(plot_inputs.begin(), plot_inputs.end());
      emit_plot_script(parse_plot_kind(plot_kind), inputs, plot_script);
      out << "wrote " << fs::path(plot_script).generic_string() << '\n';
      return kExitOk;
    }
  } catch (const GuardError& e) {
    err << "error: guard '" << e.guard() << "' exceeded: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid parameter: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  files.summary(start);
  return kExitOk;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace torus_echo
