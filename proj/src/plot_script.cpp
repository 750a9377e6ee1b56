#include "torus_echo/plot_script.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "torus_echo/cli.hpp"
#include "torus_echo/csv.hpp"

namespace torus_echo {

namespace fs = std::filesystem;

namespace {

struct KindName {
  PlotKind kind;
  const char* name;
};

constexpr std::array<KindName, 10> kKindNames{{{PlotKind::Series, "series"},
                                              {PlotKind::Sweep, "sweep"},
                                              {PlotKind::SweepMap, "sweep-map"},
                                              {PlotKind::Overlay, "overlay"},
                                              {PlotKind::Heatmap, "heatmap"},
                                              {PlotKind::Line, "line"},
                                              {PlotKind::Gamma, "gamma"},
                                              {PlotKind::Portrait, "portrait"},
                                              {PlotKind::Diffusion, "diffusion"},
                                              {PlotKind::ClassicalNm, "classical-nm"}}};

// First zeros of J0, where Gamma diverges.
constexpr std::array<double, 4> kJ0Zeros{2.404825557695773, 5.520078110286311,
                                         8.653727912911013, 11.791534439014281};

std::string quoted(const fs::path& p) { return "'" + p.generic_string() + "'"; }

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

// K and dkh ranges of a sweep table (columns K,deltaK_over_hbar,...).
std::pair<Range, Range> sweep_ranges(const fs::path& table) {
  std::ifstream in(table);
  std::string line;
  Range k, dkh;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'K') continue;
    std::istringstream row(line);
    std::string a, b;
    std::getline(row, a, ',');
    std::getline(row, b, ',');
    try {
      k.add(std::stod(a));
      dkh.add(std::stod(b));
    } catch (const std::exception&) {
      continue;
    }
  }
  if (!(k.lo <= k.hi)) throw ConfigError("no data rows in " + table.string());
  return {k, dkh};
}

}  // namespace

PlotKind parse_plot_kind(const std::string& text) {
  for (const auto& entry : kKindNames) {
    if (text == entry.name) return entry.kind;
  }
  throw ConfigError("unknown plot kind '" + text + "'");
}

const char* plot_kind_name(PlotKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "?";
}

void emit_plot_script(PlotKind kind, const std::vector<fs::path>& inputs,
                      const fs::path& script) {
  const std::size_t expected = kind == PlotKind::Overlay ? 2 : 1;
  if (inputs.size() != expected) {
    throw ConfigError(std::string("plot kind '") + plot_kind_name(kind) + "' takes " +
                      std::to_string(expected) + " input file(s)");
  }
  for (const auto& input : inputs) {
    if (!fs::is_regular_file(input)) throw ConfigError("missing input file " + input.string());
  }

  const fs::path dir = script.has_parent_path() ? script.parent_path() : fs::path(".");
  std::vector<fs::path> rel;
  for (const auto& input : inputs) {
    rel.push_back(fs::relative(fs::absolute(input), fs::absolute(dir)));
  }
  fs::path png = script.filename();
  png.replace_extension(".png");

  std::ostringstream gp;
  gp << "# gnuplot script: " << plot_kind_name(kind) << "\n"
     << "set terminal pngcairo size 900,700\n"
     << "set output " << quoted(png) << "\n"
     << "set datafile separator ','\n"
     << "set datafile commentschars '#'\n";

  switch (kind) {
    case PlotKind::Series:
      gp << "set xlabel 't'\nset ylabel '|f(t)|'\nset key autotitle columnhead\n"
         << "plot " << quoted(rel[0]) << " using 1:4 with lines notitle\n";
      break;
    case PlotKind::Sweep:
      gp << "set xlabel 'K'\nset ylabel 'M(T)'\nset key autotitle columnhead\n"
         << "plot " << quoted(rel[0]) << " using 1:6 with linespoints pt 7 notitle\n";
      break;
    case PlotKind::SweepMap:
    case PlotKind::Overlay: {
      const auto [k, dkh] = sweep_ranges(inputs[0]);
      gp << "set xlabel 'K'\nset ylabel 'deltaK/hbar'\nset key autotitle columnhead\n"
         << "set palette rgb 33,13,10\n"
         << "set xrange [" << format_double(k.lo) << ':' << format_double(k.hi) << "]\n"
         << "set yrange [" << format_double(dkh.lo) << ':' << format_double(dkh.hi) << "]\n";
      if (kind == PlotKind::SweepMap) {
        gp << "plot " << quoted(rel[0]) << " using 1:2:6 with image notitle\n";
        break;
      }
      for (double zero : kJ0Zeros) {
        if (zero < dkh.lo || zero > dkh.hi) continue;
        gp << "set arrow from " << format_double(k.lo) << ',' << format_double(zero) << " to "
           << format_double(k.hi) << ',' << format_double(zero) << " nohead dt 2 lc rgb 'white'\n";
      }
      // Gamma is clipped at a ceiling and rescaled onto the K axis.
      gp << "gamma_ceiling = 5.0\n"
         << "kmin = " << format_double(k.lo) << "\nkmax = " << format_double(k.hi) << "\n"
         << "clip(g) = (g > gamma_ceiling || g != g) ? gamma_ceiling : g\n"
         << "plot " << quoted(rel[0]) << " using 1:2:6 with image notitle, \\\n"
         << "     " << quoted(rel[1])
         << " using (kmin + (kmax - kmin) * clip($2) / gamma_ceiling):1 with lines lw 2 "
            "lc rgb 'gray' title 'Gamma(deltaK/hbar)'\n";
      break;
    }
    case PlotKind::Heatmap:
      gp << "set datafile separator ','\nunset key\nset xlabel 'q_0'\nset ylabel 'p_0'\n"
         << "set palette rgb 33,13,10\nset autoscale cbfix\n"
         << "stats " << quoted(rel[0]) << " matrix nooutput\n"
         << "side = STATS_size_x\n"
         << "set xrange [0:1]\nset yrange [0:1]\nset size square\n"
         << "plot " << quoted(rel[0])
         << " matrix using ($1 / side):($2 / side):3 "
            "with image\n";
      break;
    case PlotKind::Line:
      gp << "set xlabel 'q_0'\nset ylabel 'M_p'\nset key autotitle columnhead\n"
         << "plot " << quoted(rel[0]) << " using 1:3 with linespoints pt 7 notitle\n";
      break;
    case PlotKind::Gamma:
      gp << "set xlabel 'deltaK/hbar'\nset ylabel 'Gamma'\nset key autotitle columnhead\n"
         << "set yrange [0:8]\n"
         << "plot " << quoted(rel[0]) << " using 1:2 with lines notitle\n";
      break;
    case PlotKind::Portrait:
      gp << "set xlabel 'x'\nset ylabel 'p'\nset key autotitle columnhead\n"
         << "set xrange [0:1]\nset yrange [0:1]\nset size square\n"
         << "plot " << quoted(rel[0]) << " using 1:2 with dots lc rgb 'black' notitle\n";
      break;
    case PlotKind::Diffusion:
      gp << "set xlabel 'K'\nset ylabel 'D'\nset key autotitle columnhead\n"
         << "plot " << quoted(rel[0]) << " using 1:3 with linespoints pt 7 notitle\n";
      break;
    case PlotKind::ClassicalNm:
      gp << "set xlabel 'K'\nset ylabel 'M~/T'\nset key autotitle columnhead\n"
         << "plot " << quoted(rel[0]) << " using 1:($3/$2) with linespoints pt 7 notitle\n";
      break;
  }

  std::ofstream out(script);
  if (!out) throw std::runtime_error("cannot write " + script.string());
  out << gp.str();
}

}  // namespace torus_echo
