#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace torus_echo {

enum class PlotKind {
  Series,     // fidelity CSV: t vs |f|
  Sweep,      // nm-sweep / avg-mp-sweep table: K vs value (one curve per dkh)
  SweepMap,   // 2-D (K, dkh) sweep as a heatmap
  Overlay,    // 2-D sweep with the Gamma(dkh) curve and J0-zero lines on top
  Heatmap,    // phase-scan grid
  Line,       // line-scan: position along the scan vs value
  Gamma,      // gamma-curve
  Portrait,   // classical-portrait point cloud
  Diffusion,  // diffusion table: K vs D
  ClassicalNm // classical-nm table: K vs value / T
};

PlotKind parse_plot_kind(const std::string& text);
const char* plot_kind_name(PlotKind kind);

/// Writes a gnuplot script rendering `inputs` to a PNG next to the script.
/// Inputs are referenced by paths relative to the script directory. The
/// overlay takes the sweep table first and the gamma curve second. Throws
/// ConfigError when an input is missing or the count is wrong.
void emit_plot_script(PlotKind kind, const std::vector<std::filesystem::path>& inputs,
                      const std::filesystem::path& script);

}  // namespace torus_echo
