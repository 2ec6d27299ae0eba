#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace comet {

/// Comma separated table with `#` comment lines dropped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

/// Robot path from a trajectory table (t, x, y, vx, vy, phi, frozen).
std::string trajectory_svg(const CsvTable& trajectory);

/// One line chart per metric from a cells table, x = pedestrian count.
std::string metrics_svg(const CsvTable& cells);

/// Renders whatever of trajectory.csv and cells.csv exists in `in_dir`
/// into one SVG file. Throws when neither is present.
void plot_directory(const std::filesystem::path& in_dir, const std::filesystem::path& out_file);

}  // namespace comet
