#include "comet/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace comet {

int CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (t.header.empty()) {
      t.header = std::move(cells);
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 40.0;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;
  double oy;  // vertical offset of the panel

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); }
  double py(double y) const {
    return oy + kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  }
};

Frame fit(const std::vector<double>& xs, const std::vector<double>& ys, double oy) {
  Frame f{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(), oy};
  for (double x : xs) f.x0 = std::min(f.x0, x), f.x1 = std::max(f.x1, x);
  for (double y : ys) f.y0 = std::min(f.y0, y), f.y1 = std::max(f.y1, y);
  if (xs.empty()) f.x0 = 0, f.x1 = 1;
  if (ys.empty()) f.y0 = 0, f.y1 = 1;
  if (f.x1 - f.x0 < 1e-9) f.x0 -= 0.5, f.x1 += 0.5;
  if (f.y1 - f.y0 < 1e-9) f.y0 -= 0.5, f.y1 += 0.5;
  return f;
}

void axes(std::ostringstream& out, const Frame& f, const std::string& title) {
  out << "<rect x='" << kMargin << "' y='" << num(f.oy + kMargin) << "' width='"
      << kWidth - 2 * kMargin << "' height='" << kHeight - 2 * kMargin
      << "' fill='none' stroke='#888'/>\n";
  out << "<text x='" << kMargin << "' y='" << num(f.oy + kMargin - 10) << "' font-size='14'>"
      << title << "</text>\n";
  out << "<text x='" << kMargin << "' y='" << num(f.oy + kHeight - kMargin + 15)
      << "' font-size='10'>" << num(f.x0) << "</text>\n";
  out << "<text x='" << kWidth - kMargin - 30 << "' y='" << num(f.oy + kHeight - kMargin + 15)
      << "' font-size='10'>" << num(f.x1) << "</text>\n";
  out << "<text x='2' y='" << num(f.oy + kHeight - kMargin) << "' font-size='10'>" << num(f.y0)
      << "</text>\n";
  out << "<text x='2' y='" << num(f.oy + kMargin + 10) << "' font-size='10'>" << num(f.y1)
      << "</text>\n";
}

std::string wrap_svg(const std::string& body, double height) {
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << height
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
      << body << "</svg>\n";
  return out.str();
}

std::string trajectory_body(const CsvTable& t, double oy) {
  const int cx = t.column("x"), cy = t.column("y"), cf = t.column("frozen");
  if (cx < 0 || cy < 0) throw std::runtime_error("trajectory table needs x and y columns");
  std::vector<double> xs, ys;
  for (const auto& r : t.rows) {
    xs.push_back(std::stod(r.at(cx)));
    ys.push_back(std::stod(r.at(cy)));
  }
  Frame f = fit(xs, ys, oy);
  // equal aspect is not enforced; lateral motion is small next to corridor length
  std::ostringstream out;
  axes(out, f, "robot trajectory (x, y)");
  out << "<polyline fill='none' stroke='" << kColors[0] << "' stroke-width='2' points='";
  for (std::size_t i = 0; i < xs.size(); ++i) out << num(f.px(xs[i])) << ',' << num(f.py(ys[i])) << ' ';
  out << "'/>\n";
  for (std::size_t i = 0; cf >= 0 && i < xs.size(); ++i) {
    if (t.rows[i].at(cf) == "1") {
      out << "<circle cx='" << num(f.px(xs[i])) << "' cy='" << num(f.py(ys[i]))
          << "' r='3' fill='" << kColors[1] << "'/>\n";
    }
  }
  return out.str();
}

std::string metrics_body(const CsvTable& t, double oy, double& used) {
  const int cp = t.column("planner"), cc = t.column("count");
  if (cp < 0 || cc < 0) throw std::runtime_error("cells table needs planner and count columns");
  const char* const metrics[] = {"freezing_rate", "avg_deviation_deg", "normalized_path_length"};
  std::ostringstream out;
  used = 0.0;
  for (const char* metric : metrics) {
    const int cm = t.column(metric);
    if (cm < 0) continue;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::vector<std::string> order;
    std::vector<double> xs, ys;
    for (const auto& r : t.rows) {
      const auto& name = r.at(cp);
      if (!series.count(name)) order.push_back(name);
      const double x = std::stod(r.at(cc)), y = std::stod(r.at(cm));
      series[name].push_back({x, y});
      xs.push_back(x);
      ys.push_back(y);
    }
    Frame f = fit(xs, ys, oy + used);
    axes(out, f, std::string(metric) + " vs pedestrians");
    for (std::size_t k = 0; k < order.size(); ++k) {
      const char* color = kColors[k % std::size(kColors)];
      out << "<polyline fill='none' stroke='" << color << "' stroke-width='2' points='";
      for (auto [x, y] : series[order[k]]) out << num(f.px(x)) << ',' << num(f.py(y)) << ' ';
      out << "'/>\n";
      out << "<text x='" << num(kWidth - kMargin - 90) << "' y='"
          << num(f.oy + kMargin + 15 + 14 * static_cast<double>(k)) << "' font-size='12' fill='"
          << color << "'>" << order[k] << "</text>\n";
    }
    used += kHeight;
  }
  return out.str();
}

}  // namespace

std::string trajectory_svg(const CsvTable& trajectory) {
  return wrap_svg(trajectory_body(trajectory, 0.0), kHeight);
}

std::string metrics_svg(const CsvTable& cells) {
  double used = 0.0;
  const auto body = metrics_body(cells, 0.0, used);
  return wrap_svg(body, std::max(used, kHeight));
}

void plot_directory(const std::filesystem::path& in_dir, const std::filesystem::path& out_file) {
  const auto traj = in_dir / "trajectory.csv";
  const auto cells = in_dir / "cells.csv";
  const bool has_traj = std::filesystem::exists(traj);
  const bool has_cells = std::filesystem::exists(cells);
  if (!has_traj && !has_cells) {
    throw std::runtime_error("no trajectory.csv or cells.csv in " + in_dir.string());
  }
  std::string body;
  double height = 0.0;
  if (has_traj) {
    body += trajectory_body(read_csv(traj), height);
    height += kHeight;
  }
  if (has_cells) {
    double used = 0.0;
    body += metrics_body(read_csv(cells), height, used);
    height += used;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot write " + out_file.string());
  out << wrap_svg(body, height);
}

}  // namespace comet
