#include "harmonium/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace harmonium::io {

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty CSV");
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) t.header.push_back(cell);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream rs(line);
    for (std::string cell; std::getline(rs, cell, ',');) row.push_back(std::stod(cell));
    if (row.size() != t.header.size()) throw std::runtime_error("CSV row width does not match header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_csv(in);
}

Table profile_table(const std::vector<double>& grid, const std::vector<double>& values) {
  Table t{{"r", "value"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], values[i]});
  return t;
}

Table profile_table(const observables::DensityProfile& p) { return profile_table(p.grid, p.values); }

Table surface_table(const entropy::Surface& s) {
  Table t{{"x", "y", "value"}, {}};
  for (std::size_t i = 0; i < s.x.size(); ++i)
    for (std::size_t j = 0; j < s.y.size(); ++j) t.rows.push_back({s.x[i], s.y[j], s.values[i * s.y.size() + j]});
  return t;
}

Table scan_table(const std::vector<entropy::ScanRow>& rows) {
  Table t{{"m", "omega", "Z", "entropy"}, {}};
  for (const auto& r : rows) t.rows.push_back({static_cast<double>(r.m), r.omega, r.Z, r.entropy});
  return t;
}

double table_integral(const Table& t) {
  if (t.header.size() < 2) throw std::invalid_argument("table_integral needs r,value columns");
  observables::DensityProfile p;
  for (const auto& row : t.rows) {
    p.grid.push_back(row[0]);
    p.values.push_back(row[1]);
  }
  return p.integral();
}

}  // namespace harmonium::io
