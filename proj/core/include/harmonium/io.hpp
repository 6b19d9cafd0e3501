#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "harmonium/entropy.hpp"
#include "harmonium/observables.hpp"

namespace harmonium::io {

/// Decimal, 17 significant digits, '.' radix.
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Comma-separated, LF line endings.
void write_csv(std::ostream& os, const Table& t);
std::string to_csv(const Table& t);
void write_file(const std::filesystem::path& path, const std::string& content);
Table read_csv(std::istream& is);
Table read_csv_file(const std::filesystem::path& path);

Table profile_table(const observables::DensityProfile& p);
Table profile_table(const std::vector<double>& grid, const std::vector<double>& values);
Table surface_table(const entropy::Surface& s);
Table scan_table(const std::vector<entropy::ScanRow>& rows);

/// Trapezoid 2 pi int value r dr of an r,value table.
double table_integral(const Table& t);

}  // namespace harmonium::io
