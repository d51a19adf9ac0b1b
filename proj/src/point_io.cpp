#include "pcdpe/point_io.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pcdpe {

namespace {

bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r')) {
      ++p;
    }
    if (p >= end) break;
    double v = 0.0;
    const auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p) return false;
    out.push_back(v);
    p = next;
  }
  return true;
}

}  // namespace

PointTable read_point_table(std::istream& in, const std::string& name) {
  PointTable table;
  std::string line;
  std::vector<double> row;
  int lineno = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!parse_row(line, row) || row.empty()) {
      if (first_data) {
        first_data = false;  // tolerate one header row
        continue;
      }
      throw ParseError(name + ":" + std::to_string(lineno) +
                       ": expected numeric columns");
    }
    first_data = false;
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw ParseError(name + ":" + std::to_string(lineno) +
                         ": non-finite coordinate");
      }
    }
    if (table.columns == 0) {
      table.columns = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != table.columns) {
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(table.columns) + " columns, got " +
                       std::to_string(row.size()));
    }
    table.rows.push_back(row);
  }
  return table;
}

PointTable read_point_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return read_point_table(in, path);
}

std::vector<Point> read_points(const std::string& path) {
  const PointTable table = read_point_table(path);
  if (table.rows.empty()) throw ParseError(path + ": no points");
  if (table.columns != 2) {
    throw ParseError(path + ": expected 2 columns, got " +
                     std::to_string(table.columns));
  }
  std::vector<Point> pts;
  pts.reserve(table.rows.size());
  for (const auto& row : table.rows) pts.push_back({row[0], row[1]});
  return pts;
}

void write_points(std::ostream& out, std::span<const Point> pts) {
  out.precision(17);
  for (const Point& p : pts) out << p.x << '\t' << p.y << '\n';
}

void write_points(const std::string& path, std::span<const Point> pts) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  write_points(out, pts);
}

}  // namespace pcdpe
