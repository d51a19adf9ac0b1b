#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pcdpe/geometry.hpp"

namespace pcdpe {

// Delimited numeric text: one point per row (whitespace or comma separated),
// '#' comment lines and an optional non-numeric header row are skipped.
struct PointTable {
  std::vector<std::vector<double>> rows;
  int columns = 0;
};

PointTable read_point_table(std::istream& in, const std::string& name);
PointTable read_point_table(const std::string& path);

std::vector<Point> read_points(const std::string& path);

void write_points(std::ostream& out, std::span<const Point> pts);
void write_points(const std::string& path, std::span<const Point> pts);

}  // namespace pcdpe
