#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace edd {

struct GeoPoint {
  double latitude;
  double longitude;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace detail

// Base-station geo-location CSV: header with latitude/longitude columns
// (any of "latitude"/"lat" and "longitude"/"lon"/"lng", case-insensitive).
// Malformed rows are rejected with their line number.
inline std::vector<GeoPoint> load_eua(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("eua: cannot open file: " + path);

  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("eua: empty file: " + path);
  auto cols = detail::split_csv_line(header);
  int lat_col = -1, lon_col = -1;
  for (size_t i = 0; i < cols.size(); ++i) {
    std::string c = detail::lower(cols[i]);
    if (c == "latitude" || c == "lat") lat_col = static_cast<int>(i);
    if (c == "longitude" || c == "lon" || c == "lng") lon_col = static_cast<int>(i);
  }
  if (lat_col < 0 || lon_col < 0)
    throw std::runtime_error("eua: header has no latitude/longitude columns: " + header);

  std::vector<GeoPoint> points;
  std::string line;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_csv_line(line);
    if (static_cast<int>(fields.size()) <= std::max(lat_col, lon_col))
      throw std::runtime_error("eua: line " + std::to_string(lineno) + ": too few fields");
    try {
      size_t pos = 0;
      double lat = std::stod(fields[static_cast<size_t>(lat_col)], &pos);
      if (pos != fields[static_cast<size_t>(lat_col)].size()) throw std::invalid_argument("trailing");
      double lon = std::stod(fields[static_cast<size_t>(lon_col)], &pos);
      if (pos != fields[static_cast<size_t>(lon_col)].size()) throw std::invalid_argument("trailing");
      points.push_back({lat, lon});
    } catch (const std::exception&) {
      throw std::runtime_error("eua: line " + std::to_string(lineno) +
                               ": cannot parse coordinates");
    }
  }
  return points;
}

}  // namespace edd
