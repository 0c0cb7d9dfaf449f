//------------------------------------------------------------------------------
//
//   Copyright 2026 The esq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "esq/dist_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace esq {

std::string format_number(double v, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, v);
  return buf;
}

namespace {

std::vector<double> as_doubles(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("missing array field ") + key);
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number())
      throw std::invalid_argument(std::string("non-numeric entry in ") + key);
    out.push_back(v.get<double>());
  }
  return out;
}

struct CsvRows {
  std::vector<double> xs, vs;
};

CsvRows parse_csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,value", 0) != 0)
    throw std::invalid_argument("missing csv header x,value");
  CsvRows rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed csv row");
    try {
      rows.xs.push_back(std::stod(line.substr(0, comma)));
      rows.vs.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed csv row");
    }
  }
  return rows;
}

std::string array_to_json(const std::vector<double>& v, int sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_number(v[i], sig);
  }
  out += ']';
  return out;
}

}  // namespace

AnyDist parse_dist_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid json: ") + e.what());
  }
  if (j.contains("points")) {
    DiscreteDist d{as_doubles(j, "points"), as_doubles(j, "probs")};
    validate(d);
    return d;
  }
  if (j.contains("lo")) {
    GriddedDensity d;
    if (!j["lo"].is_number() || !j.contains("hi") || !j["hi"].is_number())
      throw std::invalid_argument("missing grid bounds");
    d.lo = j["lo"].get<double>();
    d.hi = j["hi"].get<double>();
    d.values = as_doubles(j, "values");
    if (j.contains("n") &&
        j["n"].get<long long>() != static_cast<long long>(d.values.size()))
      throw std::invalid_argument("field n disagrees with values length");
    validate(d);
    return d;
  }
  throw std::invalid_argument("unrecognized distribution schema");
}

DiscreteDist parse_discrete_csv(const std::string& text) {
  CsvRows rows = parse_csv_rows(text);
  DiscreteDist d{std::move(rows.xs), std::move(rows.vs)};
  validate(d);
  return d;
}

GriddedDensity parse_gridded_csv(const std::string& text) {
  CsvRows rows = parse_csv_rows(text);
  if (rows.xs.size() < 3) throw std::invalid_argument("grid too small");
  GriddedDensity d;
  d.lo = rows.xs.front();
  d.hi = rows.xs.back();
  d.values = std::move(rows.vs);
  for (std::size_t i = 0; i < rows.xs.size(); ++i)
    if (std::abs(rows.xs[i] - d.x(static_cast<int>(i))) >
        1e-9 * std::max(1.0, std::abs(d.hi - d.lo)) + 1e-12)
      throw std::invalid_argument("non-uniform grid");
  validate(d);
  return d;
}

AnyDist read_dist_file(const std::string& path, bool csv_as_gridded) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("unreadable input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool is_csv = path.size() > 4 && path.rfind(".csv") == path.size() - 4;
  if (!is_csv) return parse_dist_json(text);
  if (csv_as_gridded) return parse_gridded_csv(text);
  return parse_discrete_csv(text);
}

std::string to_json(const DiscreteDist& d, int sig) {
  return "{\"points\":" + array_to_json(d.points, sig) +
         ",\"probs\":" + array_to_json(d.probs, sig) + "}";
}

std::string to_json(const GriddedDensity& d, int sig) {
  return "{\"lo\":" + format_number(d.lo, sig) +
         ",\"hi\":" + format_number(d.hi, sig) +
         ",\"n\":" + std::to_string(d.n()) +
         ",\"values\":" + array_to_json(d.values, sig) + "}";
}

std::string to_csv(const DiscreteDist& d, int sig) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < d.points.size(); ++i)
    out += format_number(d.points[i], sig) + "," +
           format_number(d.probs[i], sig) + "\n";
  return out;
}

std::string to_csv(const GriddedDensity& d, int sig) {
  std::string out = "x,value\n";
  for (int i = 0; i < d.n(); ++i)
    out += format_number(d.x(i), sig) + "," +
           format_number(d.values[static_cast<std::size_t>(i)], sig) + "\n";
  return out;
}

}  // namespace esq
