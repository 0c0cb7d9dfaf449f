#pragma once
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

#include <string>
#include <variant>

#include "esq/dist.hpp"

// File formats:
//   JSON  {"points":[...],"probs":[...]}            discrete
//   JSON  {"lo":..,"hi":..,"n":..,"values":[...]}   gridded
//   CSV   header "x,value", one row per point/node
// JSON is self-describing; a CSV file is read as discrete unless
// csv_as_gridded is set (the grid must then be uniform).
namespace esq {

using AnyDist = std::variant<DiscreteDist, GriddedDensity>;

/// Fixed-width significant-digit rendering ("%.Ng"); the one number
/// formatter used for all emitted output, so output is byte-stable.
std::string format_number(double v, int sig_digits);

AnyDist parse_dist_json(const std::string& text);
DiscreteDist parse_discrete_csv(const std::string& text);
GriddedDensity parse_gridded_csv(const std::string& text);

/// Load and validate a distribution file, dispatching on extension.
AnyDist read_dist_file(const std::string& path, bool csv_as_gridded = false);

std::string to_json(const DiscreteDist& d, int sig_digits = 17);
std::string to_json(const GriddedDensity& d, int sig_digits = 17);
std::string to_csv(const DiscreteDist& d, int sig_digits = 12);
std::string to_csv(const GriddedDensity& d, int sig_digits = 12);

}  // namespace esq
