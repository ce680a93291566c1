/*
 * Copyright 2026 The polyent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef POLYENT_SERIALIZE_HPP_
#define POLYENT_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "polyent/concurrence.hpp"
#include "polyent/polygamy.hpp"
#include "polyent/state.hpp"

namespace polyent {

// State files:
//   ket:     {"dims": [int], "re": [float], "im": [float]}
//   density: {"dims": [int], "re": [[float]], "im": [[float]]}
// Readers throw std::invalid_argument on schema violations.
nlohmann::json to_json(const Ket& psi);
nlohmann::json to_json(const DensityMatrix& rho);
// {"d1", "d2", "terms": [[float]], "tau"}
nlohmann::json to_json(const TauReport& report);

Ket ket_from_json(const nlohmann::json& j);
DensityMatrix density_from_json(const nlohmann::json& j);

// True when "re" is an array of arrays.
bool is_density_json(const nlohmann::json& j);

// 17 significant digits, '.' separator, independent of the global locale.
std::string format_double(double x);

// "2x3x4"
std::string dims_label(const Dims& dims);

// state_id,mode,n,dims,focus,lhs_sq,rhs_sq_sum,slack,rhs_<k>...
std::string polygamy_csv_header(const PolygamyReport& shape);
std::string polygamy_csv_row(std::string_view state_id, const PolygamyReport& report);

}  // namespace polyent

#endif  // POLYENT_SERIALIZE_HPP_
