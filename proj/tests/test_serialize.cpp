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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyent/generators.hpp"
#include "polyent/polygamy.hpp"
#include "polyent/serialize.hpp"

namespace polyent {
namespace {

using nlohmann::json;

TEST_CASE("ket JSON round trip") {
  const Ket psi = haar_random_pure({2, 3}, 8);
  const json j = to_json(psi);
  CHECK(j.at("dims") == json::array({2, 3}));
  CHECK_FALSE(is_density_json(j));
  const Ket back = ket_from_json(json::parse(j.dump()));
  CHECK(back == psi);
}

TEST_CASE("density JSON round trip") {
  const DensityMatrix rho = random_mixed_state({2, 2}, 3, 4);
  const json j = to_json(rho);
  CHECK(is_density_json(j));
  const DensityMatrix back = density_from_json(json::parse(j.dump()));
  CHECK(back.dims() == rho.dims());
  CHECK(back.matrix() == rho.matrix());
}

TEST_CASE("malformed state JSON is rejected") {
  CHECK_THROWS_AS(ket_from_json(json::parse(R"({"dims": [2], "re": [1, 0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ket_from_json(json::parse(R"({"dims": [2], "re": [1], "im": [0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ket_from_json(json::parse(R"({"dims": [1, 2], "re": [1, 0], "im": [0, 0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ket_from_json(json::parse(R"({"dims": [2], "re": ["a", 0], "im": [0, 0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ket_from_json(json::parse(R"({"dims": [2], "re": [1, 1], "im": [0, 0]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ket_from_json(json::parse(R"([1, 2, 3])")), std::invalid_argument);
  CHECK_THROWS_AS(
      density_from_json(json::parse(R"({"dims": [2], "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      density_from_json(json::parse(R"({"dims": [2], "re": [[1, 0]], "im": [[0, 0]]})")),
      std::invalid_argument);
}

TEST_CASE("tau report JSON") {
  const TauReport r = tau_a(random_mixed_state({3, 2}, 2, 6));
  const json j = to_json(r);
  CHECK(j.at("d1") == 3);
  CHECK(j.at("d2") == 2);
  CHECK(j.at("terms").size() == 3);
  CHECK(j.at("terms")[0].size() == 1);
  CHECK(j.at("tau").get<double>() == r.tau);
}

TEST_CASE("doubles print with enough digits to round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  Rng rng(131);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * std::pow(10.0, static_cast<double>(i % 41) - 20.0);
    const std::string s = format_double(x);
    CHECK(s.find(',') == std::string::npos);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("CSV layout") {
  CHECK(dims_label({2, 3, 4}) == "2x3x4");
  const PolygamyReport r = polygamy_report_general(haar_random_pure({2, 3, 2}, 1), 1);
  const std::string header = polygamy_csv_header(r);
  CHECK(header == "state_id,mode,n,dims,focus,lhs_sq,rhs_sq_sum,slack,rhs_0,rhs_2");
  const std::string row = polygamy_csv_row("7", r);
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
  CHECK(row.rfind("7,general-tau,3,2x3x2,1,", 0) == 0);
}

}  // namespace
}  // namespace polyent
