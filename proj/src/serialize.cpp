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

#include "polyent/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace polyent {
namespace {

using nlohmann::json;

Dims read_dims(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("re") || !j.contains("im")) {
    throw std::invalid_argument("state JSON: expected keys dims, re, im");
  }
  const json& d = j.at("dims");
  if (!d.is_array() || d.empty()) throw std::invalid_argument("state JSON: dims must be a non-empty array");
  Dims dims;
  for (const json& v : d) {
    if (!v.is_number_integer() || v.get<long long>() < 2) {
      throw std::invalid_argument("state JSON: dims must be integers >= 2");
    }
    dims.push_back(v.get<std::size_t>());
  }
  return dims;
}

std::vector<double> read_numbers(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("state JSON: ") + what + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number()) throw std::invalid_argument(std::string("state JSON: ") + what + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const Ket& psi) {
  json re = json::array();
  json im = json::array();
  for (const cplx& a : psi.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return {{"dims", psi.dims()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const DensityMatrix& rho) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < rho.dimension(); ++r) {
    json rr = json::array();
    json ii = json::array();
    for (const cplx& z : rho.matrix().row(r)) {
      rr.push_back(z.real());
      ii.push_back(z.imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"dims", rho.dims()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const TauReport& report) {
  json terms = json::array();
  for (std::size_t m = 0; m < report.pairs_a; ++m) {
    json row = json::array();
    for (std::size_t n = 0; n < report.pairs_b; ++n) row.push_back(report.term(m, n));
    terms.push_back(std::move(row));
  }
  return {{"d1", report.d1}, {"d2", report.d2}, {"terms", std::move(terms)}, {"tau", report.tau}};
}

bool is_density_json(const json& j) {
  return j.is_object() && j.contains("re") && j.at("re").is_array() && !j.at("re").empty() &&
         j.at("re").front().is_array();
}

Ket ket_from_json(const json& j) {
  Dims dims = read_dims(j);
  const auto re = read_numbers(j.at("re"), "re");
  const auto im = read_numbers(j.at("im"), "im");
  if (re.size() != im.size() || re.size() != total_dimension(dims)) {
    throw std::invalid_argument("state JSON: re/im length does not match dims");
  }
  std::vector<cplx> amps(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) amps[i] = {re[i], im[i]};
  return Ket(std::move(dims), std::move(amps));
}

DensityMatrix density_from_json(const json& j) {
  Dims dims = read_dims(j);
  const std::size_t n = total_dimension(dims);
  const json& re = j.at("re");
  const json& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != n || im.size() != n) {
    throw std::invalid_argument("state JSON: density matrix must have dim rows");
  }
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto rr = read_numbers(re[r], "re row");
    const auto ii = read_numbers(im[r], "im row");
    if (rr.size() != n || ii.size() != n) throw std::invalid_argument("state JSON: ragged density matrix");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {rr[c], ii[c]};
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string dims_label(const Dims& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims[i]);
  }
  return s;
}

std::string polygamy_csv_header(const PolygamyReport& shape) {
  std::string h = "state_id,mode,n,dims,focus,lhs_sq,rhs_sq_sum,slack";
  for (std::size_t k : shape.partners) h += ",rhs_" + std::to_string(k);
  return h;
}

std::string polygamy_csv_row(std::string_view state_id, const PolygamyReport& report) {
  std::string row(state_id);
  row += ',';
  row += mode_name(report.mode);
  row += ',' + std::to_string(report.dims.size());
  row += ',' + dims_label(report.dims);
  row += ',' + std::to_string(report.focus);
  row += ',' + format_double(report.lhs_squared);
  row += ',' + format_double(report.rhs_squared_sum);
  row += ',' + format_double(report.slack);
  for (double t : report.rhs_terms) row += ',' + format_double(t);
  return row;
}

}  // namespace polyent
