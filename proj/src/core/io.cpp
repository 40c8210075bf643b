// Copyright 2026 The qsc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "error.hpp"

namespace qsc {

cxd complex_from_json(const json& j, const std::string& where) {
  require(j.is_array() && j.size() == 2, ErrorCode::parse,
          where + ": expected a two-element [re, im] array");
  require(j[0].is_number() && j[1].is_number(), ErrorCode::parse,
          where + ": [re, im] entries must be numbers");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  require(std::isfinite(re) && std::isfinite(im), ErrorCode::parse,
          where + ": non-finite value");
  return cxd(re, im);
}

json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

Cvec vector_from_json(const json& j, const std::string& where) {
  require(j.is_array(), ErrorCode::parse, where + ": expected an array");
  Cvec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Cmat matrix_from_json(const json& j, const std::string& where) {
  require(j.is_array(), ErrorCode::parse, where + ": expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Cmat m;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    require(row.is_array(), ErrorCode::parse, rw + ": expected a row array");
    if (r == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    }
    require(row.size() == cols, ErrorCode::parse, rw + ": ragged row length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(row[c], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

json vector_to_json(const Cvec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

json matrix_to_json(const Cmat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Cvec load_vector_file(const std::string& path) {
  const json j = load_json_file(path);
  require(j.is_object() && j.contains("entries"), ErrorCode::parse,
          path + ": expected an object with an \"entries\" field");
  return vector_from_json(j["entries"], path + ":entries");
}

void save_vector_file(const Cvec& v, const std::string& path) {
  save_json_file(json{{"entries", vector_to_json(v)}}, path);
}

std::vector<std::int64_t> load_permutation_file(const std::string& path) {
  const json j = load_json_file(path);
  require(j.is_array(), ErrorCode::parse,
          path + ": expected a JSON array of target indices");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number_integer(), ErrorCode::parse,
            path + "[" + std::to_string(i) + "]: expected an integer index");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::io, "cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, path + ": " + e.what());
  }
  return j;
}

void save_json_file(const json& j, const std::string& path) {
  std::ofstream storage;
  std::ostream& out = open_output(path, storage);
  out << j.dump(2) << "\n";
  require(out.good(), ErrorCode::io, "failed writing '" + path + "'");
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ostream& open_output(const std::string& path, std::ofstream& storage) {
  if (path == "-") return std::cout;
  storage.open(path);
  require(storage.good(), ErrorCode::io, "cannot open '" + path + "' for writing");
  return storage;
}

}  // namespace qsc
