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

#pragma once

#include <cstdint>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "types.hpp"

// File-format conventions shared by every reader and writer:
//   * complex scalars are two-element arrays [re, im];
//   * matrices are nested row-major arrays of [re, im] pairs;
//   * vector files are {"entries": [[re, im], ...]};
//   * CSV numbers carry 17 significant digits, so doubles round-trip.
// Error messages name the offending field by JSON-path-like position.

namespace qsc {

using json = nlohmann::json;

cxd complex_from_json(const json& j, const std::string& where);
json complex_to_json(const cxd& z);

Cvec vector_from_json(const json& j, const std::string& where);  // bare array of pairs
Cmat matrix_from_json(const json& j, const std::string& where);  // nested rows
json vector_to_json(const Cvec& v);
json matrix_to_json(const Cmat& m);

// {"entries": [...]} files for u, v and probe vectors
Cvec load_vector_file(const std::string& path);
void save_vector_file(const Cvec& v, const std::string& path);

// Permutation file: JSON array of target indices (a bijection on 0..n-1).
std::vector<std::int64_t> load_permutation_file(const std::string& path);

json load_json_file(const std::string& path);
void save_json_file(const json& j, const std::string& path);  // path "-" = stdout

// 17 significant digits; fixed "%.17g" so identical inputs give identical bytes
std::string fmt17(double x);

// Opens path for writing, or returns std::cout when path == "-".
std::ostream& open_output(const std::string& path, std::ofstream& storage);

}  // namespace qsc
