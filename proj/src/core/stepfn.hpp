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

#include <string>
#include <vector>

#include "io.hpp"
#include "rational.hpp"
#include "types.hpp"

namespace qsc {

/**
 * Right-continuous, compactly supported step function with values in C^d.
 *
 * Segment k holds its value on [start_k, start_{k+1}) and the last segment on
 * [start_last, T); the function is zero from T on. Start times are exact
 * rationals: they are parsed from decimal strings and compared exactly, so
 * partition merging between two step functions is unambiguous.
 *
 * File format (times as decimal strings):
 *   {"T": "1.5", "segments": [{"t0": "0", "value": [[re,im], ...]}, ...]}
 */
class StepFunction {
 public:
  struct Segment {
    Rat start;
    Cvec value;
  };

  // Validates: strictly increasing starts, first start 0, all starts < T,
  // every value of length d.
  StepFunction(int noise_dim, Rat support_end, std::vector<Segment> segments);

  int noise_dim() const { return d_; }
  const Rat& support_end() const { return support_end_; }
  const std::vector<Segment>& segments() const { return segments_; }

  // Value at time t (right-continuous); the zero vector for t >= T.
  const Cvec& value_at(const Rat& t) const;

  // Every segment cut into `splits` equal pieces (values unchanged). With
  // splits = 1 this reproduces the segment list bit for bit.
  StepFunction refined(int splits) const;

  static StepFunction from_json(const json& j, const std::string& where);
  json to_json() const;
  static StepFunction load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int d_;
  Rat support_end_;
  std::vector<Segment> segments_;
  Cvec zero_;
};

// Integral of <f, g> (conjugate-linear in f) over [from, upto), clamped to
// the supports; beyond its support a step function is zero.
cxd cross_integral(const StepFunction& f, const StepFunction& g,
                   const Rat& from, const Rat& upto);

// Integral of ||f||^2 over [0, upto), clamped to the support.
double norm_sq_integral(const StepFunction& f, const Rat& upto);

// Sorted exact union of {0}, {t}, and every segment start or support end of
// f and g strictly inside (0, t): the coarsest partition of [0, t) on which
// both functions are constant.
std::vector<Rat> merged_breakpoints(const StepFunction& f,
                                    const StepFunction& g, const Rat& t);

}  // namespace qsc
