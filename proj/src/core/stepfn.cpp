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

#include "stepfn.hpp"

#include <algorithm>

#include "error.hpp"

namespace qsc {

StepFunction::StepFunction(int noise_dim, Rat support_end,
                           std::vector<Segment> segments)
    : d_(noise_dim), support_end_(support_end), segments_(std::move(segments)) {
  require(d_ >= 0, ErrorCode::dimension,
          "step function: noise_dim must be >= 0");
  require(!support_end_.is_zero(), ErrorCode::domain,
          "step function: support end must be positive");
  require(!segments_.empty(), ErrorCode::domain,
          "step function: needs at least one segment");
  require(segments_.front().start.is_zero(), ErrorCode::domain,
          "step function: first segment must start at 0");
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Segment& s = segments_[k];
    require(s.value.size() == d_, ErrorCode::dimension,
            "step function: segment " + std::to_string(k) + " value has length " +
                std::to_string(s.value.size()) + ", expected " +
                std::to_string(d_));
    require(s.start < support_end_, ErrorCode::domain,
            "step function: segment " + std::to_string(k) + " starts at " +
                s.start.str() + ", not before the support end " +
                support_end_.str());
    if (k > 0)
      require(segments_[k - 1].start < s.start, ErrorCode::domain,
              "step function: segment starts must be strictly increasing (" +
                  segments_[k - 1].start.str() + " then " + s.start.str() + ")");
  }
  zero_ = Cvec::Zero(d_);
}

const Cvec& StepFunction::value_at(const Rat& t) const {
  if (support_end_ <= t) return zero_;
  // Last segment whose start is <= t.
  std::size_t lo = 0;
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (segments_[k].start <= t)
      lo = k;
    else
      break;
  }
  return segments_[lo].value;
}

StepFunction StepFunction::refined(int splits) const {
  require(splits >= 1, ErrorCode::domain,
          "step function refine: splits must be >= 1");
  std::vector<Segment> out;
  out.reserve(segments_.size() * static_cast<std::size_t>(splits));
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Rat start = segments_[k].start;
    const Rat end =
        (k + 1 < segments_.size()) ? segments_[k + 1].start : support_end_;
    const Rat step = (end - start).div_int(splits);
    for (int i = 0; i < splits; ++i)
      out.push_back({start + step.mul_int(i), segments_[k].value});
  }
  return StepFunction(d_, support_end_, std::move(out));
}

StepFunction StepFunction::from_json(const json& j, const std::string& where) {
  require(j.is_object(), ErrorCode::parse, where + ": expected a JSON object");
  require(j.contains("T"), ErrorCode::parse, where + ": missing field \"T\"");
  require(j.contains("segments"), ErrorCode::parse,
          where + ": missing field \"segments\"");
  require(j["T"].is_string(), ErrorCode::parse,
          where + ":T: times are decimal strings");
  const Rat support_end = Rat::parse(j["T"].get<std::string>());
  const json& segs = j["segments"];
  require(segs.is_array() && !segs.empty(), ErrorCode::parse,
          where + ":segments: expected a nonempty array");
  std::vector<Segment> out;
  Eigen::Index d = -1;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const std::string sw = where + ":segments[" + std::to_string(k) + "]";
    const json& seg = segs[k];
    require(seg.is_object() && seg.contains("t0") && seg.contains("value"),
            ErrorCode::parse, sw + ": expected {\"t0\", \"value\"}");
    require(seg["t0"].is_string(), ErrorCode::parse,
            sw + ".t0: times are decimal strings");
    const Rat start = Rat::parse(seg["t0"].get<std::string>());
    Cvec value = vector_from_json(seg["value"], sw + ".value");
    if (d < 0) d = value.size();
    require(value.size() == d, ErrorCode::parse,
            sw + ".value: length " + std::to_string(value.size()) +
                " differs from the first segment's " + std::to_string(d));
    out.push_back({start, std::move(value)});
  }
  return StepFunction(static_cast<int>(d), support_end, std::move(out));
}

json StepFunction::to_json() const {
  json segs = json::array();
  for (const Segment& s : segments_)
    segs.push_back(json{{"t0", s.start.str()}, {"value", vector_to_json(s.value)}});
  return json{{"T", support_end_.str()}, {"segments", std::move(segs)}};
}

StepFunction StepFunction::load(const std::string& path) {
  return from_json(load_json_file(path), path);
}

void StepFunction::save(const std::string& path) const {
  save_json_file(to_json(), path);
}

namespace {

// Segment boundaries of f clipped to [from, upto), as exact times.
void collect_breakpoints(const StepFunction& f, const Rat& from, const Rat& upto,
                         std::vector<Rat>& into) {
  for (const auto& seg : f.segments())
    if (from < seg.start && seg.start < upto) into.push_back(seg.start);
  if (from < f.support_end() && f.support_end() < upto)
    into.push_back(f.support_end());
}

void sort_unique(std::vector<Rat>& times) {
  std::sort(times.begin(), times.end(),
            [](const Rat& a, const Rat& b) { return a < b; });
  times.erase(std::unique(times.begin(), times.end()), times.end());
}

}  // namespace

cxd cross_integral(const StepFunction& f, const StepFunction& g,
                   const Rat& from, const Rat& upto) {
  require(f.noise_dim() == g.noise_dim(), ErrorCode::dimension,
          "cross_integral: noise dimensions differ");
  if (upto <= from) return cxd(0.0, 0.0);
  std::vector<Rat> times{from, upto};
  collect_breakpoints(f, from, upto, times);
  collect_breakpoints(g, from, upto, times);
  sort_unique(times);
  cxd acc(0.0, 0.0);
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const double len = (times[k + 1] - times[k]).value();
    acc += len * f.value_at(times[k]).dot(g.value_at(times[k]));
  }
  return acc;
}

double norm_sq_integral(const StepFunction& f, const Rat& upto) {
  return cross_integral(f, f, Rat(), upto).real();
}

std::vector<Rat> merged_breakpoints(const StepFunction& f,
                                    const StepFunction& g, const Rat& t) {
  std::vector<Rat> times{Rat()};
  if (!t.is_zero()) {
    times.push_back(t);
    collect_breakpoints(f, Rat(), t, times);
    collect_breakpoints(g, Rat(), t, times);
  }
  sort_unique(times);
  return times;
}

}  // namespace qsc
