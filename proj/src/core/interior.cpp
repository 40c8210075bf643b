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

#include "interior.hpp"

#include "error.hpp"
#include "numerics.hpp"

namespace qsc {

namespace {

InteriorMask from_kept(int dim, int margin, std::vector<int> kept) {
  require(dim > 0, ErrorCode::dimension, "InteriorMask: dim must be positive");
  require(margin >= 0, ErrorCode::domain, "InteriorMask: margin must be >= 0");
  require(!kept.empty(), ErrorCode::domain,
          "InteriorMask: margin " + std::to_string(margin) +
              " leaves no interior in dimension " + std::to_string(dim));
  InteriorMask m;
  m.dim = dim;
  m.margin = margin;
  m.kept = std::move(kept);
  return m;
}

}  // namespace

InteriorMask InteriorMask::halfline(int dim, int margin) {
  std::vector<int> kept;
  for (int i = 0; i + margin <= dim - 1; ++i) kept.push_back(i);
  return from_kept(dim, margin, std::move(kept));
}

InteriorMask InteriorMask::window(int dim, int margin) {
  std::vector<int> kept;
  for (int i = margin; i + margin <= dim - 1; ++i) kept.push_back(i);
  return from_kept(dim, margin, std::move(kept));
}

InteriorMask InteriorMask::grid(int dim1, int dim2, int margin) {
  require(dim1 > 0 && dim2 > 0, ErrorCode::dimension,
          "InteriorMask::grid: dimensions must be positive");
  std::vector<int> kept;
  for (int p = 0; p + margin <= dim1 - 1; ++p)
    for (int q = 0; q + margin <= dim2 - 1; ++q) kept.push_back(p * dim2 + q);
  return from_kept(dim1 * dim2, margin, std::move(kept));
}

InteriorMask InteriorMask::full(int dim) {
  std::vector<int> kept;
  for (int i = 0; i < dim; ++i) kept.push_back(i);
  return from_kept(dim, 0, std::move(kept));
}

InteriorMask InteriorMask::named(const std::string& kind, int dim, int margin,
                                 int dim1, int dim2) {
  if (kind == "full") return full(dim);
  if (kind == "halfline") return halfline(dim, margin);
  if (kind == "window" || kind == "line") return window(dim, margin);
  if (kind == "grid") {
    require(dim1 > 0 && dim2 > 0 && dim1 * dim2 == dim, ErrorCode::dimension,
            "InteriorMask: grid geometry needs dim1*dim2 == h_dim");
    return grid(dim1, dim2, margin);
  }
  fail(ErrorCode::domain, "InteriorMask: unknown geometry '" + kind + "'");
}

Cmat interior_compress(const Cmat& a, const InteriorMask& mask) {
  require(a.rows() == a.cols(), ErrorCode::dimension,
          "interior_compress: matrix must be square");
  require(mask.dim > 0 && a.rows() % mask.dim == 0, ErrorCode::dimension,
          "interior_compress: matrix size is not a multiple of the mask dimension");
  for (int i : mask.kept)
    require(i >= 0 && i < mask.dim, ErrorCode::domain,
            "interior_compress: mask index out of range");
  const int blocks = static_cast<int>(a.rows()) / mask.dim;
  const int keep = static_cast<int>(mask.kept.size());
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(blocks) * keep);
  for (int b = 0; b < blocks; ++b)
    for (int i : mask.kept) idx.push_back(b * mask.dim + i);
  Cmat out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          a(idx[r], idx[c]);
  return out;
}

double interior_max_form_deficit(const GeneratorMatrix& f, const InteriorMask& mask) {
  require(mask.dim == f.h_dim(), ErrorCode::dimension,
          "interior mask dimension does not match the generator");
  return herm_max_eig(interior_compress(deficit_operator(f), mask));
}

double interior_isometry_defect(const GeneratorMatrix& f, const InteriorMask& mask) {
  require(mask.dim == f.h_dim(), ErrorCode::dimension,
          "interior mask dimension does not match the generator");
  return op_norm(interior_compress(deficit_operator(f), mask));
}

}  // namespace qsc
