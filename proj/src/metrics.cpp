// Copyright 2026 The fftprocrustes Authors
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

#include "fftp/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fftp/error.hpp"
#include "fftp/simd/kernels.hpp"

namespace fftp {
namespace {

void require_same_length(std::span<const double> x, std::span<const double> y,
                         const char* op) {
  if (x.size() != y.size()) {
    throw ParameterError(std::string(op) + ": inputs differ in length (" +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw ParameterError(std::string(op) + ": empty input");
}

}  // namespace

double cosine_correlation(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, "cosine_correlation");
  const auto& k = simd::active();
  const double xx = k.dot(x.data(), x.data(), x.size());
  const double yy = k.dot(y.data(), y.data(), y.size());
  if (!(xx > 0.0) || !(yy > 0.0)) {
    throw DegenerateInputError("cosine_correlation: zero-norm input");
  }
  const double xy = k.dot(x.data(), y.data(), x.size());
  return std::clamp(xy / (std::sqrt(xx) * std::sqrt(yy)), -1.0, 1.0);
}

double rmse(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, "rmse");
  const double ss = simd::active().sqdiff(x.data(), y.data(), x.size());
  return std::sqrt(ss / static_cast<double>(x.size()));
}

}  // namespace fftp
