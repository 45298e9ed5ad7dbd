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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fftp/grid.hpp"

namespace fftp {

/// Axis-aligned 2D Gaussian peak. Coordinates are 1-based pixel positions
/// and may be fractional.
struct Blob {
  double cx = 1.0;
  double cy = 1.0;
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  double amplitude = 1.0;

  bool operator==(const Blob&) const = default;
};

/// Ordered blobs on a width x height canvas. Every blob satisfies
/// 1 <= cx <= width, 1 <= cy <= height and has positive widths and amplitude.
class BlobSet {
 public:
  BlobSet(std::size_t width, std::size_t height, std::vector<Blob> blobs = {});

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const Blob> blobs() const { return blobs_; }
  std::size_t size() const { return blobs_.size(); }

  void add(const Blob& blob);

  bool operator==(const BlobSet&) const = default;

 private:
  void check(const Blob& blob) const;

  std::size_t width_;
  std::size_t height_;
  std::vector<Blob> blobs_;
};

/// Closed interval [lo, hi] with 0 < lo <= hi.
struct Range {
  double lo;
  double hi;
};

inline constexpr Range kDefaultSigmaRange{3.0, 8.0};
inline constexpr Range kDefaultAmplitudeRange{0.5, 1.0};

struct DistortionParams {
  double alpha = 0.5;  // 0 = identity, 1 = full logarithmic map
};

/// Centers uniform on [1, W] x [1, H], widths and amplitudes uniform on their
/// ranges. Overlap is allowed. Deterministic for a given seed.
BlobSet generate_blobs(std::size_t count, std::size_t width, std::size_t height,
                       std::uint64_t seed, Range sigma_range = kDefaultSigmaRange,
                       Range amplitude_range = kDefaultAmplitudeRange);

/// Sum of the blobs evaluated at integer pixel coordinates (1..W, 1..H).
/// Pixel (px, py) is stored at row py-1, column px-1.
Image render(const BlobSet& blobs);

/// (1-alpha) x + alpha (1 + (extent-1) ln(x) / ln(extent)) for x in [1, extent].
double log_distort_coordinate(double x, double alpha, std::size_t extent);

std::pair<double, double> log_distort_point(double x, double y,
                                            DistortionParams params,
                                            std::size_t width,
                                            std::size_t height);

/// Moves every blob center through log_distort_point; shapes are unchanged.
BlobSet distort_blobs(const BlobSet& blobs, DistortionParams params);

/// Adds i.i.d. N(0, (fraction * max(image))^2) noise to every pixel.
Image add_noise(const Image& image, double fraction, std::uint64_t seed);

/// Appends `count` blobs sampled with the generate_blobs law.
BlobSet add_extra_blobs(const BlobSet& blobs, std::size_t count,
                        std::uint64_t seed, Range sigma_range = kDefaultSigmaRange,
                        Range amplitude_range = kDefaultAmplitudeRange);

/// Scales sigma_x and sigma_y of every blob by `factor`.
BlobSet widen(const BlobSet& blobs, double factor);

}  // namespace fftp
