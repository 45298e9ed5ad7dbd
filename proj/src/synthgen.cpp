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

#include "fftp/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fftp/error.hpp"
#include "fftp/rng.hpp"
#include "fftp/simd/kernels.hpp"

namespace fftp {
namespace {

void check_range(Range r, const char* what) {
  if (!(r.lo > 0.0) || !(r.lo <= r.hi) || !std::isfinite(r.hi)) {
    throw ParameterError(std::string(what) +
                         " range must satisfy 0 < lower <= upper");
  }
}

void sample_into(std::vector<Blob>& out, std::size_t count, std::size_t width,
                 std::size_t height, std::uint64_t seed, Range sigma_range,
                 Range amplitude_range) {
  check_range(sigma_range, "sigma");
  check_range(amplitude_range, "amplitude");
  Rng centers(seed, "centers");
  Rng sigmas(seed, "sigmas");
  Rng amplitudes(seed, "amplitudes");
  const double w = static_cast<double>(width);
  const double h = static_cast<double>(height);
  for (std::size_t i = 0; i < count; ++i) {
    Blob b;
    b.cx = centers.uniform(1.0, w);
    b.cy = centers.uniform(1.0, h);
    b.sigma_x = sigmas.uniform(sigma_range.lo, sigma_range.hi);
    b.sigma_y = sigmas.uniform(sigma_range.lo, sigma_range.hi);
    b.amplitude = amplitudes.uniform(amplitude_range.lo, amplitude_range.hi);
    out.push_back(b);
  }
}

std::vector<double> gaussian_profile(std::size_t extent, double center,
                                     double sigma) {
  std::vector<double> p(extent);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (std::size_t i = 0; i < extent; ++i) {
    const double d = static_cast<double>(i + 1) - center;
    p[i] = std::exp(-d * d * inv);
  }
  return p;
}

}  // namespace

BlobSet::BlobSet(std::size_t width, std::size_t height, std::vector<Blob> blobs)
    : width_(width), height_(height), blobs_(std::move(blobs)) {
  if (width_ < 1 || height_ < 1) {
    throw ParameterError("blob canvas must have positive dimensions");
  }
  for (const auto& b : blobs_) check(b);
}

void BlobSet::add(const Blob& blob) {
  check(blob);
  blobs_.push_back(blob);
}

void BlobSet::check(const Blob& b) const {
  const double w = static_cast<double>(width_);
  const double h = static_cast<double>(height_);
  if (!(b.cx >= 1.0 && b.cx <= w && b.cy >= 1.0 && b.cy <= h)) {
    throw DomainError("blob center outside the canvas");
  }
  if (!(b.sigma_x > 0.0 && b.sigma_y > 0.0 && b.amplitude > 0.0)) {
    throw ParameterError("blob widths and amplitude must be positive");
  }
}

BlobSet generate_blobs(std::size_t count, std::size_t width, std::size_t height,
                       std::uint64_t seed, Range sigma_range,
                       Range amplitude_range) {
  if (count < 1) throw ParameterError("blob count must be at least 1");
  if (width < 8 || height < 8) {
    throw ParameterError("canvas must be at least 8x8");
  }
  std::vector<Blob> blobs;
  blobs.reserve(count);
  sample_into(blobs, count, width, height, seed, sigma_range, amplitude_range);
  return BlobSet(width, height, std::move(blobs));
}

Image render(const BlobSet& blobs) {
  Image image(blobs.width(), blobs.height(), 0.0);
  const auto& k = simd::active();
  // Each blob is separable: amp * gy(py) * gx(px), one axpy per row.
  for (const auto& b : blobs.blobs()) {
    const auto gx = gaussian_profile(blobs.width(), b.cx, b.sigma_x);
    const auto gy = gaussian_profile(blobs.height(), b.cy, b.sigma_y);
    for (std::size_t r = 0; r < blobs.height(); ++r) {
      k.axpy(b.amplitude * gy[r], gx.data(), image.row(r).data(), gx.size());
    }
  }
  return image;
}

double log_distort_coordinate(double x, double alpha, std::size_t extent) {
  if (extent < 2) throw ParameterError("distortion extent must exceed 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in [0, 1]");
  }
  const double e = static_cast<double>(extent);
  if (!(x >= 1.0 && x <= e)) {
    throw DomainError("coordinate " + std::to_string(x) + " outside [1, " +
                      std::to_string(extent) + "]");
  }
  const double mapped = 1.0 + (e - 1.0) * std::log(x) / std::log(e);
  return std::clamp((1.0 - alpha) * x + alpha * mapped, 1.0, e);
}

std::pair<double, double> log_distort_point(double x, double y,
                                            DistortionParams params,
                                            std::size_t width,
                                            std::size_t height) {
  return {log_distort_coordinate(x, params.alpha, width),
          log_distort_coordinate(y, params.alpha, height)};
}

BlobSet distort_blobs(const BlobSet& blobs, DistortionParams params) {
  std::vector<Blob> out(blobs.blobs().begin(), blobs.blobs().end());
  for (auto& b : out) {
    std::tie(b.cx, b.cy) =
        log_distort_point(b.cx, b.cy, params, blobs.width(), blobs.height());
  }
  return BlobSet(blobs.width(), blobs.height(), std::move(out));
}

Image add_noise(const Image& image, double fraction, std::uint64_t seed) {
  if (image.empty()) throw ParameterError("add_noise: empty image");
  if (!(fraction >= 0.0) || !std::isfinite(fraction)) {
    throw ParameterError("noise fraction must be finite and >= 0");
  }
  const auto values = image.values();
  const double peak = std::max(0.0, *std::max_element(values.begin(), values.end()));
  const double stddev = fraction * peak;
  Image out = image;
  if (stddev == 0.0) return out;
  Rng rng(seed, "noise");
  for (double& v : out.values()) v += stddev * rng.normal();
  return out;
}

BlobSet add_extra_blobs(const BlobSet& blobs, std::size_t count,
                        std::uint64_t seed, Range sigma_range,
                        Range amplitude_range) {
  if (count < 1) throw ParameterError("extra blob count must be at least 1");
  std::vector<Blob> out(blobs.blobs().begin(), blobs.blobs().end());
  sample_into(out, count, blobs.width(), blobs.height(), seed, sigma_range,
              amplitude_range);
  return BlobSet(blobs.width(), blobs.height(), std::move(out));
}

BlobSet widen(const BlobSet& blobs, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ParameterError("widen factor must be positive");
  }
  std::vector<Blob> out(blobs.blobs().begin(), blobs.blobs().end());
  for (auto& b : out) {
    b.sigma_x *= factor;
    b.sigma_y *= factor;
  }
  return BlobSet(blobs.width(), blobs.height(), std::move(out));
}

}  // namespace fftp
