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

#include "fftp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fftp/fft.hpp"
#include "fftp/simd/kernels.hpp"

namespace fftp {
namespace {

bool even(std::size_t n) { return n % 2 == 0; }

ComplexGrid transpose(const ComplexGrid& in) {
  ComplexGrid out(in.height(), in.width());
  constexpr std::size_t kTile = 32;
  for (std::size_t r0 = 0; r0 < in.height(); r0 += kTile) {
    for (std::size_t c0 = 0; c0 < in.width(); c0 += kTile) {
      const std::size_t r1 = std::min(r0 + kTile, in.height());
      const std::size_t c1 = std::min(c0 + kTile, in.width());
      for (std::size_t r = r0; r < r1; ++r) {
        for (std::size_t c = c0; c < c1; ++c) out(c, r) = in(r, c);
      }
    }
  }
  return out;
}

enum class Direction { kForward, kInverse };

void transform_rows(ComplexGrid& grid, Direction dir) {
  const Fft plan(grid.width());
  for (std::size_t r = 0; r < grid.height(); ++r) {
    if (dir == Direction::kForward) {
      plan.forward(grid.row(r));
    } else {
      plan.inverse(grid.row(r));
    }
  }
}

ComplexGrid transform2(ComplexGrid grid, Direction dir) {
  transform_rows(grid, dir);
  ComplexGrid cols = transpose(grid);
  transform_rows(cols, dir);
  grid = transpose(cols);
  const double norm =
      1.0 / std::sqrt(static_cast<double>(grid.width() * grid.height()));
  simd::active().cscale(norm, grid.values().data(), grid.size());
  return grid;
}

// Cyclic shift by half the extent along both axes.
ComplexGrid half_shift(const ComplexGrid& in) {
  const std::size_t w = in.width();
  const std::size_t h = in.height();
  ComplexGrid out(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t rr = (r + h / 2) % h;
    for (std::size_t c = 0; c < w; ++c) out(rr, (c + w / 2) % w) = in(r, c);
  }
  return out;
}

void require_layout(const Spectrum& s, Layout want, const char* op) {
  if (s.layout() != want) {
    throw LayoutError(std::string(op) + ": spectrum has the wrong layout");
  }
}

}  // namespace

Spectrum::Spectrum(ComplexGrid coefficients, Layout layout)
    : coeffs_(std::move(coefficients)), layout_(layout) {
  if (coeffs_.empty() || !even(coeffs_.width()) || !even(coeffs_.height())) {
    throw ParameterError("spectrum dimensions must be positive and even");
  }
}

void validate_image(const Image& image) {
  if (image.width() < 8 || image.height() < 8 || !even(image.width()) ||
      !even(image.height())) {
    throw ParameterError("image dimensions must be even and at least 8x8, got " +
                         std::to_string(image.width()) + "x" +
                         std::to_string(image.height()));
  }
  for (double v : image.values()) {
    if (!std::isfinite(v)) throw ParameterError("image contains non-finite values");
  }
}

Spectrum dft2_forward(const Image& image) {
  for (double v : image.values()) {
    if (!std::isfinite(v)) throw ParameterError("image contains non-finite values");
  }
  std::vector<cdouble> data(image.values().begin(), image.values().end());
  return dft2_forward(ComplexGrid(image.width(), image.height(), std::move(data)));
}

Spectrum dft2_forward(const ComplexGrid& grid) {
  return Spectrum(transform2(grid, Direction::kForward), Layout::kNatural);
}

ComplexGrid dft2_inverse(const Spectrum& spectrum) {
  require_layout(spectrum, Layout::kNatural, "dft2_inverse");
  return transform2(spectrum.coefficients(), Direction::kInverse);
}

Spectrum center(const Spectrum& spectrum) {
  require_layout(spectrum, Layout::kNatural, "center");
  return Spectrum(half_shift(spectrum.coefficients()), Layout::kCentered);
}

Spectrum uncenter(const Spectrum& spectrum) {
  require_layout(spectrum, Layout::kCentered, "uncenter");
  return Spectrum(half_shift(spectrum.coefficients()), Layout::kNatural);
}

Spectrum downsample(const Spectrum& spectrum, std::size_t keep_w,
                    std::size_t keep_h) {
  require_layout(spectrum, Layout::kCentered, "downsample");
  if (keep_w == 0 || keep_h == 0 || !even(keep_w) || !even(keep_h)) {
    throw ParameterError("downsample: kept dimensions must be positive and even");
  }
  if (keep_w > spectrum.width() || keep_h > spectrum.height()) {
    throw ParameterError("downsample: kept dimensions exceed the spectrum");
  }
  const std::size_t r0 = spectrum.height() / 2 - keep_h / 2;
  const std::size_t c0 = spectrum.width() / 2 - keep_w / 2;
  ComplexGrid out(keep_w, keep_h);
  for (std::size_t r = 0; r < keep_h; ++r) {
    for (std::size_t c = 0; c < keep_w; ++c) out(r, c) = spectrum(r0 + r, c0 + c);
  }
  return Spectrum(std::move(out), Layout::kCentered);
}

Spectrum upsample_zero_pad(const Spectrum& spectrum, std::size_t target_w,
                           std::size_t target_h) {
  require_layout(spectrum, Layout::kCentered, "upsample_zero_pad");
  if (!even(target_w) || !even(target_h)) {
    throw ParameterError("upsample_zero_pad: target dimensions must be even");
  }
  if (target_w < spectrum.width() || target_h < spectrum.height()) {
    throw ParameterError("upsample_zero_pad: target smaller than source");
  }
  const std::size_t r0 = target_h / 2 - spectrum.height() / 2;
  const std::size_t c0 = target_w / 2 - spectrum.width() / 2;
  ComplexGrid out(target_w, target_h);
  for (std::size_t r = 0; r < spectrum.height(); ++r) {
    for (std::size_t c = 0; c < spectrum.width(); ++c) {
      out(r0 + r, c0 + c) = spectrum(r, c);
    }
  }
  return Spectrum(std::move(out), Layout::kCentered);
}

ComplexVector vectorize(const Spectrum& spectrum) {
  const std::size_t h = spectrum.height();
  ComplexVector v(spectrum.width() * h);
  for (std::size_t c = 0; c < spectrum.width(); ++c) {
    for (std::size_t r = 0; r < h; ++r) v[c * h + r] = spectrum(r, c);
  }
  return v;
}

Spectrum fold(std::span<const cdouble> vector, std::size_t width,
              std::size_t height, Layout layout) {
  if (vector.size() != width * height) {
    throw ParameterError("fold: vector length " + std::to_string(vector.size()) +
                         " does not match " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  ComplexGrid out(width, height);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < height; ++r) out(r, c) = vector[c * height + r];
  }
  return Spectrum(std::move(out), layout);
}

Image real_part(const ComplexGrid& grid) {
  Image out(grid.width(), grid.height());
  auto dst = out.values();
  auto src = grid.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i].real();
  return out;
}

double max_abs_imag(const ComplexGrid& grid) {
  double m = 0.0;
  for (const auto& v : grid.values()) m = std::max(m, std::abs(v.imag()));
  return m;
}

}  // namespace fftp
