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
#include <span>

#include "fftp/grid.hpp"

namespace fftp {

/// Where the zero-frequency coefficient sits: (0, 0) for kNatural, and
/// (height/2, width/2) for kCentered.
enum class Layout { kNatural, kCentered };

/// Complex 2D coefficient grid tagged with its frequency layout. Dimensions
/// are always even so that centering is an involution.
class Spectrum {
 public:
  Spectrum(ComplexGrid coefficients, Layout layout);

  std::size_t width() const { return coeffs_.width(); }
  std::size_t height() const { return coeffs_.height(); }
  Layout layout() const { return layout_; }

  const ComplexGrid& coefficients() const { return coeffs_; }
  cdouble operator()(std::size_t row, std::size_t col) const {
    return coeffs_(row, col);
  }

  bool operator==(const Spectrum&) const = default;

 private:
  ComplexGrid coeffs_;
  Layout layout_;
};

/// Throws ParameterError unless the image is at least 8x8, has even
/// dimensions and holds only finite values.
void validate_image(const Image& image);

/// Unitary 2D DFT: X[k,l] = (MN)^{-1/2} sum x[m,n] exp(-2 pi i (km/M + ln/N)).
/// Rows are transformed first, then columns. Any even dimensions are
/// accepted; the 8x8 minimum is enforced by the alignment pipeline.
Spectrum dft2_forward(const Image& image);
Spectrum dft2_forward(const ComplexGrid& grid);

/// Exact inverse of dft2_forward. Requires the natural layout.
ComplexGrid dft2_inverse(const Spectrum& spectrum);

/// Cyclic half-shift along both axes, natural -> centered.
Spectrum center(const Spectrum& spectrum);
/// centered -> natural
Spectrum uncenter(const Spectrum& spectrum);

/// Central keep_h x keep_w block of a centered spectrum (lowest frequencies).
Spectrum downsample(const Spectrum& spectrum, std::size_t keep_w,
                    std::size_t keep_h);

/// Embeds a centered spectrum in the middle of a zero target grid. Inverse of
/// downsample on the retained block.
Spectrum upsample_zero_pad(const Spectrum& spectrum, std::size_t target_w,
                           std::size_t target_h);

/// Column-major linearization: index = col * height + row.
ComplexVector vectorize(const Spectrum& spectrum);
Spectrum fold(std::span<const cdouble> vector, std::size_t width,
              std::size_t height, Layout layout);

Image real_part(const ComplexGrid& grid);
double max_abs_imag(const ComplexGrid& grid);

}  // namespace fftp
