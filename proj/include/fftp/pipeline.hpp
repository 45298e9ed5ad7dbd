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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fftp/grid.hpp"
#include "fftp/metrics.hpp"
#include "fftp/procrustes.hpp"
#include "fftp/synthgen.hpp"

namespace fftp {

struct AlignConfig {
  /// Reduction of the total coefficient count; split evenly over both axes.
  double downsample_total_factor = 4.0;
  /// Explicit per-axis retained bins, overriding the factor when set.
  std::optional<std::size_t> keep_w;
  std::optional<std::size_t> keep_h;
  bool explicit_operator = false;
  std::size_t explicit_cap = kDefaultExplicitCap;
};

/// Retained (width, height) bins for an image of the given size.
std::pair<std::size_t, std::size_t> retained_dims(const AlignConfig& config,
                                                  std::size_t width,
                                                  std::size_t height);

struct AlignmentResult {
  Image aligned;                  // real part of the reconstructed grid
  double cosine_vs_target = 0.0;  // against the full-resolution target
  double scale = 0.0;             // |x_d| / |x_t|
  double residual = 0.0;          // |Omega x_d - x_t|
  double max_imag = 0.0;          // discarded imaginary magnitude
  double max_real = 0.0;
  std::size_t vector_length = 0;
  std::size_t keep_w = 0;
  std::size_t keep_h = 0;
};

/// Aligns `distorted` onto `target`: forward 2D DFT of both, center, keep the
/// low-frequency block, vectorize, solve the Procrustes rotation, apply it,
/// fold, zero-pad back to full size, uncenter, inverse DFT, real part.
AlignmentResult align(const Image& target, const Image& distorted,
                      const AlignConfig& config = {});

struct ExperimentConfig {
  std::size_t width = 256;
  std::size_t height = 256;
  std::size_t n_blobs = 20;
  double alpha = 0.5;
  std::uint64_t master_seed = 42;
  double noise_fraction = 0.10;
  std::size_t extra_peaks = 3;
  double widen_factor = 1.5;
  Range sigma_range = kDefaultSigmaRange;
  Range amplitude_range = kDefaultAmplitudeRange;
  AlignConfig align;
};

enum class Variant { kNoNoise, kWithNoise, kExtraPeaks, kWider };

inline constexpr Variant kAllVariants[] = {Variant::kNoNoise, Variant::kWithNoise,
                                           Variant::kExtraPeaks, Variant::kWider};

std::string variant_label(Variant v);
/// Short file-name friendly identifier.
std::string variant_slug(Variant v);

/// Synthetic images shared by run_experiment and the synth command.
struct ExperimentInputs {
  BlobSet target_blobs;
  BlobSet distorted_blobs;  // log-distorted, before any perturbation
  Image target;
  std::vector<std::pair<Variant, Image>> distorted;  // one per variant
};

ExperimentInputs make_inputs(const ExperimentConfig& config);

struct VariantOutcome {
  Variant variant;
  Image distorted;
  AlignmentResult result;
};

struct ExperimentReport {
  ExperimentConfig config;
  BlobSet target_blobs;
  BlobSet distorted_blobs;
  Image target;
  double self_cosine = 0.0;
  std::vector<VariantOutcome> variants;

  /// Rows of the cosine table: "Original (self)" followed by each variant.
  std::vector<MetricReport> table() const;
};

/// Target from n_blobs, log-distorted copy, and the four perturbations
/// (none, noise, extra peaks, wider), each aligned back onto the target.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace fftp
