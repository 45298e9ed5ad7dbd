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

#include "fftp/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "fftp/error.hpp"
#include "fftp/rng.hpp"
#include "fftp/spectral.hpp"

namespace fftp {
namespace {

bool all_zero(const Image& image) {
  return std::all_of(image.values().begin(), image.values().end(),
                     [](double v) { return v == 0.0; });
}

std::size_t even_floor(double v) {
  auto n = static_cast<std::size_t>(std::floor(v));
  return n - n % 2;
}

}  // namespace

std::pair<std::size_t, std::size_t> retained_dims(const AlignConfig& config,
                                                  std::size_t width,
                                                  std::size_t height) {
  if (!(config.downsample_total_factor >= 1.0) ||
      !std::isfinite(config.downsample_total_factor)) {
    throw ParameterError("downsample factor must be finite and >= 1");
  }
  const double per_axis = std::sqrt(config.downsample_total_factor);
  // Small epsilon so exact ratios such as 256 / 2 are not floored to 127.
  const std::size_t kw = config.keep_w.value_or(
      even_floor(static_cast<double>(width) / per_axis + 1e-9));
  const std::size_t kh = config.keep_h.value_or(
      even_floor(static_cast<double>(height) / per_axis + 1e-9));
  if (kw < 2 || kh < 2 || kw % 2 != 0 || kh % 2 != 0 || kw > width ||
      kh > height) {
    throw ParameterError("retained dimensions " + std::to_string(kw) + "x" +
                         std::to_string(kh) + " must be even, >= 2 and fit in " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  return {kw, kh};
}

AlignmentResult align(const Image& target, const Image& distorted,
                      const AlignConfig& config) {
  validate_image(target);
  validate_image(distorted);
  if (target.width() != distorted.width() ||
      target.height() != distorted.height()) {
    throw ParameterError("target and distorted images differ in size");
  }
  if (all_zero(target) || all_zero(distorted)) {
    throw DegenerateInputError("cannot align an all-zero image");
  }
  const auto [kw, kh] = retained_dims(config, target.width(), target.height());

  const auto reduce = [&](const Image& img) {
    return vectorize(downsample(center(dft2_forward(img)), kw, kh));
  };
  const ComplexVector x_t = reduce(target);
  const ComplexVector x_d = reduce(distorted);

  const auto mode = config.explicit_operator ? OperatorMode::kExplicitDense
                                             : OperatorMode::kImplicitRank1;
  const RotationOperator omega =
      solve_rotation(x_d, x_t, mode, config.explicit_cap);
  const ComplexVector mapped = omega.apply(x_d);

  ComplexVector diff = mapped;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= x_t[i];

  const Spectrum block = fold(mapped, kw, kh, Layout::kCentered);
  const ComplexGrid grid = dft2_inverse(
      uncenter(upsample_zero_pad(block, target.width(), target.height())));

  AlignmentResult r;
  r.aligned = real_part(grid);
  r.cosine_vs_target = cosine_correlation(r.aligned.values(), target.values());
  r.scale = norm(x_d) / norm(x_t);
  r.residual = norm(diff);
  r.max_imag = max_abs_imag(grid);
  for (double v : r.aligned.values()) r.max_real = std::max(r.max_real, std::abs(v));
  r.vector_length = x_d.size();
  r.keep_w = kw;
  r.keep_h = kh;
  return r;
}

std::string variant_label(Variant v) {
  switch (v) {
    case Variant::kNoNoise:
      return "No Noise";
    case Variant::kWithNoise:
      return "With Noise";
    case Variant::kExtraPeaks:
      return "+ Extra Peaks";
    case Variant::kWider:
      return "Wider";
  }
  return "?";
}

std::string variant_slug(Variant v) {
  switch (v) {
    case Variant::kNoNoise:
      return "no_noise";
    case Variant::kWithNoise:
      return "noise";
    case Variant::kExtraPeaks:
      return "extra_peaks";
    case Variant::kWider:
      return "wider";
  }
  return "unknown";
}

std::vector<MetricReport> ExperimentReport::table() const {
  std::vector<MetricReport> rows;
  rows.push_back({"Original (self)", self_cosine});
  for (const auto& v : variants) {
    rows.push_back({variant_label(v.variant), v.result.cosine_vs_target});
  }
  return rows;
}

ExperimentInputs make_inputs(const ExperimentConfig& config) {
  const std::uint64_t seed = config.master_seed;
  BlobSet blobs = generate_blobs(config.n_blobs, config.width, config.height,
                                 derive_seed(seed, "blobs"), config.sigma_range,
                                 config.amplitude_range);
  BlobSet shifted = distort_blobs(blobs, DistortionParams{config.alpha});
  Image target = render(blobs);
  const Image shifted_image = render(shifted);

  ExperimentInputs in{blobs, shifted, std::move(target), {}};
  for (Variant v : kAllVariants) {
    Image distorted;
    switch (v) {
      case Variant::kNoNoise:
        distorted = shifted_image;
        break;
      case Variant::kWithNoise:
        distorted = add_noise(shifted_image, config.noise_fraction,
                              derive_seed(seed, "noise"));
        break;
      case Variant::kExtraPeaks:
        distorted = config.extra_peaks == 0
                        ? shifted_image
                        : render(add_extra_blobs(
                              shifted, config.extra_peaks,
                              derive_seed(seed, "extras"), config.sigma_range,
                              config.amplitude_range));
        break;
      case Variant::kWider:
        distorted = render(widen(shifted, config.widen_factor));
        break;
    }
    in.distorted.emplace_back(v, std::move(distorted));
  }
  return in;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentInputs in = make_inputs(config);
  ExperimentReport report{config, std::move(in.target_blobs),
                          std::move(in.distorted_blobs), std::move(in.target),
                          0.0, {}};
  report.self_cosine =
      cosine_correlation(report.target.values(), report.target.values());
  for (auto& [variant, distorted] : in.distorted) {
    AlignmentResult result = align(report.target, distorted, config.align);
    report.variants.push_back({variant, std::move(distorted), std::move(result)});
  }
  return report;
}

}  // namespace fftp
