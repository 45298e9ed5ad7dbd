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

#include <doctest.h>

#include <cmath>

#include "fftp/error.hpp"
#include "fftp/pipeline.hpp"
#include "fftp/spectral.hpp"
#include "oracles.hpp"

using fftp::AlignConfig;
using fftp::Image;

namespace {

Image blob_image(std::size_t size, std::uint64_t seed, std::size_t count = 6) {
  return fftp::render(fftp::generate_blobs(count, size, size, seed, {2, 4}, {0.5, 1.0}));
}

double lowpass_error(const fftp::AlignmentResult& r, const Image& target) {
  const Image lp = fftp::testing::lowpass_oracle(target, r.keep_w, r.keep_h);
  Image scaled = lp;
  for (double& v : scaled.values()) v *= r.scale;
  return fftp::testing::rel_norm_diff(r.aligned.values(), scaled.values()) *
         // Relative to |LP| rather than |s LP|.
         r.scale;
}

}  // namespace

TEST_CASE("retained_dims") {
  CHECK(fftp::retained_dims({}, 256, 256) == std::pair<std::size_t, std::size_t>{128, 128});
  CHECK(fftp::retained_dims({}, 64, 32) == std::pair<std::size_t, std::size_t>{32, 16});
  AlignConfig one;
  one.downsample_total_factor = 1.0;
  CHECK(fftp::retained_dims(one, 40, 24) == std::pair<std::size_t, std::size_t>{40, 24});
  AlignConfig keep;
  keep.keep_w = 10;
  keep.keep_h = 6;
  CHECK(fftp::retained_dims(keep, 64, 64) == std::pair<std::size_t, std::size_t>{10, 6});
  AlignConfig bad;
  bad.downsample_total_factor = 0.5;
  CHECK_THROWS_AS(fftp::retained_dims(bad, 64, 64), fftp::ParameterError);
  keep.keep_w = 7;
  CHECK_THROWS_AS(fftp::retained_dims(keep, 64, 64), fftp::ParameterError);
  keep.keep_w = 128;
  CHECK_THROWS_AS(fftp::retained_dims(keep, 64, 64), fftp::ParameterError);
}

TEST_CASE("self-alignment returns the low-pass target") {
  const Image target = blob_image(64, 1);
  const auto r = fftp::align(target, target);
  CHECK(std::abs(r.scale - 1.0) <= 1e-12);
  CHECK(r.residual <= 1e-12 * 64);
  CHECK(r.vector_length == 32 * 32);
  CHECK(lowpass_error(r, target) <= 1e-9);
  const Image lp = fftp::testing::lowpass_oracle(target, r.keep_w, r.keep_h);
  CHECK(r.cosine_vs_target ==
        doctest::Approx(fftp::cosine_correlation(lp.values(), target.values())).epsilon(1e-12));
  CHECK(r.cosine_vs_target > 0.99);
}

TEST_CASE("aligned image equals scale times the low-pass target") {
  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    const Image target = blob_image(64, seed, 8);
    const Image distorted = blob_image(64, seed + 100, 5);
    AlignConfig cfg;
    cfg.downsample_total_factor = seed % 2 == 0 ? 4.0 : 16.0;
    const auto r = fftp::align(target, distorted, cfg);
    CHECK(lowpass_error(r, target) <= 1e-9);
    CHECK(r.scale > 0.0);
    CHECK(std::abs(r.cosine_vs_target) <= 1.0);
    CHECK(r.aligned.width() == 64);
    CHECK(r.aligned.height() == 64);
  }
}

TEST_CASE("non-square, non-power-of-two images") {
  const Image target = fftp::render(fftp::generate_blobs(5, 48, 40, 3, {2, 4}, {0.5, 1}));
  const Image distorted = fftp::render(fftp::generate_blobs(5, 48, 40, 4, {2, 4}, {0.5, 1}));
  const auto r = fftp::align(target, distorted);
  CHECK(r.keep_w == 24);
  CHECK(r.keep_h == 20);
  CHECK(lowpass_error(r, target) <= 1e-9);
}

TEST_CASE("imaginary residue vanishes for a Hermitian retained block") {
  // Interior blobs: negligible energy at the unpaired band-edge frequency.
  const Image target = fftp::render(fftp::BlobSet(
      128, 128, {fftp::Blob{62, 66, 6, 7, 1.0}, fftp::Blob{55, 72, 7, 6, 0.7}}));
  const auto r = fftp::align(target, target);
  CHECK(r.max_imag <= 1e-9 * r.max_real);
}

TEST_CASE("re-aligning the aligned image is idempotent") {
  const Image target = blob_image(64, 21);
  const Image distorted = blob_image(64, 22);
  const auto first = fftp::align(target, distorted);
  const auto second = fftp::align(target, first.aligned);
  CHECK(std::abs(second.cosine_vs_target - first.cosine_vs_target) <= 1e-9);
}

TEST_CASE("rotation preserves the distorted coefficient norm") {
  const Image target = blob_image(32, 31);
  const Image distorted = blob_image(32, 32);
  const auto reduce = [](const Image& img) {
    return fftp::vectorize(fftp::downsample(fftp::center(fftp::dft2_forward(img)), 16, 16));
  };
  const auto x_t = reduce(target);
  const auto x_d = reduce(distorted);
  for (auto mode : {fftp::OperatorMode::kImplicitRank1, fftp::OperatorMode::kExplicitDense}) {
    const auto mapped = fftp::solve_rotation(x_d, x_t, mode).apply(x_d);
    CHECK(std::abs(fftp::norm(mapped) - fftp::norm(x_d)) <= 1e-10 * fftp::norm(x_d));
  }
}

TEST_CASE("explicit operator mode reproduces the implicit result") {
  const Image target = blob_image(16, 41, 3);
  const Image distorted = blob_image(16, 42, 3);
  AlignConfig dense;
  dense.explicit_operator = true;
  const auto a = fftp::align(target, distorted);
  const auto b = fftp::align(target, distorted, dense);
  CHECK(fftp::testing::rel_norm_diff(b.aligned.values(), a.aligned.values()) <= 1e-9);

  const Image big = blob_image(256, 43);
  CHECK_THROWS_AS(fftp::align(big, big, dense), fftp::CapacityError);
}

TEST_CASE("align input errors") {
  const Image a = blob_image(32, 1);
  const Image b = blob_image(64, 1);
  CHECK_THROWS_AS(fftp::align(a, b), fftp::ParameterError);
  CHECK_THROWS_AS(fftp::align(a, Image(32, 32, 0.0)), fftp::DegenerateInputError);
  CHECK_THROWS_AS(fftp::align(Image(32, 32, 0.0), a), fftp::DegenerateInputError);
  CHECK_THROWS_AS(fftp::align(Image(9, 9, 1.0), Image(9, 9, 1.0)), fftp::ParameterError);
}

TEST_CASE("small experiment") {
  fftp::ExperimentConfig cfg;
  cfg.width = 64;
  cfg.height = 64;
  cfg.n_blobs = 8;
  cfg.sigma_range = {2, 4};
  cfg.master_seed = 5;
  const auto report = fftp::run_experiment(cfg);
  REQUIRE(report.variants.size() == 4);
  const auto table = report.table();
  REQUIRE(table.size() == 5);
  CHECK(table[0].name == "Original (self)");
  CHECK(table[1].name == "No Noise");
  CHECK(table[2].name == "With Noise");
  CHECK(table[3].name == "+ Extra Peaks");
  CHECK(table[4].name == "Wider");
  CHECK(std::abs(table[0].value - 1.0) <= 1e-12);
  CHECK(report.target_blobs.size() == 8);

  // Extra peaks leave only a change of scale behind.
  const auto& base = report.variants[0].result;
  const auto& extra = report.variants[2].result;
  CHECK(extra.scale > base.scale);
  Image a = base.aligned;
  Image b = extra.aligned;
  for (double& v : a.values()) v /= base.scale;
  for (double& v : b.values()) v /= extra.scale;
  CHECK(fftp::testing::rel_norm_diff(b.values(), a.values()) <= 1e-9);

  const auto again = fftp::run_experiment(cfg);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(again.variants[i].distorted == report.variants[i].distorted);
    CHECK(again.variants[i].result.aligned == report.variants[i].result.aligned);
  }
}
