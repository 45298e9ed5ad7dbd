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
#include <random>
#include <vector>

#include "fftp/error.hpp"
#include "fftp/metrics.hpp"

TEST_CASE("cosine_correlation examples") {
  const std::vector<double> x{0.3, -1.2, 4.0, 2.5};
  CHECK(std::abs(fftp::cosine_correlation(x, x) - 1.0) <= 1e-12);
  CHECK(fftp::cosine_correlation(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
  std::vector<double> twice = x;
  for (auto& v : twice) v *= 2.0;
  CHECK(std::abs(fftp::cosine_correlation(x, twice) - 1.0) <= 1e-12);
  CHECK(fftp::cosine_correlation(std::vector<double>{1, 1}, std::vector<double>{-2, -2}) ==
        doctest::Approx(-1.0));
}

TEST_CASE("cosine_correlation errors") {
  CHECK_THROWS_AS(fftp::cosine_correlation(std::vector<double>{0, 0}, std::vector<double>{1, 2}),
                  fftp::DegenerateInputError);
  CHECK_THROWS_AS(fftp::cosine_correlation(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}),
                  fftp::ParameterError);
}

TEST_CASE("cosine properties on random vectors") {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> dist;
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(37), y(37);
    for (auto& v : x) v = dist(gen);
    for (auto& v : y) v = dist(gen);
    const double c = fftp::cosine_correlation(x, y);
    CHECK(std::abs(c) <= 1.0);
    CHECK(c == fftp::cosine_correlation(y, x));
    std::vector<double> xs = x;
    const double s = scale(gen);
    for (auto& v : xs) v *= s;
    CHECK(fftp::cosine_correlation(xs, y) == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("rmse") {
  const std::vector<double> x{1, 2, 3};
  CHECK(fftp::rmse(x, x) == 0.0);
  CHECK(fftp::rmse(std::vector<double>{0, 0}, std::vector<double>{3, 4}) ==
        doctest::Approx(std::sqrt(25.0 / 2.0)).epsilon(1e-15));
  const std::vector<double> y{-1, 5, 0.5};
  CHECK(fftp::rmse(x, y) == fftp::rmse(y, x));
  CHECK_THROWS_AS(fftp::rmse(x, std::vector<double>{1}), fftp::ParameterError);
}
