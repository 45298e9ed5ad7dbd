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
#include <numbers>
#include <random>

#include "fftp/error.hpp"
#include "fftp/procrustes.hpp"
#include "oracles.hpp"

using fftp::ComplexVector;
using fftp::OperatorMode;
using fftp::testing::cd;

namespace {

constexpr OperatorMode kModes[] = {OperatorMode::kImplicitRank1, OperatorMode::kExplicitDense};

double vnorm(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector closed_form(const ComplexVector& x_d, const ComplexVector& x_t) {
  ComplexVector out = x_t;
  const double s = vnorm(x_d) / vnorm(x_t);
  for (auto& z : out) z *= s;
  return out;
}

Eigen::MatrixXcd implicit_as_matrix(const fftp::RotationOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    ComplexVector e(op.dimension(), cd{});
    e[static_cast<std::size_t>(j)] = 1.0;
    const auto col = op.apply(e);
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

double residual(const Eigen::MatrixXcd& omega, const ComplexVector& x_d, const ComplexVector& x_t) {
  const Eigen::Map<const Eigen::VectorXcd> d(x_d.data(), static_cast<Eigen::Index>(x_d.size()));
  const Eigen::Map<const Eigen::VectorXcd> t(x_t.data(), static_cast<Eigen::Index>(x_t.size()));
  return (omega * d - t).norm();
}

}  // namespace

TEST_CASE("worked examples in both modes") {
  for (auto mode : kModes) {
    CAPTURE(static_cast<int>(mode));
    const ComplexVector e1{1.0, 0.0};
    const ComplexVector e2{0.0, 1.0};
    auto same = fftp::solve_rotation(e1, e1, mode).apply(e1);
    CHECK(std::abs(same[0] - cd{1, 0}) < 1e-14);
    CHECK(std::abs(same[1]) < 1e-14);

    auto swapped = fftp::solve_rotation(e1, e2, mode).apply(e1);
    CHECK(std::abs(swapped[0]) < 1e-14);
    CHECK(std::abs(swapped[1] - cd{1, 0}) < 1e-14);

    const ComplexVector d{3.0, 4.0};
    const ComplexVector t{0.0, 5.0};
    auto mapped = fftp::solve_rotation(d, t, mode).apply(d);
    CHECK(std::abs(mapped[0]) < 1e-13);
    CHECK(std::abs(mapped[1] - cd{5, 0}) < 1e-13);

    const ComplexVector zero(2, cd{});
    for (const auto& z : fftp::solve_rotation(d, t, mode).apply(zero)) CHECK(z == cd{});
  }
}

TEST_CASE("implicit operator stores unit factors and is unitary") {
  std::mt19937_64 gen(21);
  for (std::size_t n : {2u, 5u, 16u, 32u}) {
    const auto x_d = fftp::testing::random_cvector(n, gen);
    const auto x_t = fftp::testing::random_cvector(n, gen);
    const auto op = fftp::solve_rotation(x_d, x_t);
    CHECK(op.mode() == OperatorMode::kImplicitRank1);
    CHECK(std::abs(vnorm(op.u()) - 1.0) <= 1e-12);
    CHECK(std::abs(vnorm(op.v()) - 1.0) <= 1e-12);
    const Eigen::MatrixXcd m = implicit_as_matrix(op);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    CHECK((m * m.adjoint() - eye).cwiseAbs().maxCoeff() <= 1e-12);
    const auto y = fftp::testing::random_cvector(n, gen);
    CHECK(std::abs(vnorm(op.apply(y)) - vnorm(y)) <= 1e-12 * vnorm(y));
  }
  // Parallel and orthogonal inputs are the edge cases of the plane rotation.
  const ComplexVector v{cd{1, 1}, cd{0, 2}, cd{-1, 0}};
  ComplexVector v_phase = v;
  for (auto& z : v_phase) z *= std::polar(3.0, 0.7);
  const auto parallel = fftp::solve_rotation(v, v_phase).apply(v);
  CHECK(fftp::testing::rel_norm_diff(std::span<const cd>(parallel),
                                     std::span<const cd>(closed_form(v, v_phase))) < 1e-14);
  const ComplexVector ortho{cd{0, 0}, cd{0, 0}, cd{0, 1}};
  const ComplexVector base{cd{1, 0}, cd{0, 1}, cd{0, 0}};
  const auto o = fftp::solve_rotation(base, ortho).apply(base);
  CHECK(fftp::testing::rel_norm_diff(std::span<const cd>(o),
                                     std::span<const cd>(closed_form(base, ortho))) < 1e-14);
}

TEST_CASE("rank-1 oracle equivalence over random pairs") {
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<std::size_t> len(2, 128);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = len(gen);
    const auto x_d = fftp::testing::random_cvector(n, gen);
    const auto x_t = fftp::testing::random_cvector(n, gen);
    const auto implicit = fftp::solve_rotation(x_d, x_t, OperatorMode::kImplicitRank1).apply(x_d);
    const auto dense = fftp::solve_rotation(x_d, x_t, OperatorMode::kExplicitDense).apply(x_d);
    CHECK(fftp::testing::rel_norm_diff(std::span<const cd>(implicit), std::span<const cd>(dense)) <= 1e-8);
    CHECK(fftp::testing::rel_norm_diff(std::span<const cd>(implicit),
                                       std::span<const cd>(closed_form(x_d, x_t))) <= 1e-12);
  }
}

TEST_CASE("explicit operator is unitary and preserves norms") {
  std::mt19937_64 gen(99);
  for (std::size_t n : {2u, 3u, 17u, 64u}) {
    const auto x_d = fftp::testing::random_cvector(n, gen);
    const auto x_t = fftp::testing::random_cvector(n, gen);
    const auto op = fftp::solve_rotation(x_d, x_t, OperatorMode::kExplicitDense);
    const auto& omega = op.dense();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(omega.rows(), omega.cols());
    CHECK((omega * omega.adjoint() - eye).cwiseAbs().maxCoeff() <= 1e-10);
    const auto y = fftp::testing::random_cvector(n, gen);
    CHECK(std::abs(vnorm(op.apply(y)) - vnorm(y)) <= 1e-10 * vnorm(y));
  }
}

TEST_CASE("sampled optimality certificate") {
  std::mt19937_64 gen(5);
  const std::size_t n = 12;
  const auto x_d = fftp::testing::random_cvector(n, gen);
  const auto x_t = fftp::testing::random_cvector(n, gen);
  const auto op = fftp::solve_rotation(x_d, x_t, OperatorMode::kExplicitDense);
  const double best = residual(op.dense(), x_d, x_t);
  CHECK(best == doctest::Approx(std::abs(vnorm(x_d) - vnorm(x_t))).epsilon(1e-10));
  for (int i = 0; i < 120; ++i) {
    const Eigen::MatrixXcd q = i % 2 == 0 ? fftp::testing::near_identity_unitary(n, 0.05, gen)
                                          : fftp::testing::random_unitary(n, gen);
    CHECK(residual(q * op.dense(), x_d, x_t) >= best - 1e-9);
  }
}

TEST_CASE("output is invariant to the phase of x_d") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 20; ++i) {
    const auto x_d = fftp::testing::random_cvector(24, gen);
    const auto x_t = fftp::testing::random_cvector(24, gen);
    auto rotated = x_d;
    const cd phase = std::polar(1.0, theta(gen));
    for (auto& z : rotated) z *= phase;
    for (auto mode : kModes) {
      const auto a = fftp::solve_rotation(x_d, x_t, mode).apply(x_d);
      const auto b = fftp::solve_rotation(rotated, x_t, mode).apply(rotated);
      CHECK(fftp::testing::rel_norm_diff(std::span<const cd>(b), std::span<const cd>(a)) <= 1e-10);
    }
  }
}

TEST_CASE("complex path restricted to real inputs matches the real solver") {
  std::mt19937_64 gen(17);
  std::normal_distribution<double> dist;
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 6;
    Eigen::MatrixXd a(n, 1), b(n, 1);
    ComplexVector x_d(n), x_t(n);
    for (std::size_t j = 0; j < n; ++j) {
      a(j, 0) = dist(gen);
      b(j, 0) = dist(gen);
      x_d[j] = a(j, 0);
      x_t[j] = b(j, 0);
    }
    const Eigen::VectorXd real_mapped = fftp::solve_rotation_real(a, b) * a;
    for (auto mode : kModes) {
      const auto mapped = fftp::solve_rotation(x_d, x_t, mode).apply(x_d);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(mapped[j] - cd{real_mapped(static_cast<Eigen::Index>(j)), 0.0}) <= 1e-9);
      }
    }
  }
}

TEST_CASE("solve_rotation errors") {
  const ComplexVector a{1.0, 2.0};
  const ComplexVector zero{0.0, 0.0};
  CHECK_THROWS_AS(fftp::solve_rotation(a, zero), fftp::DegenerateInputError);
  CHECK_THROWS_AS(fftp::solve_rotation(zero, a), fftp::DegenerateInputError);
  CHECK_THROWS_AS(fftp::solve_rotation(a, ComplexVector{1.0, 2.0, 3.0}), fftp::ParameterError);
  CHECK_THROWS_AS(fftp::solve_rotation(ComplexVector{1.0}, ComplexVector{1.0}), fftp::ParameterError);
  CHECK_THROWS_AS(fftp::solve_rotation(ComplexVector(10, 1.0), ComplexVector(10, 1.0),
                                       OperatorMode::kExplicitDense, 8),
                  fftp::CapacityError);
  const auto op = fftp::solve_rotation(a, a);
  CHECK_THROWS_AS(op.apply(ComplexVector{1.0, 2.0, 3.0}), fftp::ParameterError);
}

TEST_CASE("real orthogonal Procrustes") {
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(2, 2);
  CHECK((fftp::solve_rotation_real(eye, eye) - eye).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::MatrixXd quarter(2, 2);
  quarter << 0, -1, 1, 0;
  const Eigen::MatrixXd omega = fftp::solve_rotation_real(eye, quarter);

  // Brute force over rotation angles.
  double best_angle = 0.0;
  double best_cost = 1e300;
  for (int i = 0; i < 36000; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 36000.0;
    Eigen::MatrixXd r(2, 2);
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    const double cost = (r * eye - quarter).squaredNorm();
    if (cost < best_cost) {
      best_cost = cost;
      best_angle = t;
    }
  }
  Eigen::MatrixXd brute(2, 2);
  brute << std::cos(best_angle), -std::sin(best_angle), std::sin(best_angle), std::cos(best_angle);
  CHECK((omega - brute).cwiseAbs().maxCoeff() < 1e-3);
  CHECK((omega - quarter).cwiseAbs().maxCoeff() < 1e-12);

  std::mt19937_64 gen(3);
  std::normal_distribution<double> dist;
  Eigen::MatrixXd a(8, 8), b(8, 8);
  for (Eigen::Index i = 0; i < 64; ++i) {
    a.data()[i] = dist(gen);
    b.data()[i] = dist(gen);
  }
  const Eigen::MatrixXd w = fftp::solve_rotation_real(a, b);
  CHECK((w * w.transpose() - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK_THROWS_AS(fftp::solve_rotation_real(a, Eigen::MatrixXd(8, 3)), fftp::ParameterError);
}
