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

#include <Eigen/Dense>

#include "fftp/grid.hpp"

namespace fftp {

enum class OperatorMode { kImplicitRank1, kExplicitDense };

/// Largest dimension for which the dense operator is materialized.
inline constexpr std::size_t kDefaultExplicitCap = 4096;

/// Unitary map solving min ||Omega x_d - x_t||^2.
///
/// The cross-product matrix x_t x_d^H has rank one, so any unitary operator
/// that sends v = x_d/||x_d|| to u = x_t/||x_t|| is a minimizer. The implicit
/// form keeps only u and v and applies the plane rotation
///
///   Omega = e^{i phi} (I + K + K^2 / (1 + c)),  K = u' v^H - v u'^H,
///
/// with u' = e^{-i phi} u, c = |v^H u| and phi = arg(v^H u). It is unitary on
/// the whole space, maps v to u, and costs O(N) per application.
///
/// The explicit form builds x_t x_d^H, takes its full SVD U S V^H and stores
/// Omega = U V^H as a dense matrix.
class RotationOperator {
 public:
  OperatorMode mode() const { return mode_; }
  std::size_t dimension() const { return dim_; }

  /// Unit vectors of the rank-1 factorization (implicit mode only).
  const ComplexVector& u() const { return u_; }
  const ComplexVector& v() const { return v_; }

  /// Dense operator (explicit mode only; empty otherwise).
  const Eigen::MatrixXcd& dense() const { return omega_; }

  ComplexVector apply(std::span<const cdouble> x) const;

 private:
  friend RotationOperator solve_rotation(std::span<const cdouble>,
                                         std::span<const cdouble>, OperatorMode,
                                         std::size_t);

  OperatorMode mode_ = OperatorMode::kImplicitRank1;
  std::size_t dim_ = 0;
  ComplexVector u_;
  ComplexVector v_;
  ComplexVector u_rotated_;  // u' = e^{-i phi} u
  cdouble phase_{1.0, 0.0};  // e^{i phi}
  double cosine_ = 1.0;      // c = |v^H u|
  Eigen::MatrixXcd omega_;
};

/// Solves the complex orthogonal Procrustes problem mapping x_d onto x_t.
/// Throws ParameterError on length mismatch or N < 2, DegenerateInputError on
/// zero-norm input, CapacityError when explicit mode exceeds `explicit_cap`.
RotationOperator solve_rotation(std::span<const cdouble> x_d,
                                std::span<const cdouble> x_t,
                                OperatorMode mode = OperatorMode::kImplicitRank1,
                                std::size_t explicit_cap = kDefaultExplicitCap);

/// Real orthogonal Procrustes: argmin ||Omega A - B||_F over orthogonal
/// Omega, via the SVD of B A^T.
Eigen::MatrixXd solve_rotation_real(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b);

double norm(std::span<const cdouble> x);

}  // namespace fftp
