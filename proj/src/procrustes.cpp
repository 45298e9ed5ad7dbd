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

#include "fftp/procrustes.hpp"

#include <cmath>
#include <string>

#include "fftp/error.hpp"
#include "fftp/simd/kernels.hpp"

namespace fftp {

double norm(std::span<const cdouble> x) {
  return std::sqrt(simd::active().cnorm2(x.data(), x.size()));
}

RotationOperator solve_rotation(std::span<const cdouble> x_d,
                                std::span<const cdouble> x_t, OperatorMode mode,
                                std::size_t explicit_cap) {
  if (x_d.size() != x_t.size()) {
    throw ParameterError("solve_rotation: vector lengths differ (" +
                         std::to_string(x_d.size()) + " vs " +
                         std::to_string(x_t.size()) + ")");
  }
  const std::size_t n = x_d.size();
  if (n < 2) throw ParameterError("solve_rotation: need at least 2 coefficients");
  const double nd = norm(x_d);
  const double nt = norm(x_t);
  if (!(nd > 0.0) || !(nt > 0.0)) {
    throw DegenerateInputError("solve_rotation: zero-norm input vector");
  }
  if (!std::isfinite(nd) || !std::isfinite(nt)) {
    throw DegenerateInputError("solve_rotation: non-finite input vector");
  }

  RotationOperator op;
  op.mode_ = mode;
  op.dim_ = n;

  if (mode == OperatorMode::kExplicitDense) {
    if (n > explicit_cap) {
      throw CapacityError("explicit operator of dimension " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(explicit_cap) +
                          "; use the implicit rank-1 mode instead");
    }
    const Eigen::Map<const Eigen::VectorXcd> d(x_d.data(),
                                               static_cast<Eigen::Index>(n));
    const Eigen::Map<const Eigen::VectorXcd> t(x_t.data(),
                                               static_cast<Eigen::Index>(n));
    const Eigen::MatrixXcd cross = t * d.adjoint();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(cross,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
    op.omega_ = svd.matrixU() * svd.matrixV().adjoint();
    return op;
  }

  const auto& k = simd::active();
  op.u_.assign(x_t.begin(), x_t.end());
  op.v_.assign(x_d.begin(), x_d.end());
  k.cscale(1.0 / nt, op.u_.data(), n);
  k.cscale(1.0 / nd, op.v_.data(), n);

  const cdouble overlap = k.cdot(op.v_.data(), op.u_.data(), n);  // v^H u
  const double magnitude = std::abs(overlap);
  op.phase_ = magnitude > 0.0 ? overlap / magnitude : cdouble{1.0, 0.0};
  op.cosine_ = std::min(magnitude, 1.0);
  op.u_rotated_ = op.u_;
  const cdouble unphase = std::conj(op.phase_);
  for (auto& z : op.u_rotated_) z *= unphase;
  return op;
}

ComplexVector RotationOperator::apply(std::span<const cdouble> x) const {
  if (x.size() != dim_) {
    throw ParameterError("apply: vector length " + std::to_string(x.size()) +
                         " does not match operator dimension " +
                         std::to_string(dim_));
  }
  if (mode_ == OperatorMode::kExplicitDense) {
    const Eigen::Map<const Eigen::VectorXcd> in(x.data(),
                                                static_cast<Eigen::Index>(dim_));
    const Eigen::VectorXcd out = omega_ * in;
    return ComplexVector(out.data(), out.data() + out.size());
  }

  // Omega x = e^{i phi} x + alpha u - e^{i phi} beta v, where with
  // a = v^H x, b = u'^H x:
  //   alpha = a + (c a - b) / (1 + c),  beta = b + (a - c b) / (1 + c).
  const auto& k = simd::active();
  const cdouble a = k.cdot(v_.data(), x.data(), dim_);
  const cdouble b = k.cdot(u_rotated_.data(), x.data(), dim_);
  const double c = cosine_;
  const cdouble alpha = a + (c * a - b) / (1.0 + c);
  const cdouble beta = b + (a - c * b) / (1.0 + c);

  ComplexVector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) y[i] = phase_ * x[i];
  k.caxpy(alpha, u_.data(), y.data(), dim_);
  k.caxpy(-phase_ * beta, v_.data(), y.data(), dim_);
  return y;
}

Eigen::MatrixXd solve_rotation_real(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.size() == 0) {
    throw ParameterError("solve_rotation_real: A and B must have equal, nonzero shapes");
  }
  const Eigen::MatrixXd cross = b * a.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace fftp
