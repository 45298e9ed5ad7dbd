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

#include <cstdint>
#include <random>
#include <string_view>

namespace fftp {

/// Seeded 64-bit generator with named substreams.
///
/// Each (seed, purpose) pair maps to an independent Mersenne Twister state
/// through std::seed_seq. Uniforms and normals are derived here rather than
/// through std distributions; streams are identical across toolchains.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view purpose);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi]; returns lo exactly when lo == hi.
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seed of the substream `purpose` of `master`, for handing to functions that
/// take a plain seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose);

}  // namespace fftp
