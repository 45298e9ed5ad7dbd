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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "backends.hpp"

namespace fftp::simd {
namespace {

bool cpu_has_avx2() {
#if defined(FFTP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Kernels* initial_selection() {
  const Kernels* avx2 = avx2_kernels();
  if (const char* env = std::getenv("FFTP_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &scalar_kernels();
}

std::atomic<const Kernels*>& selection() {
  static std::atomic<const Kernels*> current{initial_selection()};
  return current;
}

}  // namespace

const Kernels* avx2_kernels() {
#if defined(FFTP_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() { return *selection().load(std::memory_order_acquire); }

bool select_backend(Backend backend) {
  const Kernels* table =
      backend == Backend::kScalar ? &scalar_kernels() : avx2_kernels();
  if (table == nullptr) return false;
  selection().store(table, std::memory_order_release);
  return true;
}

}  // namespace fftp::simd
