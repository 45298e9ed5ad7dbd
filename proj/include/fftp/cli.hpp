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

#include <ostream>
#include <string>
#include <vector>

namespace fftp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParameterError = 2,
  kIoError = 3,
  kNumericalError = 4,
  kCapacityError = 5,
};

/// Runs the fftp command line with `args` (program name excluded).
/// Subcommands: synth, align, reproduce, metrics.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fftp::cli
