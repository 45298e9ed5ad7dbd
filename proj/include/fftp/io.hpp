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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fftp/grid.hpp"
#include "fftp/synthgen.hpp"

namespace fftp::io {

/// Shortest text that round-trips a double, at 17 significant digits.
std::string format_number(double v);
/// Fixed-point text with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

/// Plain comma-separated rows, no header, one image row per line.
std::string matrix_csv(const Image& image);
Image parse_matrix_csv(std::string_view text);
Image read_matrix_csv(const std::filesystem::path& path);

/// Header cx,cy,sigma_x,sigma_y,amplitude then one blob per line.
std::string blob_csv(const BlobSet& blobs);

struct PgmBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Binary 16-bit PGM (P5, maxval 65535), min-max normalized. A constant
/// image maps to all zeros.
std::string pgm16(const Image& image, PgmBounds* bounds = nullptr);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

/// key=value lines; blank lines and lines starting with '#' are ignored.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Flat key=value run record. Files added through write() are checksummed
/// and listed; save() writes the record itself last.
class Manifest {
 public:
  explicit Manifest(std::filesystem::path out_dir);

  void set(std::string key, std::string value);
  void write(const std::string& name, std::string_view bytes);
  void save(const std::string& name = "manifest.txt");

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  const std::vector<std::pair<std::string, std::string>>& files() const {
    return files_;
  }

 private:
  std::filesystem::path out_dir_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::pair<std::string, std::string>> files_;  // name, sha256
};

}  // namespace fftp::io
