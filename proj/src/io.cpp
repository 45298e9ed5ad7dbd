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

#include "fftp/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

#include "fftp/error.hpp"

namespace fftp::io {
namespace fs = std::filesystem;

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  if (ec != std::errc{}) throw IoError("number formatting failed");
  return std::string(buf.data(), end);
}

std::string format_fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw IoError("number formatting failed");
  return std::string(buf.data(), end);
}

std::string matrix_csv(const Image& image) {
  std::string out;
  out.reserve(image.size() * 24);
  for (std::size_t r = 0; r < image.height(); ++r) {
    for (std::size_t c = 0; c < image.width(); ++c) {
      if (c != 0) out += ',';
      out += format_number(image(r, c));
    }
    out += '\n';
  }
  return out;
}

Image parse_matrix_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::size_t cols = 0;
    while (true) {
      const std::size_t comma = line.find(',');
      std::string_view cell = line.substr(0, comma);
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
      if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw IoError("matrix CSV line " + std::to_string(line_no) +
                      ": invalid number '" + std::string(cell) + "'");
      }
      values.push_back(v);
      ++cols;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (height == 0) {
      width = cols;
    } else if (cols != width) {
      throw IoError("matrix CSV line " + std::to_string(line_no) + " has " +
                    std::to_string(cols) + " columns, expected " +
                    std::to_string(width));
    }
    ++height;
  }
  if (height == 0) throw IoError("matrix CSV is empty");
  return Image(width, height, std::move(values));
}

Image read_matrix_csv(const fs::path& path) {
  return parse_matrix_csv(read_file(path));
}

std::string blob_csv(const BlobSet& blobs) {
  std::string out = "cx,cy,sigma_x,sigma_y,amplitude\n";
  for (const auto& b : blobs.blobs()) {
    out += format_number(b.cx) + ',' + format_number(b.cy) + ',' +
           format_number(b.sigma_x) + ',' + format_number(b.sigma_y) + ',' +
           format_number(b.amplitude) + '\n';
  }
  return out;
}

std::string pgm16(const Image& image, PgmBounds* bounds) {
  const auto vals = image.values();
  const auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
  const double lo = vals.empty() ? 0.0 : *lo_it;
  const double hi = vals.empty() ? 0.0 : *hi_it;
  if (bounds != nullptr) *bounds = {lo, hi};

  std::string out = "P5\n" + std::to_string(image.width()) + " " +
                    std::to_string(image.height()) + "\n65535\n";
  const std::size_t header = out.size();
  out.resize(header + 2 * vals.size());
  const double span = hi - lo;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double t = span > 0.0 ? (vals[i] - lo) / span : 0.0;
    const auto q = static_cast<std::uint16_t>(std::lround(std::clamp(t, 0.0, 1.0) * 65535.0));
    out[header + 2 * i] = static_cast<char>(q >> 8);
    out[header + 2 * i + 1] = static_cast<char>(q & 0xFF);
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return ss.str();
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write error on '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(line_no) +
                           ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

Manifest::Manifest(fs::path out_dir) : out_dir_(std::move(out_dir)) {}

void Manifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void Manifest::write(const std::string& name, std::string_view bytes) {
  write_file_atomic(out_dir_ / name, bytes);
  files_.emplace_back(name, sha256_hex(bytes));
}

void Manifest::save(const std::string& name) {
  std::string text;
  for (const auto& [k, v] : entries_) text += k + '=' + v + '\n';
  text += "files=" + std::to_string(files_.size()) + '\n';
  for (const auto& [file, digest] : files_) {
    text += "file." + file + ".sha256=" + digest + '\n';
  }
  write_file_atomic(out_dir_ / name, text);
}

}  // namespace fftp::io
