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

#include "fftp/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <map>
#include <optional>

#include "fftp/error.hpp"
#include "fftp/io.hpp"
#include "fftp/pipeline.hpp"
#include "fftp/simd/kernels.hpp"

#ifndef FFTP_VERSION
#define FFTP_VERSION "0.0.0"
#endif

namespace fftp::cli {
namespace {

namespace fs = std::filesystem;
using Config = std::map<std::string, std::string>;

constexpr std::uint64_t kDefaultSeed = 42;

struct Flags {
  std::optional<std::size_t> width;
  std::optional<std::size_t> height;
  std::optional<std::size_t> blobs;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::optional<double> downsample;
  std::optional<std::size_t> keep_w;
  std::optional<std::size_t> keep_h;
  std::optional<double> noise;
  std::optional<std::size_t> extra_peaks;
  std::optional<double> widen;
  bool explicit_operator = false;
  std::optional<std::string> out_dir;
  std::optional<std::string> config;
  // align / metrics inputs
  std::string target;
  std::string distorted;
  std::string lhs;
  std::string rhs;
};

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParameterError("invalid value '" + text + "' for " + key);
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw ParameterError("invalid boolean '" + text + "' for " + key);
}

// Flag value, then config file value, then the built-in default.
template <typename T>
T pick(const std::optional<T>& flag, const Config& cfg, const std::string& key,
       T fallback) {
  if (flag) return *flag;
  if (auto it = cfg.find(key); it != cfg.end()) return parse_value<T>(key, it->second);
  return fallback;
}

template <typename T>
std::optional<T> pick_optional(const std::optional<T>& flag, const Config& cfg,
                               const std::string& key) {
  if (flag) return flag;
  if (auto it = cfg.find(key); it != cfg.end()) return parse_value<T>(key, it->second);
  return std::nullopt;
}

Config load_config(const Flags& f) {
  if (!f.config) return {};
  return io::parse_key_values(io::read_file(*f.config));
}

std::uint64_t resolve_seed(const Flags& f, const Config& cfg) {
  if (f.seed) return *f.seed;
  if (auto it = cfg.find("seed"); it != cfg.end()) {
    return parse_value<std::uint64_t>("seed", it->second);
  }
  if (const char* env = std::getenv("FFTP_SEED"); env != nullptr && *env != '\0') {
    return parse_value<std::uint64_t>("FFTP_SEED", env);
  }
  return kDefaultSeed;
}

AlignConfig resolve_align(const Flags& f, const Config& cfg) {
  AlignConfig a;
  a.downsample_total_factor = pick(f.downsample, cfg, "downsample", 4.0);
  a.keep_w = pick_optional(f.keep_w, cfg, "keep-w");
  a.keep_h = pick_optional(f.keep_h, cfg, "keep-h");
  a.explicit_operator = f.explicit_operator;
  if (!a.explicit_operator) {
    if (auto it = cfg.find("explicit-operator"); it != cfg.end()) {
      a.explicit_operator = parse_bool("explicit-operator", it->second);
    }
  }
  return a;
}

ExperimentConfig resolve_experiment(const Flags& f, const Config& cfg) {
  ExperimentConfig c;
  c.width = pick(f.width, cfg, "width", c.width);
  c.height = pick(f.height, cfg, "height", c.height);
  c.n_blobs = pick(f.blobs, cfg, "blobs", c.n_blobs);
  c.alpha = pick(f.alpha, cfg, "alpha", c.alpha);
  c.master_seed = resolve_seed(f, cfg);
  c.noise_fraction = pick(f.noise, cfg, "noise", c.noise_fraction);
  c.extra_peaks = pick(f.extra_peaks, cfg, "extra-peaks", c.extra_peaks);
  c.widen_factor = pick(f.widen, cfg, "widen", c.widen_factor);
  c.align = resolve_align(f, cfg);
  if (c.n_blobs < 1) throw ParameterError("--blobs must be at least 1");
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) {
    throw ParameterError("--alpha must lie in [0, 1]");
  }
  if (c.width < 8 || c.height < 8 || c.width % 2 != 0 || c.height % 2 != 0) {
    throw ParameterError("--width and --height must be even and at least 8");
  }
  return c;
}

fs::path prepare_out_dir(const Flags& f, const Config& cfg,
                         const std::string& fallback) {
  fs::path dir = f.out_dir ? *f.out_dir : fallback;
  if (!f.out_dir) {
    if (auto it = cfg.find("out-dir"); it != cfg.end()) dir = it->second;
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
  return dir;
}

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr) {
    t = static_cast<std::time_t>(parse_value<long long>("SOURCE_DATE_EPOCH", epoch));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

io::Manifest start_manifest(const fs::path& dir, const std::string& command) {
  io::Manifest m(dir);
  m.set("tool", "fftp");
  m.set("version", FFTP_VERSION);
  m.set("command", command);
  m.set("timestamp", timestamp());
  m.set("simd_backend", std::string(simd::active().name));
  return m;
}

void record_experiment(io::Manifest& m, const ExperimentConfig& c) {
  m.set("config.width", std::to_string(c.width));
  m.set("config.height", std::to_string(c.height));
  m.set("config.blobs", std::to_string(c.n_blobs));
  m.set("config.alpha", io::format_number(c.alpha));
  m.set("config.seed", std::to_string(c.master_seed));
  m.set("config.noise", io::format_number(c.noise_fraction));
  m.set("config.extra_peaks", std::to_string(c.extra_peaks));
  m.set("config.widen", io::format_number(c.widen_factor));
  m.set("config.sigma_range", io::format_number(c.sigma_range.lo) + ":" +
                                  io::format_number(c.sigma_range.hi));
  m.set("config.amplitude_range", io::format_number(c.amplitude_range.lo) + ":" +
                                      io::format_number(c.amplitude_range.hi));
  m.set("config.downsample", io::format_number(c.align.downsample_total_factor));
  m.set("config.explicit_operator", c.align.explicit_operator ? "true" : "false");
}

void write_image(io::Manifest& m, const std::string& stem, const Image& image,
                 bool with_csv) {
  if (with_csv) m.write(stem + ".csv", io::matrix_csv(image));
  io::PgmBounds b;
  const std::string pgm = io::pgm16(image, &b);
  m.set("image." + stem + ".pgm.min", io::format_number(b.min));
  m.set("image." + stem + ".pgm.max", io::format_number(b.max));
  m.write(stem + ".pgm", pgm);
}

int cmd_synth(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  const ExperimentConfig c = resolve_experiment(f, cfg);
  const fs::path dir = prepare_out_dir(f, cfg, "fftp_synth");
  const ExperimentInputs in = make_inputs(c);

  io::Manifest m = start_manifest(dir, "synth");
  record_experiment(m, c);
  write_image(m, "target", in.target, true);
  for (const auto& [variant, image] : in.distorted) {
    const std::string stem = variant == Variant::kNoNoise
                                 ? "distorted"
                                 : "distorted_" + variant_slug(variant);
    write_image(m, stem, image, true);
  }
  m.write("blobs.csv", io::blob_csv(in.target_blobs));
  m.write("blobs_distorted.csv", io::blob_csv(in.distorted_blobs));
  m.save();
  out << "wrote " << m.files().size() << " files to " << dir.string() << "\n";
  return kSuccess;
}

int cmd_align(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  const AlignConfig a = resolve_align(f, cfg);
  const std::string target_text = io::read_file(f.target);
  const std::string distorted_text = io::read_file(f.distorted);
  const Image target = io::parse_matrix_csv(target_text);
  const Image distorted = io::parse_matrix_csv(distorted_text);
  if (target.width() != distorted.width() || target.height() != distorted.height()) {
    throw ParameterError("dimension mismatch: target is " +
                         std::to_string(target.width()) + "x" +
                         std::to_string(target.height()) + ", distorted is " +
                         std::to_string(distorted.width()) + "x" +
                         std::to_string(distorted.height()));
  }
  const fs::path dir = prepare_out_dir(f, cfg, "fftp_align");
  const AlignmentResult r = align(target, distorted, a);

  io::Manifest m = start_manifest(dir, "align");
  m.set("input.target", f.target);
  m.set("input.target.sha256", io::sha256_hex(target_text));
  m.set("input.distorted", f.distorted);
  m.set("input.distorted.sha256", io::sha256_hex(distorted_text));
  m.set("config.downsample", io::format_number(a.downsample_total_factor));
  m.set("config.explicit_operator", a.explicit_operator ? "true" : "false");
  m.set("keep_w", std::to_string(r.keep_w));
  m.set("keep_h", std::to_string(r.keep_h));
  m.set("vector_length", std::to_string(r.vector_length));
  write_image(m, "aligned", r.aligned, true);
  m.write("metrics.csv",
          "cosine,scale,residual,max_imag,max_real,vector_length\n" +
              io::format_number(r.cosine_vs_target) + ',' +
              io::format_number(r.scale) + ',' + io::format_number(r.residual) +
              ',' + io::format_number(r.max_imag) + ',' +
              io::format_number(r.max_real) + ',' +
              std::to_string(r.vector_length) + '\n');
  m.save();
  out << "cosine=" << io::format_fixed(r.cosine_vs_target, 6)
      << " scale=" << io::format_number(r.scale)
      << " vector_length=" << r.vector_length << "\n";
  return kSuccess;
}

int cmd_reproduce(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  const ExperimentConfig c = resolve_experiment(f, cfg);
  const fs::path dir = prepare_out_dir(f, cfg, "fftp_reproduce");
  const ExperimentReport report = run_experiment(c);

  io::Manifest m = start_manifest(dir, "reproduce");
  record_experiment(m, c);
  if (!report.variants.empty()) {
    m.set("vector_length", std::to_string(report.variants.front().result.vector_length));
  }

  std::string table = "variant,cosine\n";
  for (const auto& row : report.table()) {
    table += row.name + ',' + io::format_fixed(row.value, 4) + '\n';
  }
  std::string detail = "variant,cosine,scale,residual,max_imag\n";
  for (const auto& v : report.variants) {
    detail += variant_label(v.variant) + ',' +
              io::format_number(v.result.cosine_vs_target) + ',' +
              io::format_number(v.result.scale) + ',' +
              io::format_number(v.result.residual) + ',' +
              io::format_number(v.result.max_imag) + '\n';
  }
  m.write("table_cos.csv", table);
  m.write("variants.csv", detail);

  // One row per variant: original, shifted, aligned.
  int row = 1;
  for (const auto& v : report.variants) {
    const std::string prefix = "fig_r" + std::to_string(row++) + "_";
    write_image(m, prefix + "original", report.target, false);
    write_image(m, prefix + "shifted", v.distorted, false);
    write_image(m, prefix + "aligned", v.result.aligned, false);
  }
  m.save();
  out << table;
  return kSuccess;
}

int cmd_metrics(const Flags& f, std::ostream& out) {
  const Image a = io::read_matrix_csv(f.lhs);
  const Image b = io::read_matrix_csv(f.rhs);
  if (a.width() != b.width() || a.height() != b.height()) {
    throw ParameterError("dimension mismatch between '" + f.lhs + "' and '" +
                         f.rhs + "'");
  }
  const std::string text = "cosine,rmse\n" +
                           io::format_number(cosine_correlation(a.values(), b.values())) +
                           ',' + io::format_number(rmse(a.values(), b.values())) + '\n';
  if (f.out_dir) {
    const Config cfg;
    const fs::path dir = prepare_out_dir(f, cfg, *f.out_dir);
    io::write_file_atomic(dir / "metrics.csv", text);
  }
  out << text;
  return kSuccess;
}

void add_experiment_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--width", f.width, "Image width in pixels (default 256)");
  cmd->add_option("--height", f.height, "Image height in pixels (default 256)");
  cmd->add_option("--blobs", f.blobs, "Number of Gaussian blobs (default 20)");
  cmd->add_option("--alpha", f.alpha, "Log-distortion blending factor (default 0.5)");
  cmd->add_option("--seed", f.seed, "Master seed (fallback: FFTP_SEED, then 42)");
  cmd->add_option("--noise", f.noise, "Noise sd as a fraction of the max (default 0.1)");
  cmd->add_option("--extra-peaks", f.extra_peaks, "Extra peaks in variant 3 (default 3)");
  cmd->add_option("--widen", f.widen, "Width factor for variant 4 (default 1.5)");
}

void add_align_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--downsample", f.downsample,
                  "Total coefficient reduction factor (default 4)");
  cmd->add_option("--keep-w", f.keep_w, "Retained frequency columns (overrides --downsample)");
  cmd->add_option("--keep-h", f.keep_h, "Retained frequency rows (overrides --downsample)");
  cmd->add_flag("--explicit-operator", f.explicit_operator,
                "Materialize the dense rotation matrix (size-capped)");
}

void add_io_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out-dir", f.out_dir, "Output directory");
  cmd->add_option("--config", f.config, "key=value config file (flags take precedence)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FFT-Procrustes alignment of 2D separations images", "fftp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FFTP_VERSION);
  Flags f;

  auto* synth = app.add_subcommand("synth", "Generate synthetic target and distorted images");
  add_experiment_flags(synth, f);
  add_io_flags(synth, f);

  auto* align_cmd = app.add_subcommand("align", "Align a distorted matrix CSV onto a target");
  align_cmd->add_option("--target", f.target, "Target matrix CSV")->required();
  align_cmd->add_option("--distorted", f.distorted, "Distorted matrix CSV")->required();
  add_align_flags(align_cmd, f);
  add_io_flags(align_cmd, f);

  auto* reproduce = app.add_subcommand("reproduce", "Run the four-variant experiment");
  add_experiment_flags(reproduce, f);
  add_align_flags(reproduce, f);
  add_io_flags(reproduce, f);

  auto* metrics = app.add_subcommand("metrics", "Cosine correlation and RMSE of two matrix CSVs");
  metrics->add_option("lhs", f.lhs, "First matrix CSV")->required();
  metrics->add_option("rhs", f.rhs, "Second matrix CSV")->required();
  metrics->add_option("--out-dir", f.out_dir, "Also write metrics.csv here");

  std::vector<std::string> argv_storage{"fftp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParameterError;
  }

  try {
    if (synth->parsed()) return cmd_synth(f, out);
    if (align_cmd->parsed()) return cmd_align(f, out);
    if (reproduce->parsed()) return cmd_reproduce(f, out);
    if (metrics->parsed()) return cmd_metrics(f, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const DegenerateInputError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const DomainError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const LayoutError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kUsage;
}

}  // namespace fftp::cli
