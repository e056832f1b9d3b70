/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef MMAC_CLI_MANIFEST_HPP
#define MMAC_CLI_MANIFEST_HPP

#include <chrono>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mmac::cli {

std::string sha256_hex(const std::string& data);

struct Artifact {
  std::string name;
  std::string kind;
  std::string sha256;
};

/// Records every file a command writes together with per-stage timings.
class RunManifest {
 public:
  RunManifest(std::filesystem::path config, std::filesystem::path output_dir);

  /// Writes `content` atomically under the output directory and records it.
  void write(const std::string& name, const std::string& kind, const std::string& content);

  void begin_stage(std::string name);
  void end_stage();

  const std::vector<Artifact>& artifacts() const { return artifacts_; }
  const std::filesystem::path& output_dir() const { return output_dir_; }

  std::string to_json() const;
  /// Writes manifest.json next to the artifacts.
  void save() const;

 private:
  std::filesystem::path config_;
  std::filesystem::path output_dir_;
  std::vector<Artifact> artifacts_;
  std::vector<std::pair<std::string, double>> stages_;
  std::string open_stage_;
  std::chrono::steady_clock::time_point stage_start_;
};

/// Re-hashes every listed artifact; returns the names that are missing or
/// whose checksum differs.
std::vector<std::string> check_manifest(const std::filesystem::path& manifest_path);

}  // namespace mmac::cli

#endif  // MMAC_CLI_MANIFEST_HPP
