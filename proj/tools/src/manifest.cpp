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

#include "mmac_cli/manifest.hpp"

#include "mmac/errors.hpp"
#include "mmac/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

#ifndef MMAC_VERSION
#define MMAC_VERSION "unknown"
#endif

namespace mmac::cli {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

RunManifest::RunManifest(std::filesystem::path config, std::filesystem::path output_dir)
    : config_(std::move(config)), output_dir_(std::move(output_dir)) {}

void RunManifest::write(const std::string& name, const std::string& kind, const std::string& content) {
  io::write_file_atomic(output_dir_ / name, content);
  artifacts_.push_back({name, kind, sha256_hex(content)});
}

void RunManifest::begin_stage(std::string name) {
  if (!open_stage_.empty()) end_stage();
  open_stage_ = std::move(name);
  stage_start_ = std::chrono::steady_clock::now();
}

void RunManifest::end_stage() {
  if (open_stage_.empty()) return;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - stage_start_).count();
  stages_.emplace_back(std::move(open_stage_), secs);
  open_stage_.clear();
}

std::string RunManifest::to_json() const {
  nlohmann::json root;
  root["tool"] = "mmac";
  root["version"] = MMAC_VERSION;
  root["config"] = config_.string();
  root["output_dir"] = output_dir_.string();
  auto& arts = root["artifacts"] = nlohmann::json::array();
  for (const auto& a : artifacts_) arts.push_back({{"name", a.name}, {"kind", a.kind}, {"sha256", a.sha256}});
  auto& st = root["stages"] = nlohmann::json::array();
  for (const auto& [name, secs] : stages_) st.push_back({{"name", name}, {"seconds", secs}});
  return root.dump(2) + "\n";
}

void RunManifest::save() const { io::write_file_atomic(output_dir_ / "manifest.json", to_json()); }

std::vector<std::string> check_manifest(const std::filesystem::path& manifest_path) {
  const auto root = nlohmann::json::parse(io::read_file(manifest_path));
  std::vector<std::string> bad;
  for (const auto& a : root.at("artifacts")) {
    const auto name = a.at("name").get<std::string>();
    const auto path = manifest_path.parent_path() / name;
    if (!std::filesystem::exists(path) || sha256_hex(io::read_file(path)) != a.at("sha256").get<std::string>()) {
      bad.push_back(name);
    }
  }
  return bad;
}

}  // namespace mmac::cli
