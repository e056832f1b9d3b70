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

#ifndef MMAC_CONFIG_HPP
#define MMAC_CONFIG_HPP

#include "mmac/disturbance.hpp"
#include "mmac/model_set.hpp"
#include "mmac/regret_options.hpp"
#include "mmac/types.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace mmac {

/// Everything needed to run one experiment. Validated on construction by
/// the loader; treat as immutable.
struct ExperimentConfig {
  ModelSet model_set;
  Penalties penalties;
  ModelIndex true_model{1};
  Vector x0;
  int horizon = 0;
  std::optional<double> gamma;  // attenuation level; searched when absent
  DisturbanceRequest disturbance;
  SublinearityOptions sublinearity;
};

/// Throws ValidationError on any violated invariant.
void validate(const ExperimentConfig& cfg);

/// JSON config, see README for the schema. External disturbance files are
/// resolved relative to the config's directory. Throws ParseError or
/// ValidationError.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});

std::string dump_config(const ExperimentConfig& cfg);
void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path);

}  // namespace mmac

#endif  // MMAC_CONFIG_HPP
