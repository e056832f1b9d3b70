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

#ifndef MMAC_CLI_COMMANDS_HPP
#define MMAC_CLI_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mmac::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,  // also used for a failed verification
  kInputError = 2,
  kDivergence = 3,
};

/// Environment variable that overrides the default output directory. An
/// explicit --out flag wins over it.
inline constexpr const char* kOutputDirEnv = "MMAC_OUTPUT_DIR";

struct SynthHinfArgs {
  std::filesystem::path config;
  std::optional<int> model;
  std::optional<double> gamma;
  std::string criterion = "certified";  // or "recursion"
  std::optional<std::filesystem::path> out;
};

struct SynthMinimaxArgs {
  std::filesystem::path config;
  std::optional<double> gamma;
  std::optional<std::filesystem::path> out;
};

struct VerifyArgs {
  std::filesystem::path certificate;
  std::filesystem::path config;
  double tolerance = 1e-8;
};

struct RunArgs {
  std::filesystem::path config;
  std::string scenario;  // fig1, fig2, fig3, or empty for the config's own disturbance
  std::optional<std::filesystem::path> certificate;
  std::optional<std::filesystem::path> out;
  bool svg = false;
};

struct ScanArgs {
  std::filesystem::path config;
  std::optional<int> model;
  std::optional<double> gamma;
  int grid = 4096;
  std::optional<std::filesystem::path> out;
};

int synth_hinf(const SynthHinfArgs& args, std::ostream& out);
int synth_minimax(const SynthMinimaxArgs& args, std::ostream& out);
int verify(const VerifyArgs& args, std::ostream& out);
int run(const RunArgs& args, std::ostream& out);
int scan(const ScanArgs& args, std::ostream& out);

/// Parses argv and dispatches. Library exceptions are mapped onto exit
/// codes and reported on `err`.
int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// --out when given, otherwise $MMAC_OUTPUT_DIR (or "mmac_out") joined with
/// `leaf`.
std::filesystem::path resolve_output_dir(const std::optional<std::filesystem::path>& flag,
                                         const std::filesystem::path& leaf = {});

}  // namespace mmac::cli

#endif  // MMAC_CLI_COMMANDS_HPP
