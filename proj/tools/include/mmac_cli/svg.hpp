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

#ifndef MMAC_CLI_SVG_HPP
#define MMAC_CLI_SVG_HPP

#include <string>
#include <vector>

namespace mmac::cli {

struct Series {
  std::string label;
  std::vector<double> y;  // plotted against its index
};

/// Static line chart with linear axes. NaN samples break the line.
std::string svg_line_chart(const std::string& title, const std::vector<Series>& series);

}  // namespace mmac::cli

#endif  // MMAC_CLI_SVG_HPP
