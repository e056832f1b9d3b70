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

#ifndef MMAC_REGRET_OPTIONS_HPP
#define MMAC_REGRET_OPTIONS_HPP

namespace mmac {

/// Thresholds of the finite-horizon sublinearity check.
struct SublinearityOptions {
  double tail_fraction = 0.25;
  double peak_ratio_factor = 0.5;
};

}  // namespace mmac

#endif  // MMAC_REGRET_OPTIONS_HPP
