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

#ifndef MMAC_TYPES_HPP
#define MMAC_TYPES_HPP

#include <Eigen/Dense>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmac {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// 1-based index into a ModelSet. Ordering defines tie-breaking everywhere.
class ModelIndex {
 public:
  constexpr ModelIndex() = default;
  constexpr explicit ModelIndex(int one_based) : value_(one_based) {}

  constexpr int one_based() const { return value_; }
  constexpr std::size_t offset() const { return static_cast<std::size_t>(value_ - 1); }

  static constexpr ModelIndex from_offset(std::size_t offset) {
    return ModelIndex(static_cast<int>(offset) + 1);
  }

  constexpr auto operator<=>(const ModelIndex&) const = default;

 private:
  int value_ = 1;
};

inline std::string to_string(ModelIndex i) { return std::to_string(i.one_based()); }

}  // namespace mmac

#endif  // MMAC_TYPES_HPP
