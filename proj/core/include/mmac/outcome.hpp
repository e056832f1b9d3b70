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

#ifndef MMAC_OUTCOME_HPP
#define MMAC_OUTCOME_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace mmac {

/// Either a value or the reason an otherwise well-posed computation had no
/// solution (e.g. an infeasible attenuation level). Structural misuse is
/// reported through exceptions instead.
template <typename T>
class Outcome {
 public:
  static Outcome success(T value) { return Outcome(std::move(value), {}); }
  static Outcome failure(std::string reason) { return Outcome(std::nullopt, std::move(reason)); }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Outcome::value() on failure: " + reason_);
    return *value_;
  }
  T&& value() && {
    if (!value_) throw std::logic_error("Outcome::value() on failure: " + reason_);
    return std::move(*value_);
  }
  const T* operator->() const { return &value(); }

  const std::string& reason() const { return reason_; }

 private:
  Outcome(std::optional<T> value, std::string reason)
      : value_(std::move(value)), reason_(std::move(reason)) {}

  std::optional<T> value_;
  std::string reason_;
};

}  // namespace mmac

#endif  // MMAC_OUTCOME_HPP
