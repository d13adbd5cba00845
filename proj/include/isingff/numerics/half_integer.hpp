/*
 * Copyright 2026 The isingff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace isingff {

/// A number in Z + 1/2, stored as its (odd) double.
class HalfInteger {
 public:
  /// Throws std::invalid_argument if `twice` is even.
  static HalfInteger from_twice(int twice);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  constexpr HalfInteger operator+(int n) const { return HalfInteger(twice_ + 2 * n); }
  constexpr HalfInteger operator-(int n) const { return HalfInteger(twice_ - 2 * n); }
  /// The difference of two half-integers is an integer.
  constexpr int operator-(HalfInteger other) const { return (twice_ - other.twice_) / 2; }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_;
};

std::ostream& operator<<(std::ostream& os, HalfInteger h);

}  // namespace isingff
