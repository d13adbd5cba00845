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

#include "isingff/numerics/half_integer.hpp"

#include <stdexcept>

namespace isingff {

HalfInteger HalfInteger::from_twice(int twice) {
  if (twice % 2 == 0) {
    throw std::invalid_argument("HalfInteger: " + std::to_string(twice) + "/2 is an integer");
  }
  return HalfInteger(twice);
}

std::string HalfInteger::to_string() const { return std::to_string(twice_) + "/2"; }

std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.to_string(); }

}  // namespace isingff
