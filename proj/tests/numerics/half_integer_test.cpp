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

#include <gtest/gtest.h>

#include <stdexcept>

namespace isingff {
namespace {

TEST(HalfInteger, RejectsIntegers) {
  EXPECT_THROW(HalfInteger::from_twice(4), std::invalid_argument);
  EXPECT_THROW(HalfInteger::from_twice(0), std::invalid_argument);
  EXPECT_NO_THROW(HalfInteger::from_twice(-3));
}

TEST(HalfInteger, Arithmetic) {
  const auto a = HalfInteger::from_twice(5);
  EXPECT_DOUBLE_EQ(a.value(), 2.5);
  EXPECT_EQ((-a).twice(), -5);
  EXPECT_EQ((a + 1).twice(), 7);
  EXPECT_EQ(a - HalfInteger::from_twice(-1), 3);
  EXPECT_LT(HalfInteger::from_twice(-1), HalfInteger::from_twice(1));
  EXPECT_EQ(a.to_string(), "5/2");
}

}  // namespace
}  // namespace isingff
