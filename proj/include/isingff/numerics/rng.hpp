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

#include <array>
#include <cstdint>
#include <vector>

namespace isingff {

/// Philox4x32-10 block function (Salmon et al.), counter and key as 32-bit words.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based random stream. The key is the seed and the counter holds
/// (position, stream_id), so streams with different ids never overlap and any
/// position can be reached without replaying earlier draws.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t position = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  /// Index of the next Philox block.
  std::uint64_t position() const { return position_; }

  std::array<std::uint32_t, 4> next_block();
  /// Uniform double in the open interval (0, 1), 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; one block yields two normals.
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t position_;
  std::array<double, 2> normals_{};
  int cached_ = 0;
};

/// `steps` independent N(0, dt) increments drawn from `stream`.
std::vector<double> brownian_increments(RngStream& stream, int steps, double dt);

}  // namespace isingff
