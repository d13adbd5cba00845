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

#include "isingff/numerics/half_integer.hpp"

#include <boost/rational.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace isingff::voa {

// Compare Rational with Rational only: boost 1.74 mixed int comparisons recurse
// forever under C++20 rewritten operators.
using Rational = boost::rational<long long>;
/// Fermion mode index n in Z + 1/2.
using ModeIndex = HalfInteger;

/// psi_{-a_1/2} ... psi_{-a_r/2} |0>, stored as the odd positive integers
/// a_1 > ... > a_r. Its level is (a_1 + ... + a_r)/2.
using Monomial = std::vector<int>;

int twice_level(const Monomial& m);

struct TruncationConfig {
  /// Twice the maximal level kept.
  int twice_L = 12;
  /// Constant added to L_0; 0 or 1/16.
  Rational a0 = 0;
  /// Throw std::overflow_error instead of clipping.
  bool strict = false;

  /// Throws std::invalid_argument for L < 5/2 or a0 outside {0, 1/16}.
  static TruncationConfig make(Rational L, Rational a0 = 0, bool strict = false);
};

/// Finite rational combination of monomials. `clipped` records that some
/// operator application dropped terms above the truncation level; it survives
/// every later operation on the vector.
class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum();
  /// Throws std::invalid_argument unless the entries are odd, positive and
  /// strictly decreasing.
  static FockVector monomial(const Monomial& m, Rational c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  void add(const Monomial& m, Rational c);

  bool is_zero() const { return terms_.empty(); }
  /// Max level over terms; 0 for the zero vector.
  int twice_level() const;
  /// +1 or -1 when all terms have an even or odd number of modes, 0 if mixed
  /// or zero.
  int parity() const;

  bool clipped() const { return clipped_; }
  void mark_clipped() { clipped_ = true; }

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Rational c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(Rational c, FockVector a) { return a *= c; }
  /// Compares terms only.
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  /// Largest |coefficient|.
  Rational max_abs() const;
  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
  bool clipped_ = false;
};

/// Every monomial of level <= twice_L / 2, vacuum first, ordered by level.
std::vector<Monomial> basis_states(int twice_L);

/// psi_n v. Creation that would exceed the truncation is dropped and flagged
/// (or throws if cfg.strict).
FockVector apply_psi_mode(ModeIndex n, const FockVector& v, const TruncationConfig& cfg);

/// Drops terms above cfg.twice_L, flagging or throwing as apply_psi_mode does.
FockVector truncate(FockVector v, const TruncationConfig& cfg);

std::string to_string(Rational r);

inline std::ostream& operator<<(std::ostream& os, const FockVector& v) { return os << v.to_string(); }

}  // namespace isingff::voa
