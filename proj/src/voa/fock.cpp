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

#include "isingff/voa/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace isingff::voa {

int twice_level(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

TruncationConfig TruncationConfig::make(Rational L, Rational a0, bool strict) {
  if (L < Rational(5, 2)) throw std::invalid_argument("TruncationConfig: L must be >= 5/2");
  if (a0 != Rational(0) && a0 != Rational(1, 16)) {
    throw std::invalid_argument("TruncationConfig: a0 must be 0 or 1/16");
  }
  const Rational twice = 2 * L;
  if (twice.denominator() != 1) throw std::invalid_argument("TruncationConfig: L must be in Z/2");
  return {static_cast<int>(twice.numerator()), a0, strict};
}

FockVector FockVector::vacuum() { return monomial({}); }

FockVector FockVector::monomial(const Monomial& m, Rational c) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] <= 0 || m[i] % 2 == 0 || (i > 0 && m[i] >= m[i - 1])) {
      throw std::invalid_argument("FockVector::monomial: need odd positive strictly decreasing entries");
    }
  }
  FockVector v;
  v.add(m, c);
  return v;
}

Rational FockVector::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const Monomial& m, Rational c) {
  if (c.numerator() == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

int FockVector::twice_level() const {
  int level = 0;
  for (const auto& [m, c] : terms_) level = std::max(level, voa::twice_level(m));
  return level;
}

int FockVector::parity() const {
  int p = 0;
  for (const auto& [m, c] : terms_) {
    const int q = m.size() % 2 == 0 ? 1 : -1;
    if (p != 0 && p != q) return 0;
    p = q;
  }
  return p;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  clipped_ = clipped_ || other.clipped_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  clipped_ = clipped_ || other.clipped_;
  return *this;
}

FockVector& FockVector::operator*=(Rational c) {
  if (c.numerator() == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Rational FockVector::max_abs() const {
  Rational best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, boost::abs(c));
  return best;
}

std::string to_string(Rational r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest level first reads better.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << voa::to_string(it->second);
    for (int a : it->first) out << " psi[-" << a << "/2]";
    out << " |0>";
  }
  return out.str();
}

namespace {

void distinct_odd_parts(int remaining, int max_part, Monomial& current, std::vector<Monomial>& out) {
  out.push_back(current);
  for (int a = std::min(max_part, remaining); a >= 1; --a) {
    if (a % 2 == 0) continue;
    current.push_back(a);
    distinct_odd_parts(remaining - a, a - 2, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> basis_states(int twice_L) {
  if (twice_L < 0) throw std::invalid_argument("basis_states: negative level");
  std::vector<Monomial> out;
  Monomial current;
  distinct_odd_parts(twice_L, twice_L, current, out);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return voa::twice_level(a) < voa::twice_level(b);
  });
  return out;
}

FockVector truncate(FockVector v, const TruncationConfig& cfg) {
  if (v.twice_level() <= cfg.twice_L) return v;
  if (cfg.strict) throw std::overflow_error("truncate: truncation overflow");
  FockVector out;
  for (const auto& [m, c] : v.terms()) {
    if (twice_level(m) <= cfg.twice_L) out.add(m, c);
  }
  out.mark_clipped();
  return out;
}

FockVector apply_psi_mode(ModeIndex n, const FockVector& v, const TruncationConfig& cfg) {
  FockVector out;
  if (v.clipped()) out.mark_clipped();
  const int a = std::abs(n.twice());
  for (const auto& [m, c] : v.terms()) {
    const auto pos = std::find_if(m.begin(), m.end(), [a](int x) { return x <= a; });
    const bool present = pos != m.end() && *pos == a;
    const auto p = pos - m.begin();
    const Rational sign = p % 2 == 0 ? 1 : -1;
    if (n.twice() < 0) {
      if (present) continue;
      if (twice_level(m) + a > cfg.twice_L) {
        if (cfg.strict) throw std::overflow_error("apply_psi_mode: truncation overflow");
        out.mark_clipped();
        continue;
      }
      Monomial r = m;
      r.insert(r.begin() + p, a);
      out.add(r, sign * c);
    } else {
      // psi_n anticommutes past p creators, then {psi_n, psi_{-n}} = 1.
      if (!present) continue;
      Monomial r = m;
      r.erase(r.begin() + p);
      out.add(r, sign * c);
    }
  }
  return out;
}

}  // namespace isingff::voa
