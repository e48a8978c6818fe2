// Copyright 2026 The Ambig Authors.
//
// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Semirings used with weighted automata.
//
// A semiring type S exposes `Weight`, `Zero()`, `One()`, `Plus()`,
// `Times()` and `Distance()`, the last one being the metric used to test
// convergence of iterative algorithms.

#ifndef AMBIG_SEMIRING_H_
#define AMBIG_SEMIRING_H_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <ostream>

namespace ambig {

template <typename S>
concept Semiring = requires(const typename S::Weight &a) {
  { S::Zero() } -> std::convertible_to<typename S::Weight>;
  { S::One() } -> std::convertible_to<typename S::Weight>;
  { S::Plus(a, a) } -> std::convertible_to<typename S::Weight>;
  { S::Times(a, a) } -> std::convertible_to<typename S::Weight>;
  { S::Distance(a, a) } -> std::convertible_to<double>;
};

// Pair of extended reals.
struct PairWeight {
  double first = 0.0;
  double second = 0.0;

  friend bool operator==(const PairWeight &, const PairWeight &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const PairWeight &w) {
  return os << "(" << w.first << ", " << w.second << ")";
}

// (K x K, +, (x1 x2, x1 y2 + x2 y1), (0, 0), (1, 0)). Commutative.
struct EntropySemiring {
  using Weight = PairWeight;

  static Weight Zero() { return {0.0, 0.0}; }
  static Weight One() { return {1.0, 0.0}; }
  static Weight Plus(const Weight &a, const Weight &b) {
    return {a.first + b.first, a.second + b.second};
  }
  static Weight Times(const Weight &a, const Weight &b) {
    return {a.first * b.first, a.first * b.second + b.first * a.second};
  }
  static double Distance(const Weight &a, const Weight &b) {
    return std::max(std::abs(a.first - b.first),
                    std::abs(a.second - b.second));
  }
};

// Same algebra; only the weight mapping used with it differs.
struct ExpectationSemiring : EntropySemiring {};

// (R, +, x, 0, 1).
struct RealSemiring {
  using Weight = double;

  static Weight Zero() { return 0.0; }
  static Weight One() { return 1.0; }
  static Weight Plus(Weight a, Weight b) { return a + b; }
  static Weight Times(Weight a, Weight b) { return a * b; }
  static double Distance(Weight a, Weight b) { return std::abs(a - b); }
};

}  // namespace ambig

#endif  // AMBIG_SEMIRING_H_
