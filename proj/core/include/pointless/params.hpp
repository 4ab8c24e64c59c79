/*
   Copyright 2026 The pointless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POINTLESS_PARAMS_HPP
#define POINTLESS_PARAMS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace pointless {

struct SearchConfig {
  unsigned q = 2;
  int n = 0;
  double c1 = 1.0 / 48.0;
  double c2 = 0.5;
  /// Primes are drawn from (low * log_q n, high * log_q n].
  double window_low = 3.0;
  double window_high = 12.0;
  /// Upper bound on alpha + beta explored by the exhaustive fallback.
  std::int64_t max_exponent = 4096;
  /// Whether to fall back to an exhaustive search when no prime pair admits a
  /// Farey walk within its step bound.
  bool allow_fallback = true;
};

struct FareyNeighbor {
  std::int64_t h = 0;
  std::int64_t k = 0;
};

/// Predecessor h/k of l/m in the Farey series of order m - 1: k l - h m = 1.
/// Requires 0 < l < m and gcd(l, m) = 1.
FareyNeighbor farey_neighbor(std::int64_t l, std::int64_t m);

struct ParameterChoice {
  bool found = false;
  std::string method;  // "farey", "lattice-search" or "none"
  unsigned q = 0;
  int n = 0;
  std::uint64_t l = 0, m = 0;
  std::int64_t alpha = 0, beta = 0;
  // Walk data (Farey method): alpha = c - j h, beta = j k.
  std::int64_t h = 0, k = 0, c = 0, j = 0;
  bool step_bound_respected = false;  // j < c / h, i.e. j h < c
  mpz_class d;                         // (q^m-1)^alpha (q^l-1)^beta / (q-1)
  bool inequality_holds = false;       // exact check of r < d < r q, r = 4 q q^n / n
  bool large_exponent = false;         // max(alpha, beta) > c1 n / log_q n
  mpz_class genus_bound;               // (m alpha + l beta) d / 2, rounded up
  bool genus_bound_below_2q_qn1 = false;
  std::size_t pairs_tried = 0;
  std::string reason;  // why nothing was found
};

/// Exact check of 4 q^{n+1} (q-1) < n (q^m-1)^alpha (q^l-1)^beta < 4 q^{n+2} (q-1).
bool inequality_five(unsigned q, int n, std::uint64_t l, std::uint64_t m, std::int64_t alpha, std::int64_t beta);

/// Picks primes l < m < 2l in the window and exponents alpha, beta >= 0 (not
/// both zero) satisfying the inequality. The Farey walk is tried over all
/// prime pairs first; only if every walk fails is the exhaustive fallback
/// used, and the result then records method "lattice-search".
ParameterChoice select_parameters(const SearchConfig& cfg);

}  // namespace pointless

#endif
