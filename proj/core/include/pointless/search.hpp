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

#ifndef POINTLESS_SEARCH_HPP
#define POINTLESS_SEARCH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointless/ray_class.hpp"

namespace pointless {

struct ScanOptions {
  unsigned threads = 1;
  /// Stop after the first place degree that contains a violation. The
  /// witness is the same either way.
  bool stop_at_first_violation = true;
};

/// Classes in H of every place of degree < n coprime to the modulus, so that
/// many extensions over the same group can be scanned cheaply.
class PlaceClassCache {
 public:
  struct Entry {
    std::uint64_t index;  // lower coefficients, as enumerated
    Vec h;
  };
  PlaceClassCache(RayClassPtr group, int n, const ScanOptions& opts = {});

  const RayClassPtr& group() const noexcept { return group_; }
  int n() const noexcept { return n_; }
  /// Unramified places of degree t (1 <= t < n) in enumeration order.
  const std::vector<Entry>& degree(int t) const { return by_degree_.at(static_cast<std::size_t>(t)); }
  std::uint64_t size() const noexcept;

 private:
  RayClassPtr group_;
  int n_;
  std::vector<std::vector<Entry>> by_degree_;
};

struct Witness {
  std::string place;  // printed polynomial or "inf"
  int degree = 0;
  std::int64_t f = 0;
  bool ramified = false;
};

struct DegreeTally {
  int degree = 0;
  std::uint64_t places = 0;
  /// Smallest f * deg P over places of this degree.
  std::int64_t min_residue_degree = 0;
};

struct PointlessReport {
  int n = 0;
  bool verdict = false;
  std::int64_t degree = 0;
  mpz_class genus;
  std::optional<Witness> witness;
  std::vector<DegreeTally> tallies;
  std::uint64_t places_scanned = 0;
  bool complete = false;  // every degree below n was scanned
};

/// Checks that no place of degree < n (finite, ramified or infinite) has a
/// place above it of degree < n, i.e. deg P * f(P) >= n for all of them.
/// Scan order, and hence the witness, is: infinity, then places by degree and
/// enumeration index.
PointlessReport verify_pointless(const GeometricExtension& e, int n, const ScanOptions& opts = {},
                                 const PlaceClassCache* cache = nullptr);

/// All degree-d extensions with conductor dividing m in which S splits
/// completely: pairs (B0, u) with [H:B0] = d and deg S * u = class(S) in H/B0.
std::vector<GeometricExtension> find_table_extension(const RayClassPtr& group, std::int64_t d, const Place& s,
                                                     SubgroupLimits limits = {});

struct EulerPrime {
  mpz_class prime;
  int exponent = 1;
  bool divides_q_minus_1 = false;
  bool congruent = true;  // prime == 1 mod 2m (only required when it does not divide q-1)
};

struct EulerReport {
  unsigned q = 0;
  unsigned m = 0;
  mpz_class value;  // (q^m - 1)/(q - 1)
  std::vector<EulerPrime> primes;
  bool complete = true;
  bool congruences_hold = true;
  std::size_t distinct_primes = 0;
  bool count_applies = false;  // m > c_q
  bool count_holds = true;     // distinct_primes <= m
  bool ok() const { return complete && congruences_hold && count_holds; }
};

/// Prime factors s of (q^m-1)/(q-1) with s not dividing q-1 satisfy
/// s == 1 mod 2m, and there are at most m distinct ones once m > c_q.
EulerReport euler_lemma_check(unsigned q, unsigned m, unsigned c_q = 0);

struct BoundsReport {
  unsigned q = 0;
  int n = 0;
  mpz_class genus;
  /// Least integer g with g >= (Q - 1)/(2 sqrt Q), Q = q^{n-1}.
  mpz_class weil_floor;
  bool respects_floor = false;
  double ratio_q_n = 0;    // g / q^n
  double ratio_n_q_n = 0;  // g / (n q^n)
  bool within_desk_bound = false;  // g <= n q^n
};

BoundsReport bounds(unsigned q, int n, const mpz_class& genus);

}  // namespace pointless

#endif
