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

#ifndef POINTLESS_INTEGER_HPP
#define POINTLESS_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace pointless {

/// Prime factorization as ascending (prime, exponent) pairs.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;

struct BigFactorization {
  std::vector<std::pair<mpz_class, int>> primes;
  /// Part left unfactored (1 when the factorization is complete).
  mpz_class cofactor = 1;
  bool complete() const { return cofactor == 1; }
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  /// Pollard-Brent iterations per attempt before giving up on a cofactor.
  std::uint64_t rho_iterations = 1u << 24;
};

bool is_prime(std::uint64_t n);
/// Deterministic for n < 2^64; beyond that a fixed-base BPSW-style test.
bool is_prime(const mpz_class& n);

/// Complete factorization (trial division, then Pollard-Brent rho).
Factorization factor(std::uint64_t n);
/// Trial division up to opts.trial_bound, then Pollard-Brent rho with a
/// fixed seed sequence. Whatever cannot be split is left in `cofactor`.
BigFactorization factor(const mpz_class& n, const FactorOptions& opts = {});

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m (m >= 1); throws DomainError if not coprime.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
/// Floor-style residue in [0, m).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
/// Throws LimitError on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned e);  // throws LimitError on overflow
mpz_class mpz_pow(std::uint64_t base, unsigned long e);
std::int64_t to_int64(const mpz_class& v);  // throws LimitError if out of range

int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Primes p with lo < p <= hi.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace pointless

#endif
