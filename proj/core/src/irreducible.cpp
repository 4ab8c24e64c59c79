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

#include "pointless/irreducible.hpp"

#include "detail/gf2.hpp"
#include "pointless/error.hpp"
#include "pointless/integer.hpp"

namespace pointless {

namespace {

std::vector<unsigned> prime_divisors(int t) {
  std::vector<unsigned> primes;
  for (auto [r, e] : factor(static_cast<std::uint64_t>(t))) primes.push_back(static_cast<unsigned>(r));
  return primes;
}

bool binary_word_irreducible(std::uint64_t f, int t, const std::vector<unsigned>& primes) {
  if ((f & 1u) == 0) return t == 1;
  if (t == 1) return true;
  if ((std::popcount(f) & 1) == 0) return false;  // f(1) = 0
  const std::uint64_t x = 2;
  std::uint64_t h = x;
  for (int i = 1; i <= t; ++i) {
    h = detail::sqrmod64(h, f, t);
    for (unsigned r : primes) {
      if (i == t / static_cast<int>(r) && detail::gcd64(h ^ x, f) != 1) return false;
    }
  }
  return h == x;
}

}  // namespace

bool is_irreducible(const Poly& f_in) {
  if (f_in.degree() < 1) throw DomainError("irreducibility is undefined for constant polynomials");
  const Poly f = f_in.monic();
  const int t = f.degree();
  if (f.field()->is_binary() && t < 64) return binary_word_irreducible(f.words()[0], t, prime_divisors(t));
  if (t == 1) return true;
  if (f.coeff(0) == 0) return false;

  const FieldPtr& field = f.field();
  const Poly x = Poly::x(field);
  std::vector<unsigned> primes;
  for (auto [r, e] : factor(static_cast<std::uint64_t>(t))) primes.push_back(static_cast<unsigned>(r));
  Poly h = x;
  for (int i = 1; i <= t; ++i) {
    h = powmod(h, field->q(), f);
    for (unsigned r : primes) {
      if (i == t / static_cast<int>(r) && !gcd(h - x, f).is_one()) return false;
    }
  }
  return h == x;
}

mpz_class count_irreducibles(const Field& field, unsigned t) {
  if (t == 0) throw DomainError("place degree must be positive");
  mpz_class sum = 0;
  for (std::uint64_t d : divisors(t)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const mpz_class term = mpz_pow(field.q(), static_cast<unsigned long>(t / d));
    if (mu > 0) sum += term;
    else sum -= term;
  }
  return sum / t;
}

void for_each_monic_irreducible(const FieldPtr& field, unsigned t, const std::function<void(const Poly&)>& visit,
                                std::uint64_t start, std::uint64_t stop) {
  if (t == 0) throw DomainError("place degree must be positive");
  const std::uint64_t total = ipow(field->q(), t);
  stop = std::min(stop, total);
  if (field->is_binary() && t < 64) {
    const std::uint64_t lead = std::uint64_t{1} << t;
    const auto primes = prime_divisors(static_cast<int>(t));
    for (std::uint64_t idx = start; idx < stop; ++idx) {
      const std::uint64_t f = lead | idx;
      if (binary_word_irreducible(f, static_cast<int>(t), primes)) visit(Poly::from_words(field, {f}));
    }
    return;
  }
  const Poly lead = Poly::monomial(field, 1, t);
  for (std::uint64_t idx = start; idx < stop; ++idx) {
    Poly f = lead + Poly::from_index(field, idx);
    if (is_irreducible(f)) visit(f);
  }
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned t) {
  std::vector<Poly> out;
  for_each_monic_irreducible(field, t, [&](const Poly& f) { out.push_back(f); });
  return out;
}

bool verify_place_count_bound(const Field& field, unsigned n) {
  if (n == 0) throw DomainError("n must be positive");
  mpz_class lhs = 0;
  for (unsigned d = 1; d < n; ++d) lhs += count_irreducibles(field, d);
  return lhs * n <= mpz_pow(field.q(), n + 1);
}

}  // namespace pointless
