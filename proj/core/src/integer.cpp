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

#include "pointless/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pointless/error.hpp"

namespace pointless {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c) {
  // Brent's cycle detection with batched gcds.
  std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
  const std::uint64_t m = 128;
  std::uint64_t r = 1;
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    const std::uint64_t d = rho_u64(n, c);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<std::uint64_t, int> out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_rec(n, out);
  return {out.begin(), out.end()};
}

namespace {

bool rho_mpz(const mpz_class& n, unsigned long c, std::uint64_t budget, mpz_class& factor_out) {
  mpz_class x = 2, y = 2, ys = 2, q = 1, g = 1, diff;
  std::uint64_t r = 1, used = 0;
  const std::uint64_t m = 128;
  auto f = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        f(y);
        diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
      used += m;
    } while (k < r && g == 1);
    r <<= 1;
    if (used > budget) return false;
  } while (g == 1);
  if (g == n) {
    do {
      f(ys);
      diff = x - ys;
      g = gcd(mpz_class(abs(diff)), n);
    } while (g == 1);
  }
  if (g == n) return false;
  factor_out = g;
  return true;
}

void factor_mpz_rec(const mpz_class& n, const FactorOptions& opts, std::map<mpz_class, int>& out,
                    mpz_class& cofactor) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (n.fits_ulong_p()) {
    for (auto [p, e] : factor(static_cast<std::uint64_t>(n.get_ui()))) out[mpz_class(p)] += e;
    return;
  }
  for (unsigned long c = 1; c <= 8; ++c) {
    mpz_class d;
    if (rho_mpz(n, c, opts.rho_iterations, d)) {
      factor_mpz_rec(d, opts, out, cofactor);
      factor_mpz_rec(mpz_class(n / d), opts, out, cofactor);
      return;
    }
  }
  cofactor *= n;
}

}  // namespace

BigFactorization factor(const mpz_class& n_in, const FactorOptions& opts) {
  if (n_in <= 0) throw DomainError("can only factor positive integers");
  mpz_class n = n_in;
  std::map<mpz_class, int> out;
  for (std::uint64_t p = 2; p <= opts.trial_bound; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  BigFactorization result;
  factor_mpz_rec(n, opts, out, result.cofactor);
  result.primes.assign(out.begin(), out.end());
  return result;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw LimitError("64-bit integer overflow");
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw LimitError("64-bit integer overflow in power");
  return r;
}

mpz_class mpz_pow(std::uint64_t base, unsigned long e) {
  mpz_class r;
  mpz_class b(static_cast<unsigned long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw LimitError("integer does not fit in 64 bits");
  return v.get_si();
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factor(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo + 1; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace pointless
