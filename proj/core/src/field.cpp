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

#include "pointless/field.hpp"

#include <map>
#include <mutex>

#include "pointless/error.hpp"

namespace pointless {

namespace {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplies the digit vector `v` (an element of F_p[t]/f) by t.
std::vector<std::uint32_t> times_t(const std::vector<std::uint32_t>& v,
                                   const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t c = v.size();
  std::vector<std::uint32_t> out(c, 0);
  const std::uint32_t top = v[c - 1];
  for (std::size_t i = c - 1; i > 0; --i) out[i] = v[i - 1];
  out[0] = 0;
  if (top != 0) {
    // t^c = -(f_0 + ... + f_{c-1} t^{c-1})
    for (std::size_t i = 0; i < c; ++i) out[i] = (out[i] + (p - f[i]) % p * top) % p;
  }
  return out;
}

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t e = 0;
  for (std::size_t i = digits.size(); i-- > 0;) e = e * p + digits[i];
  return e;
}

}  // namespace

FieldPtr Field::make(std::uint64_t q, std::uint64_t max_order) {
  if (q < 2) throw DomainError("field order must be at least 2, got " + std::to_string(q));
  if (q > max_order)
    throw DomainError("field order " + std::to_string(q) + " exceeds the configured ceiling " +
                      std::to_string(max_order));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t rest = q;
  std::uint32_t c = 0;
  while (rest % p == 0) {
    rest /= p;
    ++c;
  }
  if (rest != 1 || !is_small_prime(p))
    throw DomainError("field order " + std::to_string(q) + " is not a prime power");

  static std::mutex mutex;
  static std::map<std::uint64_t, FieldPtr> interned;
  std::lock_guard lock(mutex);
  auto it = interned.find(q);
  if (it != interned.end()) return it->second;
  FieldPtr field(new Field(static_cast<std::uint32_t>(p), c));
  interned.emplace(q, field);
  return field;
}

Field::Field(std::uint32_t p, std::uint32_t c) : p_(p), c_(c), q_(1) {
  for (std::uint32_t i = 0; i < c; ++i) q_ *= p;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);

  if (c == 1) {
    defining_ = {0, 1};
    for (std::uint32_t g = 1; g < p; ++g) {
      std::uint32_t x = 1;
      std::uint32_t k = 0;
      do {
        exp_[k++] = x;
        x = static_cast<std::uint32_t>(std::uint64_t{x} * g % p);
      } while (x != 1 && k < p - 1);
      if (x == 1 && k == p - 1) break;
    }
  } else {
    // Scan monic degree-c polynomials over F_p until t generates the whole
    // multiplicative group; that also certifies irreducibility.
    const std::uint32_t count = q_;
    bool found = false;
    for (std::uint32_t idx = 0; idx < count && !found; ++idx) {
      std::vector<std::uint32_t> f(c);
      std::uint32_t v = idx;
      for (std::uint32_t i = 0; i < c; ++i) {
        f[i] = v % p;
        v /= p;
      }
      if (f[0] == 0) continue;
      std::vector<std::uint32_t> x(c, 0);
      x[0] = 1;
      std::uint32_t k = 0;
      bool ok = true;
      do {
        if (k == q_ - 1) {
          ok = false;
          break;
        }
        exp_[k++] = encode(x, p);
        x = times_t(x, f, p);
      } while (encode(x, p) != 1);
      if (ok && k == q_ - 1) {
        defining_ = f;
        defining_.push_back(1);
        found = true;
      }
    }
    if (!found) throw DomainError("no primitive polynomial found for q = " + std::to_string(q_));
  }
  for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (c_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem out = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  if (c_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  Elem scale = 1;
  while (a != 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::string Field::to_string(Elem a) const {
  if (c_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  if (a == 1) return "1";
  const std::uint32_t j = log_[a];
  return j == 1 ? std::string("a") : "a^" + std::to_string(j);
}

}  // namespace pointless
