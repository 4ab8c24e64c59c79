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

#ifndef POINTLESS_FIELD_HPP
#define POINTLESS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pointless {

/// Encoded element of F_q. For q = p^c the value is sum_i d_i p^i where
/// (d_0, ..., d_{c-1}) are the coordinates over F_p in the power basis of
/// the fixed primitive element `a`. Zero encodes 0 and 1 encodes 1.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q with q = p^c, backed by log/antilog tables.
///
/// Instances are interned: `Field::make(q)` returns the same object for the
/// same q, so two polynomials live over the same field iff their field
/// pointers compare equal.
///
/// For c > 1 the defining polynomial is the first monic polynomial of degree
/// c over F_p, in increasing order of sum_i coeff_i p^i, whose root is
/// primitive. For F_4 this is x^2+x+1, for F_8 it is x^3+x+1.
class Field {
 public:
  static constexpr std::uint32_t kDefaultMaxOrder = 1u << 16;

  /// Throws DomainError unless q is a prime power with q <= max_order.
  static FieldPtr make(std::uint64_t q, std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_binary() const noexcept { return q_ == 2; }
  bool is_prime_field() const noexcept { return c_ == 1; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Discrete log to the base of the primitive element; a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// The fixed primitive element `a` (a prime-field primitive root when c = 1).
  Elem primitive() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }

  /// Coefficients over F_p of the defining polynomial, constant term first.
  /// Equals {0, 1} (the polynomial x) for prime fields.
  const std::vector<std::uint32_t>& defining_polynomial() const noexcept { return defining_; }

  /// Decimal for prime fields; `a^j` / `a` / `1` / `0` for extension fields.
  std::string to_string(Elem a) const;

 private:
  Field(std::uint32_t p, std::uint32_t c);

  std::uint32_t p_;
  std::uint32_t c_;
  std::uint32_t q_;
  std::vector<std::uint32_t> defining_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace pointless

#endif
