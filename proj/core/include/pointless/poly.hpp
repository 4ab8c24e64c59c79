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

#ifndef POINTLESS_POLY_HPP
#define POINTLESS_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pointless/field.hpp"

namespace pointless {

/// Dense univariate polynomial over F_q in canonical form (no leading zero
/// coefficients). Over F_2 the coefficients are bit-packed, one per bit,
/// constant term in bit 0 of the first word; over other fields each
/// coefficient occupies a 16-bit lane. The interface does not depend on the
/// storage.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(FieldPtr field);
  /// Coefficients lowest degree first; trailing zeros are stripped.
  Poly(FieldPtr field, const std::vector<Elem>& coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, std::size_t k);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  /// F_2 only: bit i of the word sequence is the coefficient of x^i.
  static Poly from_words(FieldPtr field, std::vector<std::uint64_t> words);
  /// The polynomial whose coefficients are the base-q digits of `index`.
  static Poly from_index(FieldPtr field, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return degree_ == kZeroDegree; }
  bool is_one() const noexcept { return degree_ == 0 && coeff(0) == 1; }
  bool is_monic() const noexcept { return degree_ >= 0 && leading() == 1; }

  Elem coeff(std::size_t i) const noexcept;
  Elem leading() const noexcept { return degree_ < 0 ? 0 : coeff(static_cast<std::size_t>(degree_)); }
  std::vector<Elem> coefficients() const;
  /// Bit-packed words; only meaningful over F_2.
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Inverse of from_index. Throws LimitError if the value exceeds 64 bits.
  std::uint64_t index() const;

  Poly scaled(Elem c) const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;
  /// Multiplies by x^k.
  Poly shifted(std::size_t k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  /// Orders by the base-q value of the coefficient sequence, i.e. degree
  /// first, then coefficients from the top down. This is the enumeration
  /// order used throughout the library.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

 private:
  void normalize();
  void require_same_field(const Poly& other) const;

  FieldPtr field_;
  int degree_ = kZeroDegree;
  std::vector<std::uint64_t> words_;   // F_2
  std::vector<std::uint16_t> lanes_;   // other fields

  friend struct PolyAccess;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Throws DomainError when the divisor is zero or fields differ.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly sqrmod(const Poly& a, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
Poly powmod(const Poly& a, const mpz_class& e, const Poly& m);
/// Throws DomainError if gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);

Elem eval(const Poly& f, Elem x);

struct PrintOptions {
  bool hex = false;  // F_2 only: "0x" followed by the bitmask, constant term = bit 0
};

/// Descending powers, unit coefficients omitted: `x^3+x+1`, `2*x^2+1`,
/// `a^3*x+a`. The zero polynomial prints as `0`.
std::string to_string(const Poly& f, PrintOptions opts = {});

/// Parses the ASCII grammar accepted by to_string: a sum of terms `c*x^k`,
/// `x^k`, `x`, `c` (whitespace-insensitive; `-` allowed between terms).
/// Coefficients are decimal digits over prime fields and `a^j`, `a`, `0`,
/// `1` over extension fields. Over F_2 a hex bitmask `0x...` is accepted.
/// Throws ParseError naming the offending token.
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace pointless

#endif
