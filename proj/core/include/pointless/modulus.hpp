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

#ifndef POINTLESS_MODULUS_HPP
#define POINTLESS_MODULUS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pointless/poly.hpp"

namespace pointless {

/// A place of F_q(x): a monic irreducible polynomial or the infinite place.
class Place {
 public:
  /// Validates that `p` is monic (after normalization) and irreducible.
  static Place finite(const Poly& p);
  static Place infinity(FieldPtr field);

  bool is_infinity() const noexcept { return infinite_; }
  /// The polynomial of a finite place; the zero polynomial for infinity.
  const Poly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return infinite_ ? 1 : poly_.degree(); }
  const FieldPtr& field() const noexcept { return field_; }
  std::string to_string(PrintOptions opts = {}) const;

  friend bool operator==(const Place& a, const Place& b) noexcept {
    return a.infinite_ == b.infinite_ && a.poly_ == b.poly_;
  }

 private:
  Place() = default;
  FieldPtr field_;
  Poly poly_;
  bool infinite_ = false;
};

Place parse_place(const FieldPtr& field, std::string_view text);

struct ModulusFactor {
  Poly place;  // monic irreducible
  int multiplicity = 1;
};

/// Effective divisor sum m_i P_i supported on finite places. Factors are kept
/// sorted in enumeration order of their places.
class Modulus {
 public:
  explicit Modulus(FieldPtr field) : field_(std::move(field)) {}
  /// Merges repeated places; throws DomainError on a reducible or constant
  /// factor or a non-positive multiplicity.
  Modulus(FieldPtr field, std::vector<ModulusFactor> factors);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<ModulusFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  int degree() const noexcept;
  /// prod P_i^{m_i}; the constant 1 for the empty modulus.
  Poly product() const;
  /// Index of the factor with place p, or -1.
  int find(const Poly& p) const;
  bool contains(const Place& p) const { return !p.is_infinity() && find(p.poly()) >= 0; }
  Modulus without(std::size_t index) const;

  /// `x^3+x+1`, `(x^3+x+1)^2`, `x^3+x+1, x^3+x^2+1`; `1` when empty.
  std::string to_string(PrintOptions opts = {}) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept;

 private:
  FieldPtr field_;
  std::vector<ModulusFactor> factors_;
};

/// Comma-separated factors `poly` or `(poly)^e`, optionally wrapped in one
/// pair of parentheses. `1` or an empty string gives the empty modulus.
Modulus parse_modulus(const FieldPtr& field, std::string_view text);

/// Every modulus of degree 0..max_degree, in increasing degree.
void for_each_modulus(const FieldPtr& field, int max_degree, const std::function<void(const Modulus&)>& visit);

}  // namespace pointless

#endif
