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

#ifndef POINTLESS_UNIT_GROUP_HPP
#define POINTLESS_UNIT_GROUP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "pointless/abelian.hpp"
#include "pointless/integer.hpp"
#include "pointless/modulus.hpp"
#include "pointless/poly.hpp"

namespace pointless {

struct UnitGroupOptions {
  /// Seeds the search for Teichmueller generators. The generator of a local
  /// factor depends only on (seed, place), so groups built over different
  /// moduli sharing a place use the same local coordinates.
  std::uint64_t seed = 0x706f696e746c6573ULL;
  /// Discrete logs in a residue field of order up to this use a full table;
  /// larger fields go through Pohlig-Hellman with baby-step/giant-step.
  std::uint64_t dlog_table_limit = std::uint64_t{1} << 20;
  /// Largest one-unit group handled (by exhaustion).
  std::uint64_t one_unit_limit = std::uint64_t{1} << 12;
};

/// (F_q[x]/P^e)^* = T x U1 with T cyclic of order q^n - 1 and U1 the one-unit
/// p-group of order q^{(e-1)n}.
struct LocalFactor {
  Poly place;
  int multiplicity = 1;
  Poly modulus;  // place^multiplicity
  std::int64_t teichmuller_order = 1;
  Poly teichmuller_generator;
  Factorization teichmuller_factorization;
  std::int64_t one_unit_order = 1;
  AbelianGroup one_unit_group;          // Smith form
  std::vector<Poly> one_unit_generators;  // one per invariant of one_unit_group

  // Discrete-log data.
  std::vector<std::uint32_t> log_table;  // indexed by residue index mod place; empty if not tabulated
  std::unordered_map<std::uint64_t, Vec> one_unit_logs;

  /// Local coordinates: (T exponent, one-unit coordinates...).
  std::vector<std::int64_t> invariants() const;
  Vec dlog(const Poly& residue) const;  // residue reduced mod `modulus`, coprime to place
  Poly exp(const Vec& coords) const;
  std::int64_t teichmuller_log(const Poly& residue_mod_place) const;
  /// Generators of U^(j) = {u == 1 mod place^j} in local coordinates.
  std::vector<Vec> filtration_generators(int j) const;
};

struct UnitElement {
  Poly residue;
  friend bool operator==(const UnitElement&, const UnitElement&) = default;
};

/// (F_q[x]/m)^* as a direct sum of its CRT local factors. Immutable.
class UnitGroup {
 public:
  static std::shared_ptr<const UnitGroup> build(const Modulus& m, const UnitGroupOptions& opts = {});

  const Modulus& modulus() const noexcept { return modulus_; }
  const Poly& modulus_poly() const noexcept { return m_; }
  const FieldPtr& field() const noexcept { return modulus_.field(); }
  const UnitGroupOptions& options() const noexcept { return opts_; }

  const mpz_class& order() const noexcept { return order_; }
  const BigFactorization& order_factorization() const noexcept { return order_factorization_; }

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const LocalFactor& factor(std::size_t i) const { return *factors_.at(i); }
  /// First coordinate of factor i inside coordinates().
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  /// The coordinate group: concatenated local invariants.
  const AbelianGroup& coordinates() const noexcept { return coords_; }

  /// The same group with factor i deleted from the modulus; local data is shared.
  std::shared_ptr<const UnitGroup> without_factor(std::size_t i) const;

  UnitElement identity() const;
  /// Throws DomainError if gcd(f, m) != 1.
  UnitElement reduce(const Poly& f) const;
  UnitElement mul(const UnitElement& a, const UnitElement& b) const;
  UnitElement inv(const UnitElement& a) const;
  UnitElement pow(const UnitElement& a, const mpz_class& e) const;

  std::vector<Poly> components(const UnitElement& a) const;
  UnitElement combine(const std::vector<Poly>& components) const;

  Vec dlog(const UnitElement& a) const;
  UnitElement exp(const Vec& coords) const;

  /// Order via the factored group order (no discrete logs involved).
  mpz_class element_order(const UnitElement& a) const;
  /// All u with u^k == s.
  std::vector<UnitElement> kth_roots(const UnitElement& s, std::int64_t k) const;
  /// Generators of the local filtration subgroup U^(j) of factor i, as
  /// vectors in coordinates().
  std::vector<Vec> filtration_generators(std::size_t i, int j) const;
  /// Embeds a local coordinate vector of factor i.
  Vec embed(std::size_t i, const Vec& local) const;

 private:
  UnitGroup() = default;
  void finish();

  Modulus modulus_{nullptr};
  Poly m_;
  UnitGroupOptions opts_;
  std::vector<std::shared_ptr<const LocalFactor>> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<Poly> idempotents_;
  AbelianGroup coords_;
  mpz_class order_ = 1;
  BigFactorization order_factorization_;
};

std::shared_ptr<const LocalFactor> build_local_factor(const Poly& place, int multiplicity, const UnitGroupOptions& opts);

}  // namespace pointless

#endif
