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

#ifndef POINTLESS_RAY_CLASS_HPP
#define POINTLESS_RAY_CLASS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "pointless/abelian.hpp"
#include "pointless/modulus.hpp"
#include "pointless/unit_group.hpp"

namespace pointless {

/// Finite model of the ray class group of F_q(x) modulo m (an infinity-free
/// modulus): G = H x Z with H = (F_q[x]/m)^* / F_q^*. The base field has class
/// number 1, so this is the whole group.
class RayClassGroup {
 public:
  static std::shared_ptr<const RayClassGroup> build(const Modulus& m, const UnitGroupOptions& opts = {});
  static std::shared_ptr<const RayClassGroup> from_units(std::shared_ptr<const UnitGroup> units);

  const UnitGroup& units() const noexcept { return *units_; }
  const std::shared_ptr<const UnitGroup>& units_ptr() const noexcept { return units_; }
  const Modulus& modulus() const noexcept { return units_->modulus(); }
  const FieldPtr& field() const noexcept { return units_->field(); }

  /// H in Smith form.
  const AbelianGroup& h() const noexcept { return to_h_.target(); }
  /// Unit coordinates -> H.
  const Quotient& to_h() const noexcept { return to_h_; }

  Vec class_of(const UnitElement& u) const { return to_h_.project(units_->dlog(u)); }
  /// Class of a polynomial coprime to the modulus.
  Vec class_of(const Poly& f) const { return class_of(units_->reduce(f)); }
  /// Canonical residue of a class: highest nonzero coefficient equal to 1.
  Poly representative(const Vec& h) const;
  static Poly normalize(const Poly& residue) { return residue.monic(); }

  /// Images in H of the generators of the filtration subgroup U^(j) of the
  /// local factor i, for 0 <= j < multiplicity.
  const std::vector<Vec>& filtration_image(std::size_t i, int j) const { return filtration_.at(i).at(static_cast<std::size_t>(j)); }

 private:
  RayClassGroup() = default;
  std::shared_ptr<const UnitGroup> units_;
  Quotient to_h_;
  std::vector<std::vector<std::vector<Vec>>> filtration_;
};

using RayClassPtr = std::shared_ptr<const RayClassGroup>;

struct ArtinClass {
  Vec h;
  std::int64_t deg = 0;
};

/// Finite places coprime to the modulus map to (class of P, deg P) and the
/// infinite place to (0, 1). Throws DomainError for places in the support.
ArtinClass artin_class(const RayClassGroup& g, const Place& p);

/// Abelian extension of F_q(x) with constant field F_q and conductor dividing
/// m, given by the subgroup generated by B0 x {0} and (u, 1) of H x Z.
class GeometricExtension {
 public:
  GeometricExtension(RayClassPtr group, std::vector<Vec> b0, Vec u);
  /// Reuses a quotient of H by B0 that the caller already computed.
  GeometricExtension(RayClassPtr group, std::vector<Vec> b0, Vec u, Quotient quotient);

  const RayClassGroup& group() const noexcept { return *group_; }
  const RayClassPtr& group_ptr() const noexcept { return group_; }
  const std::vector<Vec>& b0() const noexcept { return b0_; }
  const Vec& u() const noexcept { return u_; }
  /// Image of u in the Galois group H/B0.
  const Vec& u_bar() const noexcept { return u_bar_; }
  const AbelianGroup& galois() const noexcept { return quotient_.target(); }
  const Quotient& quotient() const noexcept { return quotient_; }
  std::int64_t degree() const noexcept { return galois().order(); }

  /// Frobenius of an unramified place in the Galois group.
  Vec frobenius(const ArtinClass& c) const;

 private:
  RayClassPtr group_;
  std::vector<Vec> b0_;
  Vec u_;
  Quotient quotient_;
  Vec u_bar_;
};

/// deg S * |(F_q[x]/m)^*| / (q - 1).
mpz_class full_rayclass_degree(const Modulus& m, const Place& s);

/// Closed-form genus of the full ray class field with S split:
/// 2g - 2 = (prod (q^{n_i}-1) q^{(m_i-1)n_i} / (q-1)) (deg m - 2 - sum n_i/(q^{n_i}-1)).
/// Throws DomainError if the value is not a non-negative integer.
mpz_class genus_full_rayclass(const Modulus& m, const Place& s);

/// Conductor-discriminant genus: for each P_i of degree n_i and level
/// 0 <= j < m_i, the nontrivial characters on the image of U^(j) contribute
/// n_i (d - d / |image|) to the different.
mpz_class genus(const GeometricExtension& e);

/// Inertia degree f of a place. Places in the support of the modulus are
/// handled in the restricted extension.
std::int64_t inertia_degree(const GeometricExtension& e, const Place& p);

/// Deletes the place from the modulus, pushing B0 and u forward.
GeometricExtension restrict_modulus(const GeometricExtension& e, const Place& p);

/// Every extension of degree d: all pairs (B0 of index d, u in H/B0).
void enumerate_extensions(const RayClassPtr& group, std::int64_t d,
                          const std::function<void(const GeometricExtension&)>& visit, SubgroupLimits limits = {});

struct PrimePowerCensus {
  std::int64_t s = 0;  // prime dividing d
  std::int64_t t = 0;  // s-part of d
  std::int64_t l = 0;  // gcd(d', t)
  int c = 0;           // t / l = s^c
  std::vector<std::int64_t> divisible;   // j = 1..c: extensions of degree t with s^j | f
  std::vector<std::int64_t> lower_bound;  // l (s^c - s^{j-1})
};

struct PlaceCensus {
  Poly place;
  std::int64_t split = 0;  // extensions among the d of the full group where f = 1
  std::int64_t bound = 0;  // gcd(d, d')
  std::vector<PrimePowerCensus> prime_powers;
};

struct SplitCensus {
  std::int64_t d = 0;
  int dprime = 0;
  std::vector<PlaceCensus> places;
  std::int64_t violations = 0;
};

/// Counts, for every place of degree dprime coprime to m, the extensions of
/// degree |H| (B0 trivial) in which it splits completely, and the
/// s-divisibility of f over the prime-power degree subextensions. H must be
/// cyclic.
SplitCensus split_count_census(const RayClassGroup& g, int dprime);

}  // namespace pointless

#endif
