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

#include "pointless/ray_class.hpp"

#include <numeric>
#include <string>

#include "pointless/error.hpp"
#include "pointless/integer.hpp"
#include "pointless/irreducible.hpp"

namespace pointless {

RayClassPtr RayClassGroup::build(const Modulus& m, const UnitGroupOptions& opts) {
  return from_units(UnitGroup::build(m, opts));
}

RayClassPtr RayClassGroup::from_units(std::shared_ptr<const UnitGroup> units) {
  std::shared_ptr<RayClassGroup> g(new RayClassGroup());
  g->units_ = std::move(units);
  const UnitGroup& ug = *g->units_;
  const Vec gamma = ug.dlog(ug.reduce(Poly::constant(ug.field(), ug.field()->primitive())));
  const std::vector<Vec> rel{gamma};
  g->to_h_ = make_quotient(ug.coordinates(), rel);

  const mpz_class expected = ug.order() / (ug.field()->q() - 1);
  if (!ug.modulus().empty() && mpz_class(std::to_string(g->h().order())) != expected)
    throw DomainError("constants do not embed in the unit group of " + ug.modulus().to_string());

  for (std::size_t i = 0; i < ug.factor_count(); ++i) {
    std::vector<std::vector<Vec>> levels;
    for (int j = 0; j < ug.factor(i).multiplicity; ++j) {
      std::vector<Vec> imgs;
      for (const Vec& v : ug.filtration_generators(i, j)) imgs.push_back(g->to_h_.project(v));
      levels.push_back(std::move(imgs));
    }
    g->filtration_.push_back(std::move(levels));
  }
  return g;
}

Poly RayClassGroup::representative(const Vec& h) const {
  return normalize(units_->exp(to_h_.lift(h)).residue);
}

ArtinClass artin_class(const RayClassGroup& g, const Place& p) {
  if (p.is_infinity()) return {g.h().zero(), 1};
  if (g.modulus().contains(p))
    throw DomainError("place '" + p.to_string() + "' lies in the support of the modulus " + g.modulus().to_string());
  return {g.class_of(p.poly()), p.degree()};
}

GeometricExtension::GeometricExtension(RayClassPtr group, std::vector<Vec> b0, Vec u)
    : group_(std::move(group)), b0_(std::move(b0)), u_(std::move(u)) {
  quotient_ = make_quotient(group_->h(), b0_);
  u_bar_ = quotient_.project(u_);
}

GeometricExtension::GeometricExtension(RayClassPtr group, std::vector<Vec> b0, Vec u, Quotient quotient)
    : group_(std::move(group)), b0_(std::move(b0)), u_(std::move(u)), quotient_(std::move(quotient)) {
  u_bar_ = quotient_.project(u_);
}

Vec GeometricExtension::frobenius(const ArtinClass& c) const {
  return galois().sub(quotient_.project(c.h), galois().scale(c.deg, u_bar_));
}

mpz_class full_rayclass_degree(const Modulus& m, const Place& s) {
  if (m.contains(s)) throw DomainError("split place '" + s.to_string() + "' lies in the support of the modulus");
  const unsigned long q = m.field()->q();
  mpz_class phi = 1;
  for (const auto& f : m.factors()) {
    const unsigned long n = static_cast<unsigned long>(f.place.degree());
    phi *= (mpz_pow(q, n) - 1) * mpz_pow(q, (static_cast<unsigned long>(f.multiplicity) - 1) * n);
  }
  if (m.empty()) return s.degree();
  return mpz_class(s.degree()) * phi / (q - 1);
}

mpz_class genus_full_rayclass(const Modulus& m, const Place& s) {
  if (m.contains(s)) throw DomainError("split place '" + s.to_string() + "' lies in the support of the modulus");
  if (m.empty()) return 0;
  const unsigned long q = m.field()->q();
  mpq_class prefactor = 1;
  mpq_class bracket = m.degree() - 2;
  for (const auto& f : m.factors()) {
    const unsigned long n = static_cast<unsigned long>(f.place.degree());
    const mpz_class qn1 = mpz_pow(q, n) - 1;
    prefactor *= mpq_class(qn1 * mpz_pow(q, (static_cast<unsigned long>(f.multiplicity) - 1) * n));
    bracket -= mpq_class(mpz_class(n), qn1);
  }
  prefactor /= q - 1;
  mpq_class g = prefactor * bracket / 2 + 1;
  g.canonicalize();
  if (g.get_den() != 1 || g < 0)
    throw DomainError("closed-form genus for modulus " + m.to_string() + " is " + g.get_str() +
                      ", not a non-negative integer");
  return g.get_num();
}

mpz_class genus(const GeometricExtension& e) {
  const RayClassGroup& g = e.group();
  const std::int64_t d = e.degree();
  mpz_class twice = -2 * mpz_class(std::to_string(d));
  for (std::size_t i = 0; i < g.units().factor_count(); ++i) {
    const LocalFactor& lf = g.units().factor(i);
    for (int j = 0; j < lf.multiplicity; ++j) {
      std::vector<Vec> imgs;
      for (const Vec& v : g.filtration_image(i, j)) imgs.push_back(e.quotient().project(v));
      const std::int64_t size = subgroup_order(e.galois(), imgs);
      twice += mpz_class(lf.place.degree()) * mpz_class(std::to_string(d - d / size));
    }
  }
  if (twice % 2 != 0) throw DomainError("different has odd degree");
  return twice / 2 + 1;
}

GeometricExtension restrict_modulus(const GeometricExtension& e, const Place& p) {
  const RayClassGroup& g = e.group();
  const int i = p.is_infinity() ? -1 : g.modulus().find(p.poly());
  if (i < 0) throw DomainError("place '" + p.to_string() + "' is not in the support of " + g.modulus().to_string());
  const auto idx = static_cast<std::size_t>(i);
  RayClassPtr smaller = RayClassGroup::from_units(g.units().without_factor(idx));

  const std::size_t lo = g.units().offset(idx);
  const std::size_t len = g.units().factor(idx).invariants().size();
  auto push = [&](const Vec& h) {
    const Vec full = g.to_h().lift(h);
    Vec kept;
    for (std::size_t c = 0; c < full.size(); ++c)
      if (c < lo || c >= lo + len) kept.push_back(full[c]);
    return smaller->to_h().project(kept);
  };
  std::vector<Vec> b0;
  for (const Vec& b : e.b0()) b0.push_back(push(b));
  return GeometricExtension(smaller, std::move(b0), push(e.u()));
}

std::int64_t inertia_degree(const GeometricExtension& e, const Place& p) {
  if (p.is_infinity()) return e.galois().order_of(e.galois().neg(e.u_bar()));
  if (e.group().modulus().contains(p)) {
    const GeometricExtension r = restrict_modulus(e, p);
    return inertia_degree(r, p);
  }
  return e.galois().order_of(e.frobenius(artin_class(e.group(), p)));
}

void enumerate_extensions(const RayClassPtr& group, std::int64_t d,
                          const std::function<void(const GeometricExtension&)>& visit, SubgroupLimits limits) {
  const AbelianGroup& h = group->h();
  for_each_subgroup(
      h, d,
      [&](const std::vector<Vec>& b0) {
        const Quotient quot = make_quotient(h, b0);
        quot.target().for_each_element(
            [&](const Vec& y) { visit(GeometricExtension(group, b0, quot.lift(y), quot)); });
      },
      limits);
}

SplitCensus split_count_census(const RayClassGroup& g, int dprime) {
  if (!g.h().is_cyclic()) throw DomainError("census requires a cyclic H; got modulus " + g.modulus().to_string());
  if (dprime < 1) throw DomainError("place degree must be positive");
  SplitCensus out;
  out.d = g.h().order();
  out.dprime = dprime;
  const std::int64_t d = out.d;

  std::vector<std::pair<std::int64_t, int>> primes;
  for (auto [s, k] : factor(static_cast<std::uint64_t>(d))) primes.emplace_back(static_cast<std::int64_t>(s), k);

  for (const Poly& p : monic_irreducibles(g.field(), static_cast<unsigned>(dprime))) {
    const Place place = Place::finite(p);
    if (g.modulus().contains(place)) continue;
    PlaceCensus pc;
    pc.place = p;
    pc.bound = gcd(d, dprime);
    // H is cyclic: its single coordinate (if any) is Z/d.
    const Vec hv = g.class_of(p);
    const std::int64_t h = hv.empty() ? 0 : hv[0];
    for (std::int64_t u = 0; u < d; ++u) {
      const std::int64_t frob = mod(h - mod(static_cast<std::int64_t>(dprime), d) * u, d);
      if (d / gcd(frob, d) == 1) ++pc.split;
    }
    if (pc.split > pc.bound) ++out.violations;

    for (auto [s, k] : primes) {
      PrimePowerCensus pp;
      pp.s = s;
      pp.t = 1;
      for (int i = 0; i < k; ++i) pp.t *= s;
      pp.l = gcd(static_cast<std::int64_t>(dprime), pp.t);
      for (std::int64_t r = pp.t / pp.l; r > 1; r /= s) ++pp.c;
      if (pp.c < 1) continue;
      const std::int64_t ht = mod(h, pp.t);
      std::vector<std::int64_t> f_values;
      for (std::int64_t u = 0; u < pp.t; ++u) {
        const std::int64_t frob = mod(ht - mod(static_cast<std::int64_t>(dprime), pp.t) * u, pp.t);
        f_values.push_back(pp.t / gcd(frob, pp.t));
      }
      std::int64_t sj = 1, sj1 = 1;
      std::int64_t sc = pp.t / pp.l;
      for (int j = 1; j <= pp.c; ++j) {
        sj1 = sj;
        sj *= s;
        std::int64_t count = 0;
        for (std::int64_t f : f_values)
          if (f % sj == 0) ++count;
        pp.divisible.push_back(count);
        pp.lower_bound.push_back(pp.l * (sc - sj1));
        if (count < pp.l * (sc - sj1)) ++out.violations;
      }
      pc.prime_powers.push_back(std::move(pp));
    }
    out.places.push_back(std::move(pc));
  }
  return out;
}

}  // namespace pointless
