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

#include <doctest.h>

#include "oracles.hpp"
#include "pointless/error.hpp"
#include "pointless/irreducible.hpp"
#include "pointless/ray_class.hpp"

using namespace pointless;

namespace {

RayClassPtr group_of(unsigned q, const std::string& m) { return RayClassGroup::build(parse_modulus(Field::make(q), m)); }

std::vector<Place> places_up_to(const FieldPtr& f, int max_degree) {
  std::vector<Place> out{Place::infinity(f)};
  for (int t = 1; t <= max_degree; ++t)
    for (const Poly& p : monic_irreducibles(f, static_cast<unsigned>(t))) out.push_back(Place::finite(p));
  return out;
}

}  // namespace

TEST_CASE("H has order Phi(m)/(q-1)") {
  for (unsigned q : {2u, 3u, 4u}) {
    for_each_modulus(Field::make(q), q == 2 ? 6 : 3, [&](const Modulus& m) {
      if (m.empty()) return;
      const RayClassPtr g = RayClassGroup::build(m);
      CHECK(mpz_class(static_cast<unsigned long>(g->h().order())) * (q - 1) == g->units().order());
      if (q == 2) CHECK(g->h().order() == g->units().coordinates().order());
    });
  }
}

TEST_CASE("Artin classes") {
  const RayClassPtr g = group_of(2, "x^3+x+1");
  const FieldPtr f = g->field();
  const ArtinClass inf = artin_class(*g, Place::infinity(f));
  CHECK(g->h().is_zero(inf.h));
  CHECK(inf.deg == 1);
  const ArtinClass px = artin_class(*g, parse_place(f, "x^4+x+1"));
  CHECK(px.deg == 4);
  CHECK(px.h == g->class_of(parse_poly(f, "x^4+x+1")));
  CHECK_THROWS_AS(artin_class(*g, parse_place(f, "x^3+x+1")), DomainError);
  // Representatives are monic residues of the right class.
  g->h().for_each_element([&](const Vec& h) {
    const Poly r = g->representative(h);
    CHECK(r.is_monic());
    CHECK(g->class_of(r) == h);
  });
}

TEST_CASE("full ray class field degree") {
  const FieldPtr f = Field::make(2);
  CHECK(full_rayclass_degree(parse_modulus(f, "x^3+x+1"), Place::infinity(f)) == 7);
  CHECK(full_rayclass_degree(parse_modulus(f, "x^3+x^2+1, x^3+x+1"), parse_place(f, "x^9+x^7+x^2+x+1")) == 441);
  CHECK(full_rayclass_degree(parse_modulus(f, ""), parse_place(f, "x")) == 1);
  for_each_modulus(f, 6, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    for (const char* s : {"x^7+x+1", "x^2+x+1", "inf"}) {
      const Place p = parse_place(f, s);
      if (m.contains(p)) continue;
      CHECK(full_rayclass_degree(m, p) == p.degree() * g->h().order());
    }
  });
  CHECK_THROWS_AS(full_rayclass_degree(parse_modulus(f, "x^3+x+1"), parse_place(f, "x^3+x+1")), DomainError);
}

TEST_CASE("genus of the full ray class field") {
  const FieldPtr f = Field::make(2);
  CHECK(genus_full_rayclass(parse_modulus(f, ""), parse_place(f, "x")) == 0);
  CHECK(genus_full_rayclass(parse_modulus(f, "x^3+x+1"), parse_place(f, "x")) == 3);
  // The closed form assumes every local unit group injects into H. That
  // holds for q = 2 and whenever m has at least two places; for q > 2 and a
  // single place the constants F_q^* sit inside the local factor.
  for (unsigned q : {2u, 3u}) {
    const FieldPtr fq = Field::make(q);
    for_each_modulus(fq, q == 2 ? 5 : 4, [&](const Modulus& m) {
      if (q > 2 && m.factors().size() < 2) return;
      const RayClassPtr g = RayClassGroup::build(m);
      for (const Place& s : places_up_to(fq, 1)) {
        if (m.contains(s)) continue;
        const Vec u = s.is_infinity() ? g->h().zero() : g->class_of(s.poly());
        CHECK(genus_full_rayclass(m, s) == genus(GeometricExtension(g, {}, u)));
      }
    });
  }
  CHECK_THROWS_AS(genus_full_rayclass(parse_modulus(Field::make(3), "x"), parse_place(Field::make(3), "x+1")), DomainError);
}

TEST_CASE("genus examples") {
  const RayClassPtr g2 = group_of(2, "x^3+x+1");
  CHECK(genus(GeometricExtension(g2, {}, g2->h().zero())) == 3);
  CHECK(genus(GeometricExtension(g2, {g2->class_of(Poly::x(g2->field()))}, g2->h().zero())) == 0);
  const RayClassPtr g1 = group_of(2, "(x^3+x+1)^2");
  int seen = 0;
  for_each_subgroup(g1->h(), 2, [&](const std::vector<Vec>& b0) {
    CHECK(genus(GeometricExtension(g1, b0, g1->h().zero())) == 2);
    ++seen;
  });
  CHECK(seen > 0);
}

TEST_CASE("genus agrees with explicit character sums") {
  for (unsigned q : {2u, 3u}) {
    for_each_modulus(Field::make(q), q == 2 ? 5 : 3, [&](const Modulus& m) {
      const RayClassPtr g = RayClassGroup::build(m);
      for (const auto& sub : oracle::all_subgroups(g->h())) {
        const GeometricExtension e(g, std::vector<Vec>(sub.begin(), sub.end()), g->h().zero());
        CHECK(genus(e) == oracle::genus_by_characters(e));
      }
    });
  }
}

TEST_CASE("inertia degrees agree with brute force") {
  const FieldPtr f = Field::make(2);
  const auto places = places_up_to(f, 6);
  for_each_modulus(f, 5, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    for (const auto& sub : oracle::all_subgroups(g->h())) {
      const std::vector<Vec> b0(sub.begin(), sub.end());
      for (const Vec& u : oracle::cosets(g->h(), sub)) {
        const GeometricExtension e(g, b0, u);
        for (const Place& p : places) {
          const std::int64_t fp = inertia_degree(e, p);
          CHECK(fp == oracle::inertia(*g, sub, u, p));
          CHECK(e.degree() % fp == 0);
        }
      }
    }
  });
}

TEST_CASE("trivial extension has inertia degree one everywhere") {
  const RayClassPtr g = group_of(3, "x^2+1, (x)^2");
  const GeometricExtension e(g, {g->h().element_at(1)}, g->h().zero());
  std::vector<Vec> all;
  g->h().for_each_element([&](const Vec& v) { all.push_back(v); });
  const GeometricExtension trivial(g, all, g->h().element_at(1));
  CHECK(trivial.degree() == 1);
  for (const Place& p : places_up_to(g->field(), 4)) CHECK(inertia_degree(trivial, p) == 1);
}

TEST_CASE("restricting the modulus") {
  const RayClassPtr g = group_of(2, "x^4+x+1");
  const GeometricExtension e(g, {}, g->h().zero());
  const GeometricExtension r = restrict_modulus(e, parse_place(g->field(), "x^4+x+1"));
  CHECK(r.group().modulus().empty());
  CHECK(r.degree() == 1);
  CHECK_THROWS_AS(restrict_modulus(e, parse_place(g->field(), "x")), DomainError);

  const RayClassPtr g8 = group_of(2, "x^3+x^2+1, x^3+x+1");
  const GeometricExtension e8(g8, {}, g8->class_of(Poly::x(g8->field())));
  const GeometricExtension r8 = restrict_modulus(e8, parse_place(g8->field(), "x^3+x+1"));
  CHECK(r8.degree() == 7);
  CHECK(r8.group().modulus() == parse_modulus(g8->field(), "x^3+x^2+1"));

  for_each_modulus(Field::make(2), 5, [&](const Modulus& m) {
    const RayClassPtr gm = RayClassGroup::build(m);
    for (const auto& sub : oracle::all_subgroups(gm->h())) {
      const GeometricExtension ext(gm, std::vector<Vec>(sub.begin(), sub.end()), gm->h().zero());
      for (const auto& fac : m.factors()) CHECK(ext.degree() % restrict_modulus(ext, Place::finite(fac.place)).degree() == 0);
    }
  });
}

TEST_CASE("enumeration counts") {
  const FieldPtr f = Field::make(2);
  {
    const RayClassPtr g = RayClassGroup::build(Modulus(f));
    int n = 0;
    enumerate_extensions(g, 1, [&](const GeometricExtension&) { ++n; });
    CHECK(n == 1);
  }
  {
    const RayClassPtr g = group_of(2, "x^3+x+1");
    int n = 0;
    enumerate_extensions(g, 7, [&](const GeometricExtension&) { ++n; });
    CHECK(n == 7);
    CHECK_THROWS_AS(enumerate_extensions(g, 3, [](const GeometricExtension&) {}), DomainError);
  }
  for (unsigned q : {2u, 3u}) {
    for_each_modulus(Field::make(q), q == 2 ? 5 : 3, [&](const Modulus& m) {
      const RayClassPtr g = RayClassGroup::build(m);
      const auto subs = oracle::all_subgroups(g->h());
      for (std::uint64_t d : divisors(static_cast<std::uint64_t>(g->h().order()))) {
        std::int64_t subgroups = 0;
        for (const auto& s : subs) subgroups += g->h().order() == static_cast<std::int64_t>(d * s.size()) ? 1 : 0;
        std::set<std::pair<std::set<Vec>, std::set<Vec>>> seen;
        enumerate_extensions(g, static_cast<std::int64_t>(d), [&](const GeometricExtension& e) {
          CHECK(e.degree() == static_cast<std::int64_t>(d));
          const auto b0 = oracle::closure(g->h(), e.b0());
          std::set<Vec> coset;
          for (const Vec& b : b0) coset.insert(g->h().add(e.u(), b));
          CHECK(seen.emplace(b0, coset).second);
        });
        CHECK(static_cast<std::int64_t>(seen.size()) == subgroups * static_cast<std::int64_t>(d));
      }
    });
  }
}

TEST_CASE("split census") {
  const RayClassPtr g = group_of(2, "x^3+x+1");
  const SplitCensus c = split_count_census(*g, 3);
  CHECK(c.d == 7);
  CHECK(c.violations == 0);
  std::size_t places = 0;
  for (const Poly& p : monic_irreducibles(g->field(), 3)) places += g->modulus().contains(Place::finite(p)) ? 0 : 1;
  REQUIRE(c.places.size() == places);
  for (const PlaceCensus& pc : c.places) {
    std::int64_t split = 0;
    for (std::int64_t u = 0; u < 7; ++u) split += inertia_degree(GeometricExtension(g, {}, Vec{u}), Place::finite(pc.place)) == 1;
    CHECK(pc.split == split);
    CHECK(pc.bound == 1);
    CHECK(pc.split <= 1);
  }
  const SplitCensus all = split_count_census(*g, 7);
  for (const PlaceCensus& pc : all.places) CHECK(pc.bound == 7);
  CHECK_THROWS_AS(split_count_census(*group_of(2, "x^3+x^2+1, x^3+x+1"), 2), DomainError);
}

TEST_CASE("tame genus bound for squarefree conductors") {
  // With every conductor exponent at most one, g <= (1/2) deg(m) [H:B0].
  for_each_modulus(Field::make(2), 8, [&](const Modulus& m) {
    for (const auto& fac : m.factors())
      if (fac.multiplicity > 1) return;
    const RayClassPtr g = RayClassGroup::build(m);
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(g->h().order()))) {
      for_each_subgroup(g->h(), static_cast<std::int64_t>(d), [&](const std::vector<Vec>& b0) {
        const GeometricExtension e(g, b0, g->h().zero());
        CHECK(2 * genus(e) <= mpz_class(m.degree()) * e.degree());
      });
    }
  });
}

TEST_CASE("splitting degree law") {
  for_each_modulus(Field::make(3), 3, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(g->h().order())))
      enumerate_extensions(g, static_cast<std::int64_t>(d), [&](const GeometricExtension& e) {
        for (const Place& p : places_up_to(g->field(), 3)) CHECK(e.degree() % inertia_degree(e, p) == 0);
      });
  });
}
