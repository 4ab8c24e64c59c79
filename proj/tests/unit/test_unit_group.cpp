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

#include <random>

#include "oracles.hpp"
#include "pointless/error.hpp"
#include "pointless/modulus.hpp"
#include "pointless/unit_group.hpp"

using namespace pointless;

namespace {

std::shared_ptr<const UnitGroup> units_of(unsigned q, const std::string& m, UnitGroupOptions opts = {}) {
  return UnitGroup::build(parse_modulus(Field::make(q), m), opts);
}

// Moduli of degree <= max_degree over F_q, each visited with its unit group.
template <class F>
void for_small_moduli(unsigned q, int max_degree, F&& visit) {
  for_each_modulus(Field::make(q), max_degree, [&](const Modulus& m) { visit(m, UnitGroup::build(m)); });
}

}  // namespace

TEST_CASE("unit group orders") {
  CHECK(units_of(2, "x^3+x+1")->order() == 7);
  CHECK(units_of(2, "(x^3+x+1)^2")->order() == 56);
  CHECK(units_of(2, "")->order() == 1);
  CHECK(units_of(3, "(x)^3, x^2+1")->order() == 2 * 9 * 8);
  for (unsigned q : {2u, 3u, 4u}) {
    for_small_moduli(q, q == 2 ? 6 : 3, [&](const Modulus& m, const auto& u) {
      CHECK(u->order() == mpz_class(static_cast<unsigned long>(m.empty() ? 1 : oracle::units(m.product()).size())));
      mpz_class prod = 1;
      for (std::size_t i = 0; i < u->factor_count(); ++i) {
        const LocalFactor& lf = u->factor(i);
        const std::uint64_t qn = ipow(q, static_cast<unsigned>(lf.place.degree()));
        CHECK(lf.teichmuller_order == static_cast<std::int64_t>(qn - 1));
        CHECK(oracle::order(lf.teichmuller_generator, lf.modulus) == qn - 1);
        CHECK(lf.one_unit_order == static_cast<std::int64_t>(ipow(qn, static_cast<unsigned>(lf.multiplicity - 1))));
        CHECK(lf.one_unit_group.order() == lf.one_unit_order);
        prod *= static_cast<unsigned long>(lf.teichmuller_order * lf.one_unit_order);
      }
      CHECK(prod == u->order());
    });
  }
}

TEST_CASE("unit arithmetic") {
  std::mt19937_64 rng(3);
  for (const char* m : {"x^3+x+1", "(x^3+x+1)^2", "x^4+x+1, (x)^3", "(x+1)^5, x^2+x+1"}) {
    const auto u = units_of(2, m);
    const auto all = oracle::units(u->modulus_poly());
    for (int it = 0; it < 50; ++it) {
      const UnitElement a = u->reduce(all[rng() % all.size()]);
      CHECK(u->mul(a, u->inv(a)) == u->identity());
      CHECK(u->pow(a, u->order()) == u->identity());
      CHECK(u->pow(a, u->order() + 3) == u->pow(a, 3));
    }
    CHECK(u->reduce(u->modulus_poly() + Poly::constant(u->field(), 1)) == u->identity());
    CHECK_THROWS_AS(u->reduce(u->modulus().factors()[0].place), DomainError);
  }
  const auto u = units_of(2, "x^3+x+1");
  CHECK(u->element_order(u->identity()) == 1);
  CHECK(u->element_order(u->reduce(Poly::x(u->field()))) == 7);
}

TEST_CASE("CRT split and recombination is the identity") {
  for_small_moduli(2, 6, [&](const Modulus& m, const auto& u) {
    if (m.empty()) return;
    for (const Poly& r : oracle::units(m.product())) {
      const UnitElement a = u->reduce(r);
      const auto parts = u->components(a);
      REQUIRE(parts.size() == m.factors().size());
      for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i] == r % u->factor(i).modulus);
      CHECK(u->combine(parts) == a);
    }
  });
}

TEST_CASE("discrete logs are bijective coordinates") {
  for (unsigned q : {2u, 3u, 4u}) {
    for_small_moduli(q, q == 2 ? 6 : (q == 3 ? 4 : 3), [&](const Modulus& m, const auto& u) {
      std::set<Vec> logs;
      for (const Poly& r : m.empty() ? std::vector<Poly>{} : oracle::units(m.product())) {
        const UnitElement a = u->reduce(r);
        const Vec v = u->dlog(a);
        CHECK(u->exp(v) == a);
        CHECK(logs.insert(v).second);
        CHECK(u->element_order(a) == mpz_class(static_cast<unsigned long>(oracle::order(r, m.product()))));
      }
    });
  }
}

TEST_CASE("baby-step giant-step path agrees with tables") {
  UnitGroupOptions forced;
  forced.dlog_table_limit = 1;
  for (const char* m : {"x^7+x+1", "x^8+x^4+x^3+x^2+1, (x^2+x+1)^2", "x^10+x^3+1"}) {
    const auto a = units_of(2, m);
    const auto b = units_of(2, m, forced);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
      const Poly r = Poly::from_index(a->field(), rng() % oracle::residue_count(a->modulus_poly()));
      if (r.is_zero() || !gcd(r, a->modulus_poly()).is_one()) continue;
      CHECK(a->dlog(a->reduce(r)) == b->dlog(b->reduce(r)));
    }
  }
  const auto big = units_of(3, "x^13+2*x+1", forced);
  const UnitElement x = big->reduce(Poly::x(big->field()));
  CHECK(big->exp(big->dlog(x)) == x);
}

TEST_CASE("k-th roots agree with exhaustive search") {
  for_small_moduli(2, 5, [&](const Modulus& m, const auto& u) {
    if (m.empty()) return;
    const auto all = oracle::units(m.product());
    const Poly mp = m.product();
    for (std::int64_t k = 1; k <= 12; ++k) {
      std::map<Poly, std::set<Poly>> roots;
      for (const Poly& r : all) roots[oracle::power(r, static_cast<std::uint64_t>(k), mp)].insert(r);
      for (const Poly& s : all) {
        const auto got = u->kth_roots(u->reduce(s), k);
        std::set<Poly> got_set;
        for (const auto& g : got) {
          CHECK(u->pow(g, k) == u->reduce(s));
          got_set.insert(g.residue);
        }
        const auto it = roots.find(s);
        CHECK(got_set == (it == roots.end() ? std::set<Poly>{} : it->second));
      }
    }
  });
  const auto u = units_of(2, "x^4+x+1");
  const UnitElement s = u->reduce(parse_poly(u->field(), "x^2+x"));
  const auto one = u->kth_roots(s, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == s);
}

TEST_CASE("filtration subgroups have the expected sizes") {
  for (unsigned q : {2u, 3u}) {
    for_small_moduli(q, q == 2 ? 8 : 4, [&](const Modulus& m, const auto& u) {
      for (std::size_t i = 0; i < m.factors().size(); ++i) {
        const auto& fac = m.factors()[i];
        const std::int64_t qn = static_cast<std::int64_t>(ipow(q, static_cast<unsigned>(fac.place.degree())));
        std::int64_t prev = subgroup_order(u->coordinates(), u->filtration_generators(i, 0));
        CHECK(prev == u->factor(i).teichmuller_order * u->factor(i).one_unit_order);
        for (int j = 1; j <= fac.multiplicity; ++j) {
          const std::int64_t cur = subgroup_order(u->coordinates(), u->filtration_generators(i, j));
          if (j == 1)
            CHECK(prev == cur * (qn - 1));
          else
            CHECK(prev == cur * qn);
          prev = cur;
        }
        CHECK(prev == 1);
      }
    });
  }
}

TEST_CASE("unit group errors") {
  const auto u = units_of(2, "x^3+x+1");
  CHECK_THROWS(u->factor(3));
  UnitGroupOptions tiny;
  tiny.one_unit_limit = 4;
  CHECK_THROWS_AS(units_of(2, "(x^3+x+1)^3", tiny), LimitError);
}
