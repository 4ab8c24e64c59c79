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

#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pointless/error.hpp"
#include "pointless/irreducible.hpp"
#include "pointless/params.hpp"
#include "pointless/report.hpp"
#include "pointless/search.hpp"
#include "pointless/table.hpp"

using namespace pointless;

namespace {

RayClassPtr group_of(unsigned q, const std::string& m) { return RayClassGroup::build(parse_modulus(Field::make(q), m)); }

// Smallest deg P * f(P) over every place of degree < n, by direct calls to
// inertia_degree.
std::int64_t min_place_degree(const GeometricExtension& e, int n) {
  std::int64_t best = inertia_degree(e, Place::infinity(e.group().field()));
  for (int t = 1; t < n; ++t)
    for (const Poly& p : monic_irreducibles(e.group().field(), static_cast<unsigned>(t)))
      best = std::min(best, t * inertia_degree(e, Place::finite(p)));
  return best;
}

}  // namespace

TEST_CASE("pointless verdict matches a direct scan") {
  for (unsigned q : {2u, 3u}) {
    for_each_modulus(Field::make(q), q == 2 ? 5 : 3, [&](const Modulus& m) {
      const RayClassPtr g = RayClassGroup::build(m);
      for (std::uint64_t d : divisors(static_cast<std::uint64_t>(g->h().order()))) {
        enumerate_extensions(g, static_cast<std::int64_t>(d), [&](const GeometricExtension& e) {
          CHECK(verify_pointless(e, 1).verdict);
          bool previous = true;
          for (int n = 2; n <= 6; ++n) {
            const PointlessReport r = verify_pointless(e, n);
            CHECK(r.verdict == (min_place_degree(e, n) >= n));
            CHECK(r.verdict == !r.witness.has_value());
            if (r.witness) CHECK(r.witness->degree * r.witness->f < n);
            if (!previous) CHECK_FALSE(r.verdict);
            previous = r.verdict;
          }
        });
      }
    });
  }
}

TEST_CASE("parallel scans give identical reports") {
  const RayClassPtr g = group_of(2, "x^5+x^2+1, x^4+x+1");
  const auto cands = find_table_extension(g, 465, parse_place(g->field(), "x^14+x^13+x^5+x^4+x^3+x^2+1"));
  REQUIRE(cands.size() == 1);
  ScanOptions one, many;
  many.threads = 4;
  many.stop_at_first_violation = false;
  for (int n : {3, 8, 13, 14}) {
    const PointlessReport a = verify_pointless(cands[0], n, one);
    const PointlessReport b = verify_pointless(cands[0], n, many);
    CHECK(a.verdict == b.verdict);
    CHECK((a.witness.has_value() ? a.witness->place : "") == (b.witness.has_value() ? b.witness->place : ""));
    if (a.verdict) {
      CHECK(a.places_scanned == b.places_scanned);
      REQUIRE(a.tallies.size() == b.tallies.size());
      for (std::size_t i = 0; i < a.tallies.size(); ++i) CHECK(a.tallies[i].min_residue_degree == b.tallies[i].min_residue_degree);
    }
  }
}

TEST_CASE("places scanned cover every place below n") {
  const RayClassPtr g = group_of(2, "x^3+x+1");
  const GeometricExtension e(g, {}, g->class_of(parse_poly(g->field(), "x^4+x+1")));
  const PointlessReport r = verify_pointless(e, 2);
  CHECK(r.verdict);
  CHECK(r.complete);
  CHECK(r.places_scanned == 3);  // infinity, x, x+1
}

TEST_CASE("split extensions agree with brute force") {
  const FieldPtr f = Field::make(2);
  std::vector<Place> split_places{Place::infinity(f)};
  for (unsigned t = 1; t <= 4; ++t)
    for (const Poly& p : monic_irreducibles(f, t)) split_places.push_back(Place::finite(p));
  for_each_modulus(f, 5, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    const AbelianGroup& h = g->h();
    const auto subs = oracle::all_subgroups(h);
    for (const Place& s : split_places) {
      if (m.contains(s)) continue;
      for (std::uint64_t d : divisors(static_cast<std::uint64_t>(h.order()))) {
        const std::int64_t brute = oracle::split_extensions(*g, subs, static_cast<std::int64_t>(d), s);
        const auto got = find_table_extension(g, static_cast<std::int64_t>(d), s);
        CHECK(static_cast<std::int64_t>(got.size()) == brute);
        for (const auto& e : got) {
          CHECK(e.degree() == static_cast<std::int64_t>(d));
          CHECK(inertia_degree(e, s) == 1);
        }
      }
    }
  });
}

TEST_CASE("small table rows") {
  const RayClassPtr g = group_of(2, "x^3+x+1");
  const auto cands = find_table_extension(g, 7, parse_place(g->field(), "x^4+x+1"));
  REQUIRE(cands.size() == 1);
  CHECK(verify_pointless(cands[0], 2).verdict);
  CHECK(genus(cands[0]) == 3);
  CHECK(inertia_degree(cands[0], parse_place(g->field(), "x^4+x+1")) == 1);
  CHECK_THROWS_AS(find_table_extension(g, 7, parse_place(g->field(), "x^3+x+1")), DomainError);
  // Coprime degrees with B0 forced trivial: at most one extension.
  for (const Poly& p : monic_irreducibles(g->field(), 5)) CHECK(find_table_extension(g, 7, Place::finite(p)).size() <= 1);
}

TEST_CASE("fixture table") {
  const auto rows = parse_table(embedded_table());
  REQUIRE(rows.size() == 16);
  CHECK(rows.front().n == 1);
  CHECK(rows.back().n == 19);
  CHECK(rows.back().g == 95886);
  CHECK(rows[5].d_text == "7*7");
  CHECK(rows[5].d == 49);
  std::ifstream in(POINTLESS_DATA_DIR "/table_q2.txt", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == std::string(embedded_table()));
  CHECK(load_table(POINTLESS_DATA_DIR "/table_q2.txt").size() == 16);
  CHECK_THROWS_AS(parse_table("1 | 2 | 2 | x^3+x+1\n"), ParseError);
  CHECK_THROWS_AS(parse_table("1 | two | 2 | x^3+x+1 | x\n"), ParseError);
  CHECK_THROWS_AS(load_table("/nonexistent/table.txt"), ParseError);
}

TEST_CASE("fixture rows satisfy the Weil floor and the desk bound") {
  for (const TableEntry& e : parse_table(embedded_table())) {
    const BoundsReport b = bounds(2, e.n, e.g);
    CHECK(b.respects_floor);
    CHECK(b.within_desk_bound);
  }
  CHECK(bounds(2, 19, 95886).weil_floor == 256);
  CHECK(bounds(2, 1, 0).weil_floor == 0);
  CHECK(bounds(2, 1, 0).respects_floor);
  CHECK_FALSE(bounds(2, 19, 255).respects_floor);
}

TEST_CASE("Farey neighbours") {
  CHECK(farey_neighbor(2, 3).h == 1);
  CHECK(farey_neighbor(2, 3).k == 2);
  CHECK(farey_neighbor(5, 7).h == 2);
  CHECK(farey_neighbor(5, 7).k == 3);
  std::mt19937_64 rng(1);
  int tested = 0;
  while (tested < 500) {
    const std::int64_t m = 3 + static_cast<std::int64_t>(rng() % 5000);
    const std::int64_t l = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m - 1));
    if (gcd(l, m) != 1) continue;
    ++tested;
    const FareyNeighbor fn = farey_neighbor(l, m);
    CHECK(fn.k * l - fn.h * m == 1);
    CHECK(fn.k > 0);
    CHECK(fn.k < m);
  }
  CHECK_THROWS_AS(farey_neighbor(4, 6), DomainError);
}

TEST_CASE("prime factors of (q^m-1)/(q-1)") {
  const EulerReport e11 = euler_lemma_check(2, 11);
  REQUIRE(e11.primes.size() == 2);
  CHECK(e11.primes[0].prime == 23);
  CHECK(e11.primes[1].prime == 89);
  CHECK(e11.ok());
  const EulerReport e7 = euler_lemma_check(2, 7);
  REQUIRE(e7.primes.size() == 1);
  CHECK(e7.primes[0].prime == 127);
  const EulerReport e5 = euler_lemma_check(2, 5);
  REQUIRE(e5.primes.size() == 1);
  CHECK(e5.primes[0].prime == 31);
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned m : {3u, 5u, 7u, 11u, 13u}) {
      const EulerReport r = euler_lemma_check(q, m);
      for (const EulerPrime& p : r.primes)
        if (!p.divides_q_minus_1) CHECK(p.prime % (2 * m) == 1);
    }
  CHECK_THROWS_AS(euler_lemma_check(2, 9), DomainError);
}

TEST_CASE("parameter selection") {
  SearchConfig cfg;
  cfg.q = 2;
  cfg.n = 100;
  const ParameterChoice pc = select_parameters(cfg);
  REQUIRE(pc.found);
  CHECK(pc.inequality_holds);
  CHECK(inequality_five(2, 100, pc.l, pc.m, pc.alpha, pc.beta));
  CHECK(is_prime(pc.l));
  CHECK(is_prime(pc.m));
  CHECK(pc.l < pc.m);
  CHECK(pc.m < 2 * pc.l);
  CHECK(pc.genus_bound_below_2q_qn1);
  const ParameterChoice again = select_parameters(cfg);
  CHECK(again.l == pc.l);
  CHECK(again.alpha == pc.alpha);
  CHECK(again.beta == pc.beta);
  // Exactness at the edges of the window: r < d < r q with r = 4 q^{n+1} / n.
  CHECK_FALSE(inequality_five(2, 10, 2, 3, 0, 0));
}

TEST_CASE("JSON reports are deterministic and carry big integers as strings") {
  const RayClassPtr g = group_of(2, "x^3+x+1");
  const auto cands = find_table_extension(g, 7, parse_place(g->field(), "x^4+x+1"));
  REQUIRE(cands.size() == 1);
  const PointlessReport r = verify_pointless(cands[0], 2);
  const std::string a = extension_json(cands[0], 2, &r);
  CHECK(a == extension_json(cands[0], 2, &r));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["q"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["degree"] == 7);
  CHECK(j["genus"] == "3");
  CHECK(j["verdict"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j.contains("modulus"));
  CHECK(j.contains("B0"));
  CHECK(j.contains("u"));

  const auto rows = parse_table(embedded_table());
  const std::vector<TableRowResult> res{verify_table_row(rows[0]), verify_table_row(rows[1])};
  const std::string t = table_json(res, 1);
  const auto jt = nlohmann::json::parse(t);
  CHECK(jt["seed"] == 1);
  CHECK(jt["rows"].size() == 2);
  CHECK(t.find("timings") == std::string::npos);

  SearchConfig cfg;
  cfg.q = 3;
  cfg.n = 60;
  const auto jp = nlohmann::json::parse(parameters_json(select_parameters(cfg)));
  CHECK(jp["d"].is_string());
  const auto je = nlohmann::json::parse(euler_json(euler_lemma_check(2, 11)));
  CHECK(je["value"] == "2047");
}
