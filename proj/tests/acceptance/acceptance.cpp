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

// Evaluates every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is 0 when every criterion passes. With --expect-fail LIST the
// status is 0 exactly when the failing criteria are those in LIST.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pointless/integer.hpp"
#include "pointless/irreducible.hpp"
#include "pointless/params.hpp"
#include "pointless/search.hpp"
#include "pointless/table.hpp"

using namespace pointless;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

Outcome table_rows(const std::set<int>& wanted, double per_row_limit, double total_limit) {
  std::vector<std::string> failures;
  int passed = 0, total = 0;
  double max_row = 0;
  const auto t0 = Clock::now();
  for (const TableEntry& e : parse_table(embedded_table())) {
    if (!wanted.count(e.n)) continue;
    ++total;
    const TableRowResult r = verify_table_row(e);
    max_row = std::max(max_row, r.elapsed_seconds);
    if (r.pass && r.elapsed_seconds < per_row_limit) {
      ++passed;
      continue;
    }
    std::ostringstream why;
    why << "n=" << e.n << " (";
    if (r.candidates.empty()) {
      why << "no S-split extension of degree " << e.d_text;
    } else {
      bool has_genus = r.genus_counts.count(e.g) > 0;
      if (!has_genus) {
        why << "genera";
        for (const auto& [g, c] : r.genus_counts) why << " " << g.get_str();
        why << " vs " << e.g.get_str();
      } else if (r.pointless_candidates == 0 && r.report && r.report->witness) {
        why << "witness " << r.report->witness->place << " f=" << r.report->witness->f;
      } else {
        why << "no pointless candidate of genus " << e.g.get_str();
      }
    }
    if (r.elapsed_seconds >= per_row_limit) why << ", slow " << fmt(r.elapsed_seconds);
    why << ")";
    failures.push_back(why.str());
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << passed << "/" << total << " rows reproduced, slowest row " << fmt(max_row) << ", total " << fmt(elapsed);
  for (const auto& f : failures) d << "; " << f;
  return {passed == total && elapsed < total_limit, d.str()};
}

Outcome formula_consistency() {
  const FieldPtr f = Field::make(2);
  std::int64_t cases = 0, mismatches = 0;
  for_each_modulus(f, 6, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    for (const char* s_text : {"x", "x+1", "inf"}) {
      const Place s = parse_place(f, s_text);
      if (m.contains(s)) continue;
      ++cases;
      const Vec u = s.is_infinity() ? g->h().zero() : g->class_of(s.poly());
      const GeometricExtension e(g, {}, u);
      const mpz_class closed = genus_full_rayclass(m, s);
      if (closed != genus(e) || closed != oracle::genus_by_characters(e)) ++mismatches;
    }
  });
  return {mismatches == 0, std::to_string(cases) + " (m, S) pairs over F_2 with deg m <= 6, " + std::to_string(mismatches) +
                               " mismatches against conductor-discriminant"};
}

Outcome extension_count() {
  std::int64_t groups = 0, deviations = 0;
  for (unsigned q : {2u, 3u}) {
    for_each_modulus(Field::make(q), 5, [&](const Modulus& m) {
      const RayClassPtr g = RayClassGroup::build(m);
      ++groups;
      std::set<Vec> us;
      std::int64_t n = 0;
      enumerate_extensions(g, g->h().order(), [&](const GeometricExtension& e) {
        ++n;
        if (!e.b0().empty() && !g->h().is_zero(e.b0().front())) ++deviations;
        us.insert(e.u());
      });
      if (n != g->h().order() || static_cast<std::int64_t>(us.size()) != n) ++deviations;
    });
  }
  return {deviations == 0,
          std::to_string(groups) + " moduli over F_2 and F_3 with deg m <= 5, " + std::to_string(deviations) + " deviations"};
}

Outcome split_bounds() {
  std::int64_t groups = 0, censuses = 0, violations = 0;
  std::set<std::int64_t> orders;
  for (unsigned q : {2u, 3u}) {
    for_each_modulus(Field::make(q), q == 2 ? 10 : 5, [&](const Modulus& m) {
      const RayClassPtr g = RayClassGroup::build(m);
      if (g->h().order() > 200 || !g->h().is_cyclic()) return;
      ++groups;
      orders.insert(g->h().order());
      for (int dprime = 1; dprime <= 8; ++dprime) {
        const SplitCensus c = split_count_census(*g, dprime);
        censuses += static_cast<std::int64_t>(c.places.size());
        violations += c.violations;
      }
    });
  }
  // Every cyclic group Z/d with d <= 200 and every possible Frobenius class
  // h of a degree-d' place, independently of which moduli realize them.
  std::int64_t abstract = 0;
  for (std::int64_t d = 1; d <= 200; ++d)
    for (std::int64_t dprime = 1; dprime <= 8; ++dprime)
      for (std::int64_t h = 0; h < d; ++h) {
        ++abstract;
        std::int64_t split = 0;
        for (std::int64_t u = 0; u < d; ++u) split += mod(h - dprime * u, d) == 0 ? 1 : 0;
        if (split > gcd(d, dprime)) ++violations;
        for (auto [s64, k] : factor(static_cast<std::uint64_t>(d))) {
          const auto s = static_cast<std::int64_t>(s64);
          std::int64_t t = 1;
          for (int i = 0; i < k; ++i) t *= s;
          const std::int64_t l = gcd(dprime, t);
          std::int64_t sc = t / l;
          for (std::int64_t sj = s, sj1 = 1; sj <= sc; sj1 = sj, sj *= s) {
            std::int64_t count = 0;
            for (std::int64_t u = 0; u < t; ++u) count += (t / gcd(mod(h - dprime * u, t), t)) % sj == 0 ? 1 : 0;
            if (count < l * (sc - sj1)) ++violations;
          }
        }
      }
  return {violations == 0, std::to_string(abstract) + " (Z/d, d', class) triples with d <= 200, " + std::to_string(groups) +
                               " cyclic H from moduli (" + std::to_string(orders.size()) +
                               " distinct orders <= 200), " + std::to_string(censuses) + " place censuses with d' <= 8, " +
                               std::to_string(violations) + " violations"};
}

Outcome place_count_bound() {
  int failures = 0, checks = 0;
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned n = 1; n <= 30; ++n) {
      ++checks;
      if (!verify_place_count_bound(*Field::make(q), n)) ++failures;
    }
  return {failures == 0, std::to_string(checks) + " (q, n) pairs, " + std::to_string(failures) + " failures"};
}

Outcome parameter_selection() {
  const auto t0 = Clock::now();
  int ok = 0, total = 0, fallback = 0, none = 0;
  std::vector<std::string> bad;
  for (unsigned q : {2u, 3u})
    for (int n = 50; n <= 200; ++n) {
      ++total;
      SearchConfig cfg;
      cfg.q = q;
      cfg.n = n;
      const ParameterChoice pc = select_parameters(cfg);
      const double lq = std::log(static_cast<double>(n)) / std::log(static_cast<double>(q));
      const double lo = cfg.window_low * lq, hi = cfg.window_high * lq;
      const bool shape = pc.found && is_prime(pc.l) && is_prime(pc.m) && pc.l < pc.m && pc.m < 2 * pc.l &&
                         static_cast<double>(pc.l) > lo && static_cast<double>(pc.m) <= hi && (pc.alpha > 0 || pc.beta > 0);
      const bool exact = pc.found && inequality_five(q, n, pc.l, pc.m, pc.alpha, pc.beta);
      if (shape && exact && pc.step_bound_respected) {
        ++ok;
        continue;
      }
      if (!pc.found)
        ++none;
      else if (pc.method != "farey")
        ++fallback;
      if (bad.size() < 6) bad.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/" << total << " Farey walks within the step bound, " << fallback << " need the lattice fallback, " << none
    << " with no admissible tuple, " << fmt(elapsed);
  if (!bad.empty()) {
    d << "; first failures:";
    for (const auto& b : bad) d << " " << b;
  }
  return {ok == total && elapsed < 5.0, d.str()};
}

Outcome euler_checks() {
  int checks = 0, failures = 0;
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (std::uint64_t m : primes_in(3, 31)) {
      ++checks;
      if (!euler_lemma_check(q, static_cast<unsigned>(m)).ok()) ++failures;
    }
  bool table_ok = true;
  const EulerReport e11 = euler_lemma_check(2, 11);
  table_ok = table_ok && e11.primes.size() == 2 && e11.primes[0].prime == 23 && e11.primes[1].prime == 89;
  table_ok = table_ok && is_prime(std::uint64_t{127}) && is_prime(std::uint64_t{31});
  const std::map<int, std::vector<std::int64_t>> factors{{9, {31}},       {14, {127, 7}},  {16, {23, 89}},
                                                         {17, {89, 63}},  {18, {127, 89}}, {19, {127, 127}}};
  for (const TableEntry& e : parse_table(embedded_table())) {
    const auto it = factors.find(e.n);
    if (it == factors.end()) continue;
    std::string expect;
    std::int64_t product = 1;
    for (std::int64_t v : it->second) {
      expect += (expect.empty() ? "" : "*") + std::to_string(v);
      product *= v;
    }
    table_ok = table_ok && e.d_text == expect && e.d == product;
  }
  return {failures == 0 && table_ok, std::to_string(checks) + " (q, m) pairs, " + std::to_string(failures) +
                                         " failures; 2^11-1 = 23*89, 127 and 31 prime, table d-factorizations " +
                                         (table_ok ? "match" : "DO NOT match")};
}

Outcome bounds_report() {
  int rows = 0, failures = 0;
  double worst = 0;
  for (const TableEntry& e : parse_table(embedded_table())) {
    ++rows;
    const BoundsReport b = bounds(2, e.n, e.g);
    worst = std::max(worst, b.ratio_n_q_n);
    if (!b.respects_floor || !b.within_desk_bound) ++failures;
  }
  std::ostringstream d;
  d << rows << " rows, " << failures << " below the Weil floor or above n q^n; max g/(n q^n) = " << worst;
  return {failures == 0, d.str()};
}

Outcome oracle_suites() {
  const FieldPtr f = Field::make(2);
  std::vector<Place> places{Place::infinity(f)};
  for (unsigned t = 1; t <= 6; ++t)
    for (const Poly& p : monic_irreducibles(f, t)) places.push_back(Place::finite(p));
  std::int64_t groups = 0, orders = 0, roots = 0, inertia = 0, splits = 0, bad = 0;
  for_each_modulus(f, 5, [&](const Modulus& m) {
    const RayClassPtr g = RayClassGroup::build(m);
    const UnitGroup& units = g->units();
    if (units.order() > 10000) return;
    ++groups;
    const Poly mp = m.empty() ? Poly::constant(f, 1) : m.product();
    const auto all = m.empty() ? std::vector<Poly>{} : oracle::units(mp);
    for (const Poly& a : all) {
      ++orders;
      if (units.element_order(units.reduce(a)) != mpz_class(static_cast<unsigned long>(oracle::order(a, mp)))) ++bad;
    }
    for (std::int64_t k = 1; k <= 12; ++k) {
      std::map<Poly, std::set<Poly>> pre;
      for (const Poly& a : all) pre[oracle::power(a, static_cast<std::uint64_t>(k), mp)].insert(a);
      for (const Poly& s : all) {
        ++roots;
        std::set<Poly> got;
        for (const UnitElement& r : units.kth_roots(units.reduce(s), k)) got.insert(r.residue);
        const auto it = pre.find(s);
        if (got != (it == pre.end() ? std::set<Poly>{} : it->second)) ++bad;
      }
    }
    const auto subs = oracle::all_subgroups(g->h());
    for (const auto& sub : subs) {
      const std::vector<Vec> b0(sub.begin(), sub.end());
      for (const Vec& u : oracle::cosets(g->h(), sub)) {
        const GeometricExtension e(g, b0, u);
        for (const Place& p : places) {
          ++inertia;
          if (inertia_degree(e, p) != oracle::inertia(*g, sub, u, p)) ++bad;
        }
      }
    }
    for (const Place& s : places) {
      if (s.degree() > 4 || m.contains(s)) continue;
      for (std::uint64_t d : divisors(static_cast<std::uint64_t>(g->h().order()))) {
        ++splits;
        const auto got = find_table_extension(g, static_cast<std::int64_t>(d), s);
        bool ok = static_cast<std::int64_t>(got.size()) == oracle::split_extensions(*g, subs, static_cast<std::int64_t>(d), s);
        for (const auto& e : got) ok = ok && inertia_degree(e, s) == 1 && e.degree() == static_cast<std::int64_t>(d);
        if (!ok) ++bad;
      }
    }
  });
  std::ostringstream d;
  d << groups << " groups; element_order " << orders << ", kth_roots " << roots << ", inertia_degree " << inertia
    << ", find_table_extension " << splits << " comparisons; " << bad << " disagreements";
  return {bad == 0, d.str()};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--expect-fail LIST]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table rows n<=13", [] { return table_rows({1, 2, 3, 5, 7, 8, 9, 11, 12, 13}, 120.0, 1e9); }},
      {"table rows n>=14", [] { return table_rows({14, 15, 16, 17, 18, 19}, 1e9, 1800.0); }},
      {"genus closed form vs conductor-discriminant", formula_consistency},
      {"exactly |H| extensions with B0 trivial", extension_count},
      {"split-count bounds in cyclic H", split_bounds},
      {"place count bound", place_count_bound},
      {"parameter selection", parameter_selection},
      {"prime factors of (q^m-1)/(q-1)", euler_checks},
      {"Weil floor and desk bound", bounds_report},
      {"brute-force oracle suites", oracle_suites},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass" << std::endl;
  if (argc > 1) {
    if (failed == expected_failures) return 0;
    std::cout << "failing set differs from the expected one" << std::endl;
    return 1;
  }
  return failed.empty() ? 0 : 1;
}
