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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pointless/error.hpp"
#include "pointless/irreducible.hpp"
#include "pointless/params.hpp"
#include "pointless/report.hpp"
#include "pointless/search.hpp"
#include "pointless/table.hpp"

using namespace pointless;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  bool hex = false;
  unsigned threads = 1;
  std::uint64_t seed = UnitGroupOptions{}.seed;
};

ScanOptions scan_options(const Globals& g) {
  ScanOptions o;
  o.threads = g.threads;
  return o;
}

UnitGroupOptions unit_options(const Globals& g) {
  UnitGroupOptions o;
  o.seed = g.seed;
  return o;
}

JsonOptions json_options(const Globals& g) {
  JsonOptions o;
  o.hex = g.hex;
  return o;
}

std::vector<int> parse_rows(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad row number '" + item + "' in --rows");
    }
  }
  return out;
}

std::string print_witness(const std::optional<Witness>& w) {
  if (!w) return "none";
  return w->place + " (deg " + std::to_string(w->degree) + ", f=" + std::to_string(w->f) + (w->ramified ? ", ramified" : "") + ")";
}

int run_verify_table(const Globals& g, const std::string& rows_text, bool deep, std::string fixtures) {
  if (fixtures.empty())
    if (const char* env = std::getenv("POINTLESS_FIXTURES")) fixtures = env;
  const auto table = load_table(fixtures);
  std::set<int> wanted;
  if (!rows_text.empty()) {
    for (int n : parse_rows(rows_text)) wanted.insert(n);
    for (int n : wanted) {
      bool present = false;
      for (const auto& e : table) present = present || e.n == n;
      if (!present) throw ParseError("no fixture row with n=" + std::to_string(n));
    }
  }
  std::vector<TableEntry> selected;
  for (const auto& e : table) {
    if (!wanted.empty() ? wanted.count(e.n) > 0 : (deep || e.n <= 13)) selected.push_back(e);
  }
  if (!g.json) {
    std::cout << "rows:";
    for (const auto& e : selected) std::cout << " " << e.n;
    std::cout << (deep ? " (deep)" : "") << "\n";
  }
  std::vector<TableRowResult> results;
  bool all = true;
  for (const auto& e : selected) {
    TableRowResult r = verify_table_row(e, scan_options(g), unit_options(g));
    all = all && r.pass;
    if (!g.json) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " n=" << e.n << " d=" << e.d_text << " g=" << e.g.get_str()
                << " candidates=" << r.candidates.size() << " pointless=" << r.pointless_candidates;
      if (!r.pass) {
        std::cout << " genera=";
        bool first = true;
        for (const auto& [gen, count] : r.genus_counts) {
          std::cout << (first ? "" : ",") << gen.get_str() << "x" << count;
          first = false;
        }
        if (r.genus_counts.empty()) std::cout << "-";
        if (r.report) std::cout << " witness=" << print_witness(r.report->witness);
      }
      if (r.genus_disagreement) std::cout << " [candidate genera differ]";
      std::cout << "\n";
    }
    results.push_back(std::move(r));
  }
  if (g.json) std::cout << table_json(results, g.seed, json_options(g));
  return all ? kOk : kFailed;
}

int run_verify(const Globals& g, unsigned q, int n, const std::string& modulus, std::int64_t degree,
               const std::string& split) {
  if (n < 1) throw DomainError("--n must be positive");
  if (degree < 1) throw DomainError("--degree must be positive");
  const FieldPtr field = Field::make(q);
  const Modulus m = parse_modulus(field, modulus);
  const Place s = parse_place(field, split);
  if (m.contains(s)) throw DomainError("split place '" + split + "' lies in the support of the modulus");
  const RayClassPtr group = RayClassGroup::build(m, unit_options(g));
  const auto cands = find_table_extension(group, degree, s);
  if (cands.empty()) {
    if (g.json)
      std::cout << "{\n  \"candidates\": 0,\n  \"verdict\": false\n}\n";
    else
      std::cout << "no extension of degree " << degree << " with conductor dividing " << m.to_string() << " splits "
                << s.to_string() << "\n";
    return kFailed;
  }
  const PlaceClassCache cache(group, n, scan_options(g));
  std::optional<std::size_t> best;
  std::vector<PointlessReport> reports;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    reports.push_back(verify_pointless(cands[i], n, scan_options(g), &cache));
    if (reports.back().verdict && !best) best = i;
  }
  const std::size_t shown = best.value_or(0);
  if (g.json) {
    std::cout << extension_json(cands[shown], n, &reports[shown], json_options(g));
  } else {
    const PrintOptions po{g.hex};
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& e = cands[i];
      std::cout << "candidate " << i << ": u=" << to_string(group->representative(e.u()), po) << " B0=[";
      for (std::size_t k = 0; k < e.b0().size(); ++k)
        std::cout << (k ? ", " : "") << to_string(group->representative(e.b0()[k]), po);
      std::cout << "] degree=" << e.degree() << " genus=" << reports[i].genus.get_str()
                << (reports[i].verdict ? " pointless" : " witness=" + print_witness(reports[i].witness)) << "\n";
    }
  }
  return best ? kOk : kFailed;
}

int run_genus(const Globals& g, unsigned q, const std::string& modulus, std::int64_t degree, const std::string& split) {
  const FieldPtr field = Field::make(q);
  const Modulus m = parse_modulus(field, modulus);
  if (!split.empty()) {
    const Place s = parse_place(field, split);
    const mpz_class gen = genus_full_rayclass(m, s);
    if (g.json)
      std::cout << "{\n  \"q\": " << q << ",\n  \"modulus\": \"" << m.to_string(PrintOptions{g.hex}) << "\",\n  \"S\": \""
                << s.to_string(PrintOptions{g.hex}) << "\",\n  \"genus\": \"" << gen.get_str() << "\"\n}\n";
    else
      std::cout << gen.get_str() << "\n";
    return kOk;
  }
  const RayClassPtr group = RayClassGroup::build(m, unit_options(g));
  const std::int64_t d = degree > 0 ? degree : group->h().order();
  std::vector<std::pair<std::vector<Vec>, mpz_class>> rows;
  for_each_subgroup(group->h(), d, [&](const std::vector<Vec>& b0) {
    rows.emplace_back(b0, genus(GeometricExtension(group, b0, group->h().zero())));
  });
  const PrintOptions po{g.hex};
  if (g.json) {
    std::cout << "{\n  \"q\": " << q << ",\n  \"modulus\": \"" << m.to_string(po) << "\",\n  \"degree\": " << d
              << ",\n  \"subgroups\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::cout << (i ? ",\n" : "\n") << "    {\"B0\": [";
      for (std::size_t k = 0; k < rows[i].first.size(); ++k)
        std::cout << (k ? ", " : "") << "\"" << to_string(group->representative(rows[i].first[k]), po) << "\"";
      std::cout << "], \"genus\": \"" << rows[i].second.get_str() << "\"}";
    }
    std::cout << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  } else {
    for (const auto& [b0, gen] : rows) {
      std::cout << "B0=[";
      for (std::size_t k = 0; k < b0.size(); ++k) std::cout << (k ? ", " : "") << to_string(group->representative(b0[k]), po);
      std::cout << "] genus=" << gen.get_str() << "\n";
    }
  }
  return kOk;
}

int run_params(const Globals& g, unsigned q, int n) {
  SearchConfig cfg;
  cfg.q = q;
  cfg.n = n;
  Field::make(q);
  const ParameterChoice pc = select_parameters(cfg);
  if (g.json) {
    std::cout << parameters_json(pc, json_options(g));
  } else if (pc.found) {
    std::cout << "l=" << pc.l << " m=" << pc.m << " alpha=" << pc.alpha << " beta=" << pc.beta << " method=" << pc.method
              << " inequality=" << (pc.inequality_holds ? "holds" : "fails")
              << " step-bound=" << (pc.step_bound_respected ? "respected" : "not respected") << "\n"
              << "d=" << pc.d.get_str() << "\n";
  } else {
    std::cout << "no parameters: " << pc.reason << "\n";
  }
  return pc.found && pc.inequality_holds ? kOk : kFailed;
}

int run_irreducibles(const Globals& g, unsigned q, int t, bool count_only) {
  if (t < 1) throw DomainError("--deg must be positive");
  const FieldPtr field = Field::make(q);
  if (count_only) {
    std::cout << count_irreducibles(*field, static_cast<unsigned>(t)).get_str() << "\n";
    return kOk;
  }
  for_each_monic_irreducible(field, static_cast<unsigned>(t),
                             [&](const Poly& p) { std::cout << to_string(p, PrintOptions{g.hex}) << "\n"; });
  return kOk;
}

int run_bounds(const Globals& g, unsigned q, int n, const std::string& genus_text) {
  mpz_class gen;
  if (gen.set_str(genus_text, 10) != 0 || gen < 0) throw ParseError("bad genus '" + genus_text + "'");
  Field::make(q);
  const BoundsReport rep = bounds(q, n, gen);
  if (g.json) {
    std::cout << bounds_json(rep, json_options(g));
  } else {
    std::cout << "weil floor " << rep.weil_floor.get_str() << (rep.respects_floor ? " <= " : " > ") << "g=" << gen.get_str()
              << "\n"
              << "g/q^n=" << rep.ratio_q_n << " g/(n q^n)=" << rep.ratio_n_q_n
              << (rep.within_desk_bound ? " (g <= n q^n)" : " (g > n q^n)") << "\n";
  }
  return rep.respects_floor ? kOk : kFailed;
}

int run_euler(const Globals& g, unsigned q, unsigned m) {
  Field::make(q);
  const EulerReport rep = euler_lemma_check(q, m);
  if (g.json) {
    std::cout << euler_json(rep, json_options(g));
  } else {
    std::cout << "(" << q << "^" << m << "-1)/(" << q << "-1) = " << rep.value.get_str() << " =";
    for (std::size_t i = 0; i < rep.primes.size(); ++i) {
      std::cout << (i ? " *" : "") << " " << rep.primes[i].prime.get_str();
      if (rep.primes[i].exponent > 1) std::cout << "^" << rep.primes[i].exponent;
    }
    std::cout << "\n" << (rep.ok() ? "ok" : "FAILED") << "\n";
  }
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian extensions of F_q(x) without places of small degree"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON reports");
  app.add_flag("--hex", g.hex, "Print F_2 polynomials as hex bitmasks");
  app.add_option("--threads", g.threads, "Worker threads for place scans")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for Teichmueller generator sampling");

  std::string rows, fixtures, modulus, split, genus_text;
  bool deep = false, count_only = false;
  unsigned q = 2, mprime = 0;
  int n = 0, t = 0;
  std::int64_t degree = 0;

  auto* vt = app.add_subcommand("verify-table", "Reproduce the table of pointless curves over F_2");
  vt->add_option("--rows", rows, "Comma-separated list of n values");
  vt->add_flag("--deep", deep, "Include rows with n >= 14");
  vt->add_option("--fixtures", fixtures, "Fixture file (default: $POINTLESS_FIXTURES or the built-in table)");

  auto* ver = app.add_subcommand("verify", "Find and verify extensions with a given split place");
  ver->add_option("--q", q, "Field size")->required();
  ver->add_option("--n", n, "Target degree")->required()->check(CLI::PositiveNumber);
  ver->add_option("--modulus", modulus, "Conductor, e.g. \"x^3+x+1, (x^4+x+1)^2\"")->required();
  ver->add_option("--degree", degree, "Extension degree")->required()->check(CLI::PositiveNumber);
  ver->add_option("--split-place", split, "Place that splits completely")->required();

  auto* gen = app.add_subcommand("genus", "Genus of ray class fields and their geometric subfields");
  gen->add_option("--q", q, "Field size")->required();
  gen->add_option("--modulus", modulus, "Conductor")->required();
  auto* gdeg = gen->add_option("--degree", degree, "Degree of the geometric subfields")->check(CLI::PositiveNumber);
  auto* gsp = gen->add_option("--split-place", split, "Split place of the full ray class field");
  gdeg->excludes(gsp);

  auto* par = app.add_subcommand("params", "Select primes and exponents for the asymptotic construction");
  par->add_option("--q", q, "Field size")->required();
  par->add_option("--n", n, "Target degree")->required()->check(CLI::Range(2, 100000));

  auto* irr = app.add_subcommand("irreducibles", "List monic irreducible polynomials");
  irr->add_option("--q", q, "Field size")->required();
  irr->add_option("--deg", t, "Degree")->required()->check(CLI::PositiveNumber);
  irr->add_flag("--count-only", count_only, "Print only the count");

  auto* bnd = app.add_subcommand("bounds", "Weil floor and genus ratios");
  bnd->add_option("--q", q, "Field size")->required();
  bnd->add_option("--n", n, "Target degree")->required()->check(CLI::PositiveNumber);
  bnd->add_option("--genus", genus_text, "Genus")->required();

  auto* eul = app.add_subcommand("euler", "Prime factors of (q^m-1)/(q-1)");
  eul->add_option("--q", q, "Field size")->required();
  eul->add_option("--m", mprime, "Odd prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*vt) return run_verify_table(g, rows, deep, fixtures);
    if (*ver) return run_verify(g, q, n, modulus, degree, split);
    if (*gen) return run_genus(g, q, modulus, degree, split);
    if (*par) return run_params(g, q, n);
    if (*irr) return run_irreducibles(g, q, t, count_only);
    if (*bnd) return run_bounds(g, q, n, genus_text);
    if (*eul) return run_euler(g, q, mprime);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
