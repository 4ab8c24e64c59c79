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

#include "pointless/table.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include "pointless/error.hpp"

namespace pointless {

namespace {

constexpr std::string_view kTable = R"TABLE(
# Pointless curves over F_2: n | g | d | modulus | S
1 | 2 | 2 | (x^3+x+1)^2 | x^3+x^2+1
2 | 3 | 7 | x^3+x+1 | x^4+x+1
3 | 4 | 5 | x^4+x+1 | x^7+x^4+1
5 | 12 | 7 | x^6+x^4+x^3+x+1 | x^8+x^5+x^3+x^2+1
7 | 48 | 17 | x^8+x^7+x^6+x+1 | x^9+x^7+x^5+x^2+1
8 | 78 | 7*7 | x^3+x^2+1, x^3+x+1 | x^9+x^7+x^2+x+1
9 | 120 | 31 | x^10+x^3+1 | x^11+x^9+x^7+x^2+1
11 | 362 | 15*7 | x^4+x+1, x^6+x^5+x^3+x^2+1 | x^13+x^8+x^5+x^3+1
12 | 588 | 31*7 | x^5+x^2+1, x^3+x+1 | x^13+x^12+x^10+x^7+x^4+x+1
13 | 1480 | 31*15 | x^5+x^2+1, x^4+x+1 | x^14+x^13+x^5+x^4+x^3+x^2+1
14 | 3342 | 127*7 | x^7+x+1, x^3+x+1 | x^15+x^14+x^13+x^7+x^6+x^4+x^2+x+1
15 | 8940 | 73*17 | x^9+x^4+1, x^8+x^5+x^3+x^2+1 | x^16+x^14+x^13+x^11+x^10+x^7+x^4+x+1
16 | 19861 | 23*89 | x^11+x^6+x^5+x^2+1, x^11+x^9+1 | x^18+x^17+x^11+x^9+x^7+x^4+1
17 | 41440 | 89*63 | x^11+x^9+1, x^6+x+1 | x^18+x^17+x^16+x^11+x^9+x^4+1
18 | 89415 | 127*89 | x^7+x+1, x^11+x^9+1 | x^19+x^18+x^15+x^14+x^11+x^7+x^3+x+1
19 | 95886 | 127*127 | x^7+x+1, x^7+x^6+1 | x^20+x^19+x^15+x^14+x^13+x^2+1
)TABLE";

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string_view embedded_table() { return kTable.substr(1); }

std::vector<TableEntry> parse_table(std::string_view text) {
  std::vector<TableEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = t.find('|', start);
      cols.push_back(strip(std::string_view(t).substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    const std::string where = "fixture line " + std::to_string(lineno) + " ('" + t + "')";
    if (cols.size() != 5) throw ParseError(where + ": expected 5 columns");
    TableEntry e;
    try {
      std::size_t used = 0;
      e.n = std::stoi(cols[0], &used);
      if (used != cols[0].size()) throw ParseError(where + ": bad n '" + cols[0] + "'");
      if (e.g.set_str(cols[1], 10) != 0) throw ParseError(where + ": bad genus '" + cols[1] + "'");
      e.d_text = cols[2];
      e.d = 1;
      std::size_t pos = 0;
      while (pos <= e.d_text.size()) {
        const std::size_t star = e.d_text.find('*', pos);
        const std::string part = e.d_text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        std::size_t u = 0;
        const long long v = std::stoll(part, &u);
        if (u != part.size() || v < 1) throw ParseError(where + ": bad degree factor '" + part + "'");
        e.d *= v;
        if (star == std::string::npos) break;
        pos = star + 1;
      }
    } catch (const std::logic_error& err) {
      if (dynamic_cast<const ParseError*>(&err)) throw;
      throw ParseError(where + ": " + err.what());
    }
    e.modulus = cols[3];
    e.split_place = cols[4];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TableEntry> load_table(const std::string& path) {
  if (path.empty()) return parse_table(embedded_table());
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read fixture file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

CandidateSummary summarize(const GeometricExtension& e) {
  CandidateSummary c;
  const RayClassGroup& g = e.group();
  for (const Vec& b : e.b0()) c.b0.push_back(to_string(g.representative(b)));
  c.u = to_string(g.representative(e.u()));
  c.degree = e.degree();
  c.genus = genus(e);
  return c;
}

TableRowResult verify_table_row(const TableEntry& entry, const ScanOptions& opts, const UnitGroupOptions& unit_opts) {
  const auto t0 = std::chrono::steady_clock::now();
  TableRowResult res;
  res.entry = entry;
  const FieldPtr f2 = Field::make(2);
  const Modulus m = parse_modulus(f2, entry.modulus);
  const Place s = parse_place(f2, entry.split_place);
  const RayClassPtr group = RayClassGroup::build(m, unit_opts);
  const auto cands = find_table_extension(group, entry.d, s);

  for (const auto& e : cands) {
    res.candidates.push_back(summarize(e));
    ++res.genus_counts[res.candidates.back().genus];
  }
  res.genus_disagreement = res.genus_counts.size() > 1;

  if (!cands.empty()) {
    const PlaceClassCache cache(group, entry.n, opts);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      PointlessReport rep = verify_pointless(cands[i], entry.n, opts, &cache);
      res.candidates[i].pointless = rep.verdict;
      if (rep.verdict) ++res.pointless_candidates;
      const bool fits = rep.verdict && res.candidates[i].genus == entry.g && cands[i].degree() == entry.d;
      if (fits && !res.match) {
        res.match = i;
        res.report = std::move(rep);
      } else if (i == 0 && !res.report) {
        res.report = std::move(rep);
      }
    }
  }
  res.pass = res.match.has_value();
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace pointless
