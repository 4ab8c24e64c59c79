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

#ifndef POINTLESS_TABLE_HPP
#define POINTLESS_TABLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pointless/search.hpp"

namespace pointless {

/// One row of the table of pointless curves over F_2.
struct TableEntry {
  int n = 0;
  mpz_class g;
  std::string d_text;  // as printed, e.g. "7*7"
  std::int64_t d = 0;
  std::string modulus;
  std::string split_place;
};

/// The shipped fixture, byte-identical to data/table_q2.txt.
std::string_view embedded_table();

/// Line format `n | g | d | modulus | S`; blank lines and `#` comments are
/// skipped. Throws ParseError naming the offending line.
std::vector<TableEntry> parse_table(std::string_view text);

/// Reads the fixture from `path`, or the embedded copy when path is empty.
std::vector<TableEntry> load_table(const std::string& path = {});

struct CandidateSummary {
  std::vector<std::string> b0;  // generators as normalized residues
  std::string u;
  std::int64_t degree = 0;
  mpz_class genus;
  std::optional<bool> pointless;  // set when the candidate was scanned
};

struct TableRowResult {
  TableEntry entry;
  std::vector<CandidateSummary> candidates;
  std::map<mpz_class, std::int64_t> genus_counts;
  bool genus_disagreement = false;  // candidates do not share one genus
  std::int64_t pointless_candidates = 0;
  /// Index of the first candidate with the row's genus and degree that
  /// passed the scan.
  std::optional<std::size_t> match;
  /// Scan report for `match`, or for the first candidate when none matched.
  std::optional<PointlessReport> report;
  bool pass = false;
  double elapsed_seconds = 0;
};

/// Finds every candidate extension for the row, computes its genus, scans
/// candidates for pointlessness and decides whether the row is reproduced.
TableRowResult verify_table_row(const TableEntry& entry, const ScanOptions& opts = {},
                                const UnitGroupOptions& unit_opts = {});

CandidateSummary summarize(const GeometricExtension& e);

}  // namespace pointless

#endif
