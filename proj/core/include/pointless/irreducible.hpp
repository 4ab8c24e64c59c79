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

#ifndef POINTLESS_IRREDUCIBLE_HPP
#define POINTLESS_IRREDUCIBLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "pointless/poly.hpp"

namespace pointless {

/// Rabin's test: f of degree t is irreducible iff x^{q^t} = x mod f and
/// gcd(x^{q^{t/r}} - x, f) = 1 for every prime r | t.
/// Throws DomainError for constant or zero input.
bool is_irreducible(const Poly& f);

/// Number a_t of monic irreducibles of degree t over F_q (Moebius inversion
/// of sum_{d|t} d a_d = q^t).
mpz_class count_irreducibles(const Field& field, unsigned t);

/// Calls `visit` on every monic irreducible of degree t, in increasing order
/// of sum_i c_i q^i. Only candidates whose lower coefficients encode an
/// index in [start, stop) are examined, so disjoint index ranges can be
/// scanned independently and the scan can be resumed.
void for_each_monic_irreducible(const FieldPtr& field, unsigned t, const std::function<void(const Poly&)>& visit,
                                std::uint64_t start = 0, std::uint64_t stop = UINT64_MAX);

std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned t);

/// Exact check of sum_{d<n} a_d <= q * q^n / n.
bool verify_place_count_bound(const Field& field, unsigned n);

}  // namespace pointless

#endif
