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

#include "pointless/params.hpp"

#include <cmath>

#include "pointless/error.hpp"
#include "pointless/integer.hpp"

namespace pointless {

FareyNeighbor farey_neighbor(std::int64_t l, std::int64_t m) {
  if (l <= 0 || l >= m) throw DomainError("need 0 < l < m, got l=" + std::to_string(l) + " m=" + std::to_string(m));
  if (gcd(l, m) != 1) throw DomainError("l=" + std::to_string(l) + " and m=" + std::to_string(m) + " are not coprime");
  FareyNeighbor out;
  out.k = inverse_mod(l, m);
  out.h = (out.k * l - 1) / m;
  return out;
}

bool inequality_five(unsigned q, int n, std::uint64_t l, std::uint64_t m, std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0 || beta < 0) return false;
  const mpz_class x = [&]() -> mpz_class {
    mpz_class a = mpz_pow(q, static_cast<unsigned long>(m)) - 1, b = mpz_pow(q, static_cast<unsigned long>(l)) - 1;
    mpz_class ra, rb;
    mpz_pow_ui(ra.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(alpha));
    mpz_pow_ui(rb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(beta));
    return ra * rb;
  }();
  const mpz_class lo = 4 * mpz_pow(q, static_cast<unsigned long>(n) + 1) * (q - 1);
  const mpz_class hi = lo * q;
  const mpz_class mid = x * n;
  return lo < mid && mid < hi;
}

namespace {

void finish(ParameterChoice& pc, const SearchConfig& cfg) {
  const unsigned q = cfg.q;
  mpz_class a = mpz_pow(q, static_cast<unsigned long>(pc.m)) - 1, b = mpz_pow(q, static_cast<unsigned long>(pc.l)) - 1;
  mpz_class ra, rb;
  mpz_pow_ui(ra.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(pc.alpha));
  mpz_pow_ui(rb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(pc.beta));
  pc.d = ra * rb / (q - 1);
  pc.inequality_holds = inequality_five(q, cfg.n, pc.l, pc.m, pc.alpha, pc.beta);
  const double logn = std::log(static_cast<double>(cfg.n)) / std::log(static_cast<double>(q));
  pc.large_exponent = static_cast<double>(std::max(pc.alpha, pc.beta)) > cfg.c1 * cfg.n / logn;
  const mpz_class weight = mpz_class(static_cast<unsigned long>(pc.m)) * pc.alpha +
                           mpz_class(static_cast<unsigned long>(pc.l)) * pc.beta;
  pc.genus_bound = (weight * pc.d + 1) / 2;
  pc.genus_bound_below_2q_qn1 = pc.genus_bound < 2 * q * mpz_pow(q, static_cast<unsigned long>(cfg.n) + 1);
}

}  // namespace

ParameterChoice select_parameters(const SearchConfig& cfg) {
  if (cfg.q < 2) throw DomainError("q must be at least 2");
  if (cfg.n < 2) throw DomainError("n must be at least 2");
  if (!(cfg.c1 > 0) || !(cfg.c2 > 0 && cfg.c2 < 1)) throw DomainError("need C1 > 0 and 0 < C2 < 1");
  const unsigned q = cfg.q;
  const int n = cfg.n;
  const double lq = std::log(static_cast<double>(q));
  const double logn = std::log(static_cast<double>(n)) / lq;
  const auto lo = static_cast<std::uint64_t>(std::floor(cfg.window_low * logn));
  const auto hi = static_cast<std::uint64_t>(std::floor(cfg.window_high * logn));
  const auto primes = primes_in(lo, hi);

  ParameterChoice pc;
  pc.q = q;
  pc.n = n;
  pc.method = "none";

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b)
      if (primes[b] < 2 * primes[a]) pairs.emplace_back(primes[a], primes[b]);
  if (pairs.empty()) {
    pc.reason = "no prime pair l < m < 2l in (" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return pc;
  }

  // R = log_q(r q (q-1)) with r = 4 q q^n / n.
  const double big_r = std::log(4.0 * (q - 1) / n) / lq + n + 2;
  for (auto [l, m] : pairs) {
    ++pc.pairs_tried;
    const double qm = std::log(std::pow(static_cast<double>(q), static_cast<double>(m)) - 1) / lq;
    const double ql = std::log(std::pow(static_cast<double>(q), static_cast<double>(l)) - 1) / lq;
    const FareyNeighbor fn = farey_neighbor(static_cast<std::int64_t>(l), static_cast<std::int64_t>(m));
    const double v = static_cast<double>(fn.k) * ql - static_cast<double>(fn.h) * qm;
    const auto c = static_cast<std::int64_t>(std::floor(big_r / qm));
    ParameterChoice cand = pc;
    cand.l = l;
    cand.m = m;
    cand.h = fn.h;
    cand.k = fn.k;
    cand.c = c;
    if (c * qm > big_r - 1) {
      cand.alpha = c;
      cand.beta = 0;
      cand.j = 0;
      cand.step_bound_respected = true;
    } else {
      if (!(v > 0)) continue;
      // Least j with c qm + j v > R - 1; stop once alpha would go negative.
      std::int64_t j = 0;
      while (static_cast<double>(c) * qm + static_cast<double>(j) * v <= big_r - 1) ++j;
      cand.j = j;
      cand.alpha = c - j * fn.h;
      cand.beta = j * fn.k;
      cand.step_bound_respected = j * fn.h < c;
      if (cand.alpha < 0) continue;
    }
    if (cand.alpha == 0 && cand.beta == 0) continue;
    if (!inequality_five(q, n, l, m, cand.alpha, cand.beta)) continue;
    if (!cand.step_bound_respected) continue;
    cand.found = true;
    cand.method = "farey";
    finish(cand, cfg);
    return cand;
  }

  if (!cfg.allow_fallback) {
    pc.reason = "no prime pair admits a Farey walk within its step bound";
    return pc;
  }
  // Exhaustive fallback: for each pair and alpha, the admissible beta is
  // pinned down up to one step by the logarithms; confirm exactly.
  for (auto [l, m] : pairs) {
    const double qm = std::log(std::pow(static_cast<double>(q), static_cast<double>(m)) - 1) / lq;
    const double ql = std::log(std::pow(static_cast<double>(q), static_cast<double>(l)) - 1) / lq;
    for (std::int64_t alpha = 0; alpha * qm <= big_r + 1 && alpha <= cfg.max_exponent; ++alpha) {
      const double rest = big_r - alpha * qm;
      const auto b0 = static_cast<std::int64_t>(std::floor((rest - 1) / ql));
      for (std::int64_t beta = std::max<std::int64_t>(0, b0 - 1); beta <= b0 + 2; ++beta) {
        if (alpha == 0 && beta == 0) continue;
        if (!inequality_five(q, n, l, m, alpha, beta)) continue;
        ParameterChoice cand = pc;
        cand.l = l;
        cand.m = m;
        cand.alpha = alpha;
        cand.beta = beta;
        cand.found = true;
        cand.method = "lattice-search";
        cand.step_bound_respected = false;
        finish(cand, cfg);
        return cand;
      }
    }
  }
  pc.reason = "no (l, m, alpha, beta) in the window satisfies the inequality";
  return pc;
}

}  // namespace pointless
