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

#include "pointless/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "pointless/error.hpp"
#include "pointless/integer.hpp"
#include "pointless/irreducible.hpp"

namespace pointless {

namespace {

// Runs fn(chunk, lo, hi) over [0, total) split into contiguous chunks.
template <typename Fn>
std::size_t parallel_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  const std::size_t chunks = threads == 1 ? 1 : std::min<std::uint64_t>(total, threads * 8ULL);
  if (chunks == 0) return 0;
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t lo = c * step;
      const std::uint64_t hi = std::min(total, lo + step);
      try {
        if (lo < hi) fn(c, lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return chunks;
}

std::uint64_t lower_index(const Poly& p) {
  return (p - Poly::monomial(p.field(), 1, static_cast<std::size_t>(p.degree()))).index();
}

struct ChunkStats {
  std::uint64_t places = 0;
  std::int64_t min_rd = std::numeric_limits<std::int64_t>::max();
  std::optional<std::pair<std::uint64_t, std::int64_t>> first;  // (index, f)
  void see(std::uint64_t index, std::int64_t f, int t, int n) {
    ++places;
    min_rd = std::min(min_rd, f * t);
    if (f * t < n && (!first || index < first->first)) first = std::make_pair(index, f);
  }
  void merge(const ChunkStats& o) {
    places += o.places;
    min_rd = std::min(min_rd, o.min_rd);
    if (o.first && (!first || o.first->first < first->first)) first = o.first;
  }
};

}  // namespace

PlaceClassCache::PlaceClassCache(RayClassPtr group, int n, const ScanOptions& opts)
    : group_(std::move(group)), n_(n), by_degree_(static_cast<std::size_t>(std::max(n, 1))) {
  const FieldPtr& field = group_->field();
  for (int t = 1; t < n; ++t) {
    const std::uint64_t total = ipow(field->q(), static_cast<unsigned>(t));
    std::vector<std::vector<Entry>> parts(std::max(1u, opts.threads) * 8);
    const std::size_t used = parallel_chunks(total, opts.threads, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
      auto& out = parts[c];
      for_each_monic_irreducible(
          field, static_cast<unsigned>(t),
          [&](const Poly& p) {
            if (group_->modulus().find(p) >= 0) return;
            out.push_back({lower_index(p), group_->class_of(p)});
          },
          lo, hi);
    });
    auto& dest = by_degree_[static_cast<std::size_t>(t)];
    for (std::size_t c = 0; c < used; ++c) dest.insert(dest.end(), parts[c].begin(), parts[c].end());
  }
}

std::uint64_t PlaceClassCache::size() const noexcept {
  std::uint64_t s = 0;
  for (const auto& v : by_degree_) s += v.size();
  return s;
}

PointlessReport verify_pointless(const GeometricExtension& e, int n, const ScanOptions& opts,
                                 const PlaceClassCache* cache) {
  if (n < 1) throw DomainError("n must be positive");
  if (cache && (cache->group() != e.group_ptr() || cache->n() < n))
    throw DomainError("place cache does not match the extension");
  const RayClassGroup& g = e.group();
  const FieldPtr& field = g.field();
  const AbelianGroup& gal = e.galois();

  PointlessReport rep;
  rep.n = n;
  rep.degree = e.degree();
  rep.genus = genus(e);
  rep.complete = true;

  // Infinity first.
  const std::int64_t f_inf = inertia_degree(e, Place::infinity(field));
  rep.places_scanned = 1;
  if (f_inf < n) rep.witness = Witness{"inf", 1, f_inf, false};

  for (int t = 1; t < n; ++t) {
    if (rep.witness && opts.stop_at_first_violation) {
      rep.complete = false;
      break;
    }
    ChunkStats stats;
    if (t == 1) {
      // Infinity is tallied with the degree-1 places but its violation was recorded above.
      stats.places = 1;
      stats.min_rd = f_inf;
    }

    // Ramified places of this degree.
    std::optional<std::pair<std::uint64_t, std::int64_t>> ramified_first;
    for (std::size_t i = 0; i < g.units().factor_count(); ++i) {
      const Poly& p = g.units().factor(i).place;
      if (p.degree() != t) continue;
      const std::int64_t f = inertia_degree(e, Place::finite(p));
      ChunkStats one;
      one.see(lower_index(p), f, t, n);
      stats.merge(one);
      if (one.first && (!ramified_first || one.first->first < ramified_first->first)) ramified_first = one.first;
    }

    const Vec shift = gal.scale(t, e.u_bar());
    std::vector<ChunkStats> parts(std::max(1u, opts.threads) * 8);
    std::size_t used = 0;
    if (cache) {
      const auto& entries = cache->degree(t);
      used = parallel_chunks(entries.size(), opts.threads, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k) {
          const Vec frob = gal.sub(e.quotient().project(entries[k].h), shift);
          parts[c].see(entries[k].index, gal.order_of(frob), t, n);
        }
      });
    } else {
      const std::uint64_t total = ipow(field->q(), static_cast<unsigned>(t));
      used = parallel_chunks(total, opts.threads, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        for_each_monic_irreducible(
            field, static_cast<unsigned>(t),
            [&](const Poly& p) {
              if (g.modulus().find(p) >= 0) return;
              const Vec frob = gal.sub(e.quotient().project(g.class_of(p)), shift);
              parts[c].see(lower_index(p), gal.order_of(frob), t, n);
            },
            lo, hi);
      });
    }
    for (std::size_t c = 0; c < used; ++c) stats.merge(parts[c]);

    rep.places_scanned += stats.places - (t == 1 ? 1 : 0);
    rep.tallies.push_back({t, stats.places, stats.places ? stats.min_rd : 0});
    if (!rep.witness && stats.first) {
      const std::uint64_t idx = stats.first->first;
      const Poly p = Poly::monomial(field, 1, static_cast<std::size_t>(t)) + Poly::from_index(field, idx);
      const bool ram = ramified_first && ramified_first->first == idx;
      rep.witness = Witness{to_string(p), t, stats.first->second, ram};
    }
  }
  if (rep.witness && opts.stop_at_first_violation && static_cast<int>(rep.tallies.size()) < n - 1) rep.complete = false;
  rep.verdict = !rep.witness.has_value();
  return rep;
}

std::vector<GeometricExtension> find_table_extension(const RayClassPtr& group, std::int64_t d, const Place& s,
                                                     SubgroupLimits limits) {
  const ArtinClass cs = artin_class(*group, s);
  const AbelianGroup& h = group->h();
  std::vector<GeometricExtension> out;
  for_each_subgroup(
      h, d,
      [&](const std::vector<Vec>& b0) {
        const Quotient quot = make_quotient(h, b0);
        const Vec target = quot.project(cs.h);
        for (const Vec& y : quot.target().solve_multiple(cs.deg, target))
          out.emplace_back(group, b0, quot.lift(y), quot);
      },
      limits);
  return out;
}

EulerReport euler_lemma_check(unsigned q, unsigned m, unsigned c_q) {
  if (m < 3 || !is_prime(static_cast<std::uint64_t>(m))) throw DomainError("m must be an odd prime, got " + std::to_string(m));
  if (q < 2) throw DomainError("q must be at least 2");
  EulerReport rep;
  rep.q = q;
  rep.m = m;
  rep.value = (mpz_pow(q, m) - 1) / (q - 1);
  const BigFactorization fac = factor(rep.value);
  rep.complete = fac.complete();
  for (const auto& [s, k] : fac.primes) {
    EulerPrime ep;
    ep.prime = s;
    ep.exponent = k;
    ep.divides_q_minus_1 = mpz_class(q - 1) % s == 0;
    if (!ep.divides_q_minus_1) {
      ep.congruent = s % (2 * m) == 1;
      rep.congruences_hold = rep.congruences_hold && ep.congruent;
    }
    rep.primes.push_back(ep);
  }
  rep.distinct_primes = rep.primes.size();
  rep.count_applies = m > (c_q == 0 ? q : c_q);
  rep.count_holds = !rep.count_applies || rep.distinct_primes <= m;
  return rep;
}

BoundsReport bounds(unsigned q, int n, const mpz_class& genus) {
  if (n < 1) throw DomainError("n must be positive");
  BoundsReport rep;
  rep.q = q;
  rep.n = n;
  rep.genus = genus;
  const mpz_class big_q = mpz_pow(q, static_cast<unsigned long>(n - 1));
  const mpz_class num = (big_q - 1) * (big_q - 1);
  // Least g >= 0 with 4 g^2 Q >= (Q - 1)^2.
  mpz_class g;
  mpz_class ratio = num / (4 * big_q);
  mpz_sqrt(g.get_mpz_t(), ratio.get_mpz_t());
  while (g > 0 && 4 * (g - 1) * (g - 1) * big_q >= num) --g;
  while (4 * g * g * big_q < num) ++g;
  rep.weil_floor = g;
  rep.respects_floor = genus >= g;
  const mpz_class qn = mpz_pow(q, static_cast<unsigned long>(n));
  rep.ratio_q_n = mpq_class(genus, qn).get_d();
  rep.ratio_n_q_n = mpq_class(genus, qn * n).get_d();
  rep.within_desk_bound = genus <= qn * n;
  return rep;
}

}  // namespace pointless
