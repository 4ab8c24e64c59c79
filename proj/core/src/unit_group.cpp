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

#include "pointless/unit_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <string>

#include "pointless/error.hpp"

namespace pointless {

namespace {

struct Egcd {
  std::int64_t g, s, t;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return {a, s0, t0};
}

std::int64_t mulmod64(std::int64_t a, std::int64_t b, std::int64_t m) {
  return mod(static_cast<std::int64_t>(static_cast<__int128>(a) * b % m), m);
}

// Adds v to the row lattice held as an upper-triangular basis whose lattice
// contains ords[c] * e_c for every c.
void hnf_insert(std::vector<Vec>& basis, Vec v, const std::vector<std::int64_t>& ords) {
  const std::size_t k = ords.size();
  for (std::size_t c = 0; c < k; ++c) v[c] = mod(v[c], ords[c]);
  for (std::size_t j = 0; j < k; ++j) {
    if (v[j] == 0) continue;
    Vec& row = basis[j];
    const auto [g, s, t] = egcd(row[j], v[j]);
    const std::int64_t a = v[j] / g, b = row[j] / g;
    Vec next_row(k, 0), next_v(k, 0);
    for (std::size_t c = j; c < k; ++c) {
      next_row[c] = mod(mulmod64(s, row[c], ords[c]) + mulmod64(t, v[c], ords[c]), ords[c]);
      next_v[c] = mod(mulmod64(a, row[c], ords[c]) - mulmod64(b, v[c], ords[c]), ords[c]);
    }
    next_row[j] = g;
    next_v[j] = 0;
    row = std::move(next_row);
    v = std::move(next_v);
  }
}

Poly scalar_monomial(const FieldPtr& field, unsigned s, std::size_t t) {
  std::uint64_t enc = 1;
  for (unsigned i = 0; i < s; ++i) enc *= field->p();
  return Poly::monomial(field, static_cast<Elem>(enc), t);
}

// a^s x^t for s < c, t < n: an F_p-basis of F_q[x]/P.
std::vector<Poly> residue_basis(const FieldPtr& field, int n) {
  std::vector<Poly> out;
  for (int t = 0; t < n; ++t)
    for (unsigned s = 0; s < field->c(); ++s) out.push_back(scalar_monomial(field, s, static_cast<std::size_t>(t)));
  return out;
}

std::int64_t bsgs(const Poly& gamma, const Poly& h, std::int64_t order, const Poly& place) {
  if (order > (std::int64_t{1} << 40)) throw LimitError("prime factor " + std::to_string(order) + " too large for baby-step/giant-step");
  const auto steps = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::int64_t> baby;
  Poly cur = Poly::constant(place.field(), 1) % place;
  for (std::int64_t j = 0; j < steps; ++j) {
    baby.emplace(cur.index(), j);
    cur = mulmod(cur, gamma, place);
  }
  const Poly giant = invmod(powmod(gamma, static_cast<std::uint64_t>(steps), place), place);
  Poly y = h % place;
  for (std::int64_t i = 0; i <= steps; ++i) {
    auto it = baby.find(y.index());
    if (it != baby.end()) return mod(i * steps + it->second, order);
    y = mulmod(y, giant, place);
  }
  throw DomainError("discrete logarithm does not exist");
}

}  // namespace

std::vector<std::int64_t> LocalFactor::invariants() const {
  std::vector<std::int64_t> out{teichmuller_order};
  out.insert(out.end(), one_unit_group.invariants().begin(), one_unit_group.invariants().end());
  return out;
}

std::int64_t LocalFactor::teichmuller_log(const Poly& r) const {
  if (teichmuller_order == 1) return 0;
  if (!log_table.empty()) return log_table[r.index()];
  // Pohlig-Hellman over the factored order q^n - 1.
  const Poly g = teichmuller_generator % place;
  const std::int64_t n_t = teichmuller_order;
  std::int64_t x = 0, modulus_acc = 1;
  for (auto [s64, k] : teichmuller_factorization) {
    const auto s = static_cast<std::int64_t>(s64);
    std::int64_t sk = 1;
    for (int i = 0; i < k; ++i) sk *= s;
    const Poly gamma = powmod(g, static_cast<std::uint64_t>(n_t / s), place);
    const Poly g_inv = invmod(g, place);
    std::int64_t xi = 0, si = 1;
    for (int i = 0; i < k; ++i) {
      const Poly twisted = mulmod(r, powmod(g_inv, static_cast<std::uint64_t>(xi), place), place);
      const Poly h = powmod(twisted, static_cast<std::uint64_t>(n_t / (si * s)), place);
      xi += bsgs(gamma, h, s, place) * si;
      si *= s;
    }
    // CRT: x == previous mod modulus_acc, x == xi mod sk.
    const std::int64_t inv = inverse_mod(mod(modulus_acc, sk), sk);
    const std::int64_t t = mulmod64(mod(xi - x, sk), inv, sk);
    x = x + modulus_acc * t;
    modulus_acc *= sk;
    x = mod(x, modulus_acc);
  }
  return x;
}

Vec LocalFactor::dlog(const Poly& residue) const {
  const Poly u = residue % modulus;
  const std::int64_t a = teichmuller_log(u % place);
  Vec out{a};
  if (one_unit_order == 1) return out;
  const Poly back = powmod(teichmuller_generator, static_cast<std::uint64_t>(mod(-a, teichmuller_order)), modulus);
  const Poly w = mulmod(u, back, modulus);
  auto it = one_unit_logs.find(w.index());
  if (it == one_unit_logs.end()) throw DomainError("residue '" + to_string(residue) + "' is not a unit");
  out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

Poly LocalFactor::exp(const Vec& coords) const {
  Poly out = powmod(teichmuller_generator, static_cast<std::uint64_t>(mod(coords.at(0), teichmuller_order)), modulus);
  for (std::size_t k = 0; k < one_unit_generators.size(); ++k) {
    const std::int64_t e = mod(coords.at(k + 1), one_unit_group.invariants()[k]);
    out = mulmod(out, powmod(one_unit_generators[k], static_cast<std::uint64_t>(e), modulus), modulus);
  }
  return out;
}

std::vector<Vec> LocalFactor::filtration_generators(int j) const {
  const std::size_t rank = 1 + one_unit_group.rank();
  std::vector<Vec> out;
  if (j <= 0) {
    for (std::size_t k = 0; k < rank; ++k) {
      Vec v(rank, 0);
      v[k] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  const FieldPtr& field = place.field();
  const Poly one = Poly::constant(field, 1);
  const auto basis = residue_basis(field, place.degree());
  Poly pj = one;
  for (int i = 0; i < j; ++i) pj = pj * place;
  for (int level = j; level < multiplicity; ++level) {
    for (const Poly& b : basis) out.push_back(dlog((one + b * pj) % modulus));
    pj = pj * place;
  }
  return out;
}

std::shared_ptr<const LocalFactor> build_local_factor(const Poly& place, int e, const UnitGroupOptions& opts) {
  auto lf = std::make_shared<LocalFactor>();
  const FieldPtr& field = place.field();
  const std::uint64_t q = field->q();
  const int n = place.degree();
  lf->place = place;
  lf->multiplicity = e;
  lf->modulus = Poly::constant(field, 1);
  for (int i = 0; i < e; ++i) lf->modulus = lf->modulus * place;
  const Poly& big = lf->modulus;

  if (static_cast<double>(n) * std::log2(static_cast<double>(q)) >= 62.0)
    throw LimitError("residue field of '" + to_string(place) + "' is too large");
  const std::uint64_t qn = ipow(q, static_cast<unsigned>(n));
  lf->teichmuller_order = static_cast<std::int64_t>(qn - 1);
  lf->teichmuller_factorization = factor(qn - 1);

  // Teichmueller generator: a primitive residue r, lifted by r^{q^{(e-1)n}}.
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(place.index()), static_cast<std::uint32_t>(place.index() >> 32),
                    static_cast<std::uint32_t>(q)};
  std::mt19937_64 rng(seq);
  Poly r;
  while (true) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = static_cast<Elem>(rng() % q);
    r = Poly(field, coeffs);
    if (r.is_zero()) continue;
    bool primitive = true;
    for (auto [s, k] : lf->teichmuller_factorization)
      if (powmod(r, (qn - 1) / s, place).is_one()) {
        primitive = false;
        break;
      }
    if (primitive) break;
  }
  mpz_class lift_exp = mpz_pow(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(e - 1));
  lf->teichmuller_generator = powmod(r, lift_exp, big);

  if (qn <= opts.dlog_table_limit && qn > 2) {
    lf->log_table.assign(qn, 0);
    const Poly g = lf->teichmuller_generator % place;
    Poly cur = Poly::constant(field, 1);
    for (std::uint64_t k = 0; k + 1 < qn; ++k) {
      lf->log_table[cur.index()] = static_cast<std::uint32_t>(k);
      cur = mulmod(cur, g, place);
    }
  }

  if (e == 1) {
    lf->one_unit_logs.emplace((Poly::constant(field, 1) % big).index(), Vec{});
    return lf;
  }

  // One-unit group by exhaustion from the filtration generators.
  const mpz_class u_order = mpz_pow(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(e - 1));
  if (u_order > mpz_class(std::to_string(opts.one_unit_limit)))
    throw LimitError("one-unit group of '(" + to_string(place) + ")^" + std::to_string(e) + "' has order " +
                     u_order.get_str() + ", above the limit " + std::to_string(opts.one_unit_limit));
  lf->one_unit_order = to_int64(u_order);

  const Poly one = Poly::constant(field, 1);
  std::vector<Poly> gens;
  {
    const auto basis = residue_basis(field, n);
    Poly pj = place;
    for (int level = 1; level < e; ++level) {
      for (const Poly& b : basis) gens.push_back((one + b * pj) % big);
      pj = pj * place;
    }
  }
  const std::size_t k = gens.size();
  std::vector<std::int64_t> ords(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t o = 1;
    Poly cur = gens[i];
    while (!cur.is_one()) {
      cur = powmod(cur, field->p(), big);
      o *= field->p();
    }
    ords[i] = o;
  }

  std::vector<Vec> basis(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) basis[i][i] = ords[i];
  std::unordered_map<std::uint64_t, std::pair<Poly, Vec>> seen;
  std::deque<std::uint64_t> queue;
  const Poly id = one % big;
  seen.emplace(id.index(), std::make_pair(id, Vec(k, 0)));
  queue.push_back(id.index());
  while (!queue.empty()) {
    const auto key = queue.front();
    queue.pop_front();
    const auto [x, vx] = seen.at(key);
    for (std::size_t i = 0; i < k; ++i) {
      const Poly y = mulmod(x, gens[i], big);
      Vec vy = vx;
      vy[i] = mod(vy[i] + 1, ords[i]);
      auto [it, inserted] = seen.emplace(y.index(), std::make_pair(y, vy));
      if (inserted) {
        queue.push_back(y.index());
      } else {
        Vec rel(k);
        for (std::size_t c = 0; c < k; ++c) rel[c] = vy[c] - it->second.second[c];
        hnf_insert(basis, std::move(rel), ords);
      }
    }
  }
  if (static_cast<std::int64_t>(seen.size()) != lf->one_unit_order)
    throw DomainError("one-unit enumeration found " + std::to_string(seen.size()) + " elements");

  const AbelianGroup free_part(ords);
  const Quotient quot = make_quotient(free_part, basis);
  if (quot.target().order() != lf->one_unit_order) throw DomainError("one-unit relation lattice is inconsistent");
  lf->one_unit_group = quot.target();
  for (const auto& [key, entry] : seen) lf->one_unit_logs.emplace(key, quot.project(entry.second));
  for (std::size_t t = 0; t < quot.target().rank(); ++t) {
    Vec unit(quot.target().rank(), 0);
    unit[t] = 1;
    const Vec ex = quot.lift(unit);
    Poly g = id;
    for (std::size_t i = 0; i < k; ++i) g = mulmod(g, powmod(gens[i], static_cast<std::uint64_t>(ex[i]), big), big);
    lf->one_unit_generators.push_back(g);
  }
  return lf;
}

std::shared_ptr<const UnitGroup> UnitGroup::build(const Modulus& m, const UnitGroupOptions& opts) {
  std::shared_ptr<UnitGroup> g(new UnitGroup());
  g->modulus_ = m;
  g->opts_ = opts;
  for (const auto& f : m.factors()) g->factors_.push_back(build_local_factor(f.place, f.multiplicity, opts));
  g->finish();
  return g;
}

std::shared_ptr<const UnitGroup> UnitGroup::without_factor(std::size_t i) const {
  if (i >= factors_.size()) throw DomainError("factor index out of range");
  std::shared_ptr<UnitGroup> g(new UnitGroup());
  g->modulus_ = modulus_.without(i);
  g->opts_ = opts_;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (k != i) g->factors_.push_back(factors_[k]);
  g->finish();
  return g;
}

void UnitGroup::finish() {
  m_ = modulus_.product();
  std::vector<std::int64_t> inv;
  std::map<std::uint64_t, int> primes;
  order_ = 1;
  for (const auto& lf : factors_) {
    offsets_.push_back(inv.size());
    for (std::int64_t e : lf->invariants()) inv.push_back(e);
    order_ *= mpz_class(std::to_string(lf->teichmuller_order)) * mpz_class(std::to_string(lf->one_unit_order));
    for (auto [s, k] : lf->teichmuller_factorization) primes[s] += k;
    if (lf->one_unit_order > 1)
      for (auto [s, k] : pointless::factor(static_cast<std::uint64_t>(lf->one_unit_order))) primes[s] += k;
  }
  coords_ = AbelianGroup(inv);
  order_factorization_ = {};
  for (auto [s, k] : primes) order_factorization_.primes.emplace_back(mpz_class(std::to_string(s)), k);
  for (const auto& lf : factors_) {
    const Poly rest = m_ / lf->modulus;
    const Poly r = rest % lf->modulus;
    idempotents_.push_back(mulmod(rest, invmod(r, lf->modulus), m_));
  }
}

UnitElement UnitGroup::identity() const { return {Poly::constant(field(), 1) % m_}; }

UnitElement UnitGroup::reduce(const Poly& f) const {
  if (f.field() != field()) throw DomainError("element over a different field");
  Poly r = f % m_;
  if (!gcd(r, m_).is_one() && !modulus_.empty())
    throw DomainError("'" + to_string(f) + "' is not coprime to the modulus " + modulus_.to_string());
  return {std::move(r)};
}

UnitElement UnitGroup::mul(const UnitElement& a, const UnitElement& b) const { return {mulmod(a.residue, b.residue, m_)}; }

UnitElement UnitGroup::inv(const UnitElement& a) const {
  if (modulus_.empty()) return identity();
  return {invmod(a.residue, m_)};
}

UnitElement UnitGroup::pow(const UnitElement& a, const mpz_class& e) const {
  if (modulus_.empty()) return identity();
  mpz_class r = e % order_;
  if (r < 0) r += order_;
  return {powmod(a.residue, r, m_)};
}

std::vector<Poly> UnitGroup::components(const UnitElement& a) const {
  std::vector<Poly> out;
  for (const auto& lf : factors_) out.push_back(a.residue % lf->modulus);
  return out;
}

UnitElement UnitGroup::combine(const std::vector<Poly>& comps) const {
  if (comps.size() != factors_.size()) throw DomainError("wrong number of CRT components");
  Poly out(field());
  for (std::size_t i = 0; i < comps.size(); ++i) out = out + mulmod(comps[i], idempotents_[i], m_);
  if (factors_.empty()) return identity();
  return {out % m_};
}

Vec UnitGroup::dlog(const UnitElement& a) const {
  Vec out;
  out.reserve(coords_.rank());
  for (const auto& lf : factors_) {
    const Vec local = lf->dlog(a.residue % lf->modulus);
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

UnitElement UnitGroup::exp(const Vec& coords) const {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t len = factors_[i]->invariants().size();
    Vec local(coords.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              coords.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + len));
    comps.push_back(factors_[i]->exp(local));
  }
  return combine(comps);
}

mpz_class UnitGroup::element_order(const UnitElement& a) const {
  if (!order_factorization_.complete()) throw LimitError("group order is not completely factored");
  mpz_class o = order_;
  const UnitElement one = identity();
  for (const auto& [s, k] : order_factorization_.primes) {
    for (int i = 0; i < k; ++i) {
      const mpz_class smaller = o / s;
      if (pow(a, smaller) == one)
        o = smaller;
      else
        break;
    }
  }
  return o;
}

std::vector<UnitElement> UnitGroup::kth_roots(const UnitElement& s, std::int64_t k) const {
  if (k < 1) throw DomainError("root index must be positive");
  std::vector<UnitElement> out;
  for (const Vec& x : coords_.solve_multiple(k, dlog(s))) out.push_back(exp(x));
  return out;
}

std::vector<Vec> UnitGroup::filtration_generators(std::size_t i, int j) const {
  std::vector<Vec> out;
  for (const Vec& local : factor(i).filtration_generators(j)) out.push_back(embed(i, local));
  return out;
}

Vec UnitGroup::embed(std::size_t i, const Vec& local) const {
  Vec out(coords_.rank(), 0);
  for (std::size_t k = 0; k < local.size(); ++k) out[offsets_.at(i) + k] = local[k];
  return out;
}

}  // namespace pointless
