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

#include "pointless/abelian.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <string>

#include "pointless/error.hpp"
#include "pointless/integer.hpp"

namespace pointless {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> invariants) : inv_(std::move(invariants)) {
  for (std::int64_t e : inv_) {
    if (e < 1) throw DomainError("cyclic factor orders must be positive");
    order_ = checked_mul(order_, e);
  }
}

std::int64_t AbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t d : inv_) e = lcm(e, d);
  return e;
}

bool AbelianGroup::is_smith_form() const {
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    if (inv_[i] < 2) return false;
    if (i > 0 && inv_[i] % inv_[i - 1] != 0) return false;
  }
  return true;
}

bool AbelianGroup::is_cyclic() const {
  std::int64_t acc = 1;
  for (std::int64_t e : inv_) {
    if (gcd(acc, e) != 1) return false;
    acc *= e;
  }
  return true;
}

Vec AbelianGroup::reduce(Vec v) const {
  for (std::size_t i = 0; i < inv_.size(); ++i) v[i] = mod(v[i], inv_[i]);
  return v;
}

Vec AbelianGroup::add(const Vec& a, const Vec& b) const {
  Vec out(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) out[i] = mod(a[i] + b[i], inv_[i]);
  return out;
}

Vec AbelianGroup::sub(const Vec& a, const Vec& b) const {
  Vec out(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) out[i] = mod(a[i] - b[i], inv_[i]);
  return out;
}

Vec AbelianGroup::neg(const Vec& a) const {
  Vec out(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) out[i] = mod(-a[i], inv_[i]);
  return out;
}

Vec AbelianGroup::scale(std::int64_t k, const Vec& a) const {
  Vec out(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    const __int128 p = static_cast<__int128>(mod(k, inv_[i])) * a[i];
    out[i] = static_cast<std::int64_t>(p % inv_[i]);
  }
  return out;
}

bool AbelianGroup::is_zero(const Vec& a) const {
  for (std::size_t i = 0; i < inv_.size(); ++i)
    if (mod(a[i], inv_[i]) != 0) return false;
  return true;
}

std::int64_t AbelianGroup::order_of(const Vec& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < inv_.size(); ++i) o = lcm(o, inv_[i] / gcd(mod(a[i], inv_[i]), inv_[i]));
  return o;
}

Vec AbelianGroup::element_at(std::int64_t index) const {
  Vec out(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    out[i] = index % inv_[i];
    index /= inv_[i];
  }
  return out;
}

void AbelianGroup::for_each_element(const std::function<void(const Vec&)>& visit) const {
  Vec v = zero();
  for (std::int64_t n = 0; n < order_; ++n) {
    visit(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (++v[i] < inv_[i]) break;
      v[i] = 0;
    }
  }
}

std::vector<Vec> AbelianGroup::solve_multiple(std::int64_t k, const Vec& target) const {
  const std::size_t r = inv_.size();
  Vec base(r), step(r), count(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t e = inv_[i];
    const std::int64_t t = mod(target[i], e);
    const std::int64_t g = gcd(mod(k, e), e);  // gcd(0, e) = e
    if (t % g != 0) return {};
    const std::int64_t m = e / g;
    const std::int64_t kk = mod(k, e) / g;
    base[i] = m == 1 ? 0 : static_cast<std::int64_t>(static_cast<__int128>(t / g) * inverse_mod(kk, m) % m);
    step[i] = m;
    count[i] = g;
  }
  std::vector<Vec> out;
  Vec idx(r, 0);
  while (true) {
    Vec x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = base[i] + idx[i] * step[i];
    out.push_back(std::move(x));
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (++idx[i] < count[i]) break;
      idx[i] = 0;
    }
    if (i == r) break;
  }
  return out;
}

std::int64_t AbelianGroup::count_multiple_solutions(std::int64_t k, const Vec& target) const {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    const std::int64_t e = inv_[i];
    const std::int64_t g = gcd(mod(k, e), e);
    if (mod(target[i], e) % g != 0) return 0;
    n = checked_mul(n, g);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Smith normal form of the relation matrix, tracking column operations.

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

struct Smith {
  std::vector<mpz_class> diagonal;  // one entry per column
  BigMatrix v;                      // A * V is diagonal up to row operations
  BigMatrix v_inv;
};

Smith smith_form(BigMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  Smith s;
  s.v.assign(cols, std::vector<mpz_class>(cols, 0));
  s.v_inv.assign(cols, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) s.v[i][i] = s.v_inv[i][i] = 1;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
    std::swap(s.v_inv[i], s.v_inv[j]);
  };
  // col_j -= k * col_t
  auto col_axpy = [&](std::size_t j, std::size_t t, const mpz_class& k) {
    for (auto& row : a) row[j] -= k * row[t];
    for (auto& row : s.v) row[j] -= k * row[t];
    for (std::size_t c = 0; c < cols; ++c) s.v_inv[t][c] += k * s.v_inv[j][c];
  };
  auto row_axpy = [&](std::size_t i, std::size_t t, const mpz_class& k) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= k * a[t][c];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(i, t, q);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
  }
  s.diagonal.assign(cols, 0);
  for (std::size_t t = 0; t < steps; ++t) s.diagonal[t] = abs(a[t][t]);
  return s;
}

}  // namespace

Quotient make_quotient(const AbelianGroup& group, std::span<const Vec> gens) {
  const std::size_t r = group.rank();
  BigMatrix rel;
  rel.reserve(r + gens.size());
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<mpz_class> row(r, 0);
    row[i] = static_cast<long>(group.invariants()[i]);
    rel.push_back(std::move(row));
  }
  for (const Vec& g : gens) {
    if (g.size() != r) throw DomainError("generator has the wrong number of coordinates");
    std::vector<mpz_class> row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = static_cast<long>(mod(g[i], group.invariants()[i]));
    rel.push_back(std::move(row));
  }
  Smith s = smith_form(std::move(rel), r);

  Quotient q;
  q.source_ = group;
  std::vector<std::int64_t> inv;
  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < r; ++t) {
    if (s.diagonal[t] == 0) throw DomainError("relation lattice is not of full rank");
    if (s.diagonal[t] > 1) {
      inv.push_back(to_int64(s.diagonal[t]));
      keep.push_back(t);
    }
  }
  q.target_ = AbelianGroup(inv);
  q.proj_.assign(r, Vec(keep.size(), 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < keep.size(); ++k) {
      mpz_class v = s.v[i][keep[k]] % s.diagonal[keep[k]];
      if (v < 0) v += s.diagonal[keep[k]];
      q.proj_[i][k] = to_int64(v);
    }
  q.lift_.assign(keep.size(), Vec(r, 0));
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t c = 0; c < r; ++c) {
      const mpz_class e = static_cast<long>(group.invariants()[c]);
      mpz_class v = s.v_inv[keep[k]][c] % e;
      if (v < 0) v += e;
      q.lift_[k][c] = to_int64(v);
    }
  return q;
}

Vec Quotient::project(const Vec& x) const {
  const auto& inv = target_.invariants();
  Vec y(inv.size(), 0);
  for (std::size_t k = 0; k < inv.size(); ++k) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      acc += static_cast<__int128>(x[i]) * proj_[i][k];
      acc %= inv[k];
    }
    y[k] = mod(static_cast<std::int64_t>(acc), inv[k]);
  }
  return y;
}

Vec Quotient::lift(const Vec& y) const {
  const auto& inv = source_.invariants();
  Vec x(inv.size(), 0);
  for (std::size_t c = 0; c < inv.size(); ++c) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      acc += static_cast<__int128>(y[k]) * lift_[k][c];
      acc %= inv[c];
    }
    x[c] = mod(static_cast<std::int64_t>(acc), inv[c]);
  }
  return x;
}

std::int64_t subgroup_order(const AbelianGroup& group, std::span<const Vec> gens) {
  return group.order() / make_quotient(group, gens).target().order();
}

// ---------------------------------------------------------------------------
// Subgroup enumeration.

namespace {

struct PrimaryPart {
  std::int64_t p;
  std::vector<std::size_t> positions;  // coordinates with nontrivial p-part
  std::vector<int> exps;               // a_j
  std::vector<std::int64_t> mult;      // e_j / p^{a_j}
};

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

// Does the row lattice of the upper-triangular `m` contain p^{a_i} e_i?
bool contains_unit_multiple(const std::vector<Vec>& m, std::size_t i, std::int64_t value) {
  const std::size_t r = m.size();
  std::vector<__int128> v(r, 0);
  v[i] = value;
  for (std::size_t j = 0; j < r; ++j) {
    if (v[j] == 0) continue;
    if (v[j] % m[j][j] != 0) return false;
    const __int128 c = v[j] / m[j][j];
    for (std::size_t k = j; k < r; ++k) v[k] -= c * m[j][k];
  }
  return true;
}

// All subgroups of index p^k of the p-primary part, as generator lists in
// the coordinates of the full group.
std::vector<std::vector<Vec>> primary_subgroups(const PrimaryPart& part, int k, std::size_t full_rank) {
  const std::size_t r = part.positions.size();
  std::vector<std::vector<Vec>> out;
  std::vector<int> b(r, 0);

  auto emit_for_diagonal = [&]() {
    std::vector<Vec> m(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = ipow64(part.p, b[i]);
    // Odometer over the entries above the diagonal, each in [0, m[j][j]).
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (m[j][j] > 1) cells.emplace_back(i, j);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i)
        ok = contains_unit_multiple(m, i, ipow64(part.p, part.exps[i]));
      if (ok) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < r; ++i) {
          Vec g(full_rank, 0);
          bool nonzero = false;
          for (std::size_t j = 0; j < r; ++j) {
            const std::size_t pos = part.positions[j];
            const std::int64_t e = ipow64(part.p, part.exps[j]) * part.mult[j];
            g[pos] = mod(static_cast<std::int64_t>(static_cast<__int128>(m[i][j]) * part.mult[j] % e), e);
            nonzero = nonzero || g[pos] != 0;
          }
          if (nonzero) gens.push_back(std::move(g));
        }
        out.push_back(std::move(gens));
      }
      std::size_t c = 0;
      for (; c < cells.size(); ++c) {
        auto [i, j] = cells[c];
        if (++m[i][j] < m[j][j]) break;
        m[i][j] = 0;
      }
      if (c == cells.size()) break;
    }
  };

  // Diagonal exponents b_i in [0, a_i] summing to k.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == r) {
      if (left == 0) emit_for_diagonal();
      return;
    }
    for (int bi = 0; bi <= std::min(left, part.exps[i]); ++bi) {
      b[i] = bi;
      rec(i + 1, left - bi);
    }
  };
  rec(0, k);
  return out;
}

}  // namespace

void for_each_subgroup(const AbelianGroup& group, std::int64_t index,
                       const std::function<void(const std::vector<Vec>&)>& visit, SubgroupLimits limits) {
  const std::int64_t order = group.order();
  if (index < 1 || order % index != 0)
    throw DomainError("subgroup index " + std::to_string(index) + " does not divide the group order " +
                      std::to_string(order));
  if (order > limits.max_order)
    throw LimitError("group of order " + std::to_string(order) + " exceeds the subgroup-enumeration bound " +
                     std::to_string(limits.max_order));

  std::vector<PrimaryPart> parts;
  for (auto [p64, e] : factor(static_cast<std::uint64_t>(order))) {
    PrimaryPart part;
    part.p = static_cast<std::int64_t>(p64);
    for (std::size_t j = 0; j < group.rank(); ++j) {
      std::int64_t ej = group.invariants()[j];
      int a = 0;
      while (ej % part.p == 0) {
        ej /= part.p;
        ++a;
      }
      if (a > 0) {
        part.positions.push_back(j);
        part.exps.push_back(a);
        part.mult.push_back(ej);
      }
    }
    if (part.positions.size() > limits.max_rank)
      throw LimitError("p-rank " + std::to_string(part.positions.size()) + " exceeds the subgroup-enumeration bound");
    parts.push_back(std::move(part));
  }

  std::vector<std::vector<std::vector<Vec>>> per_prime;
  for (const PrimaryPart& part : parts) {
    int k = 0;
    std::int64_t idx = index;
    while (idx % part.p == 0) {
      idx /= part.p;
      ++k;
    }
    per_prime.push_back(primary_subgroups(part, k, group.rank()));
  }

  std::vector<Vec> gens;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == per_prime.size()) {
      visit(gens);
      return;
    }
    for (const auto& choice : per_prime[i]) {
      const std::size_t mark = gens.size();
      gens.insert(gens.end(), choice.begin(), choice.end());
      combine(i + 1);
      gens.resize(mark);
    }
  };
  combine(0);
}

std::int64_t count_subgroups(const AbelianGroup& group, std::int64_t index, SubgroupLimits limits) {
  std::int64_t n = 0;
  for_each_subgroup(group, index, [&](const std::vector<Vec>&) { ++n; }, limits);
  return n;
}

}  // namespace pointless
