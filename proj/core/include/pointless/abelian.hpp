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

#ifndef POINTLESS_ABELIAN_HPP
#define POINTLESS_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pointless {

/// Integer coordinate vector of an element of a finite abelian group.
using Vec = std::vector<std::int64_t>;

/// Finite abelian group presented as Z/e_1 x ... x Z/e_r (each e_i >= 1).
/// Elements are coordinate vectors reduced into [0, e_i).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> invariants);

  std::size_t rank() const noexcept { return inv_.size(); }
  const std::vector<std::int64_t>& invariants() const noexcept { return inv_; }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const;
  /// True when e_1 | e_2 | ... | e_r and every e_i > 1.
  bool is_smith_form() const;
  bool is_cyclic() const;

  Vec zero() const { return Vec(inv_.size(), 0); }
  Vec reduce(Vec v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(std::int64_t k, const Vec& a) const;
  bool is_zero(const Vec& a) const;
  std::int64_t order_of(const Vec& a) const;

  /// Element number `index` in mixed-radix order (first coordinate fastest).
  Vec element_at(std::int64_t index) const;
  void for_each_element(const std::function<void(const Vec&)>& visit) const;

  /// All x with k*x == target, in mixed-radix order of the solution lattice.
  std::vector<Vec> solve_multiple(std::int64_t k, const Vec& target) const;
  /// Size of the solution set of k*x == target (0 or |G[k]|).
  std::int64_t count_multiple_solutions(std::int64_t k, const Vec& target) const;

 private:
  std::vector<std::int64_t> inv_;
  std::int64_t order_ = 1;
};

/// The canonical projection G -> G/<gens>, with the quotient in Smith normal
/// form and a section mapping quotient coordinates back to G.
class Quotient {
 public:
  Quotient() = default;

  const AbelianGroup& source() const noexcept { return source_; }
  const AbelianGroup& target() const noexcept { return target_; }
  Vec project(const Vec& x) const;
  /// Some preimage of y; project(lift(y)) == y.
  Vec lift(const Vec& y) const;

  friend Quotient make_quotient(const AbelianGroup& group, std::span<const Vec> gens);

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  std::vector<Vec> proj_;  // source rank rows, target rank columns
  std::vector<Vec> lift_;  // target rank rows, source rank columns
};

Quotient make_quotient(const AbelianGroup& group, std::span<const Vec> gens);

/// |<gens>|.
std::int64_t subgroup_order(const AbelianGroup& group, std::span<const Vec> gens);

struct SubgroupLimits {
  std::int64_t max_order = std::int64_t{1} << 24;
  std::size_t max_rank = 4;
};

/// Visits every subgroup of `group` with the given index exactly once, each
/// as a generating set in the coordinates of `group`. Subgroups are built
/// prime by prime from Hermite normal forms of the lattices between Z^r and
/// the relation lattice of each primary component.
/// Throws DomainError if index does not divide |group|, LimitError beyond
/// `limits`.
void for_each_subgroup(const AbelianGroup& group, std::int64_t index,
                       const std::function<void(const std::vector<Vec>&)>& visit, SubgroupLimits limits = {});

std::int64_t count_subgroups(const AbelianGroup& group, std::int64_t index, SubgroupLimits limits = {});

}  // namespace pointless

#endif
