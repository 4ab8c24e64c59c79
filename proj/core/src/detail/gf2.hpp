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

#ifndef POINTLESS_DETAIL_GF2_HPP
#define POINTLESS_DETAIL_GF2_HPP

// Word-level arithmetic for bit-packed F_2[x].

#include <bit>
#include <cstdint>
#include <vector>

namespace pointless::detail {

using Words = std::vector<std::uint64_t>;

inline void trim(Words& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

inline int degree(const Words& w) {
  if (w.empty()) return -1;
  return static_cast<int>(64 * (w.size() - 1)) + 63 - std::countl_zero(w.back());
}

inline bool bit(const Words& w, std::size_t i) {
  const std::size_t k = i / 64;
  return k < w.size() && ((w[k] >> (i % 64)) & 1u);
}

/// dst ^= src * x^shift
inline void xor_shifted(Words& dst, const Words& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t ws = shift / 64;
  const unsigned bs = shift % 64;
  const std::size_t need = src.size() + ws + 1;
  if (dst.size() < need) dst.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + ws] ^= src[i] << bs;
    if (bs != 0) dst[i + ws + 1] ^= src[i] >> (64 - bs);
  }
}

struct U128 {
  std::uint64_t lo;
  std::uint64_t hi;
};

inline U128 clmul64(std::uint64_t a, std::uint64_t b) {
  U128 r{0, 0};
  while (a != 0) {
    const int i = std::countr_zero(a);
    r.lo ^= b << i;
    if (i != 0) r.hi ^= b >> (64 - i);
    a &= a - 1;
  }
  return r;
}

inline std::uint64_t spread32(std::uint32_t x) {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
  v = (v | (v << 2)) & 0x3333333333333333ull;
  v = (v | (v << 1)) & 0x5555555555555555ull;
  return v;
}

inline U128 square64(std::uint64_t a) {
  return {spread32(static_cast<std::uint32_t>(a)), spread32(static_cast<std::uint32_t>(a >> 32))};
}

/// Reduces x modulo m, where m has degree dm in [1, 63].
inline std::uint64_t reduce128(U128 x, std::uint64_t m, int dm) {
  while (x.hi != 0) {
    const int top = 127 - std::countl_zero(x.hi);
    const int s = top - dm;
    // s >= 1 because dm <= 63 < 64 <= top
    if (s >= 64) {
      x.hi ^= m << (s - 64);
    } else {
      x.lo ^= m << s;
      x.hi ^= m >> (64 - s);
    }
  }
  const std::uint64_t lead = std::uint64_t{1} << dm;
  while (x.lo >= lead) {
    const int top = 63 - std::countl_zero(x.lo);
    x.lo ^= m << (top - dm);
  }
  return x.lo;
}

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m, int dm) {
  return reduce128(clmul64(a, b), m, dm);
}

inline std::uint64_t sqrmod64(std::uint64_t a, std::uint64_t m, int dm) {
  return reduce128(square64(a), m, dm);
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const int db = 63 - std::countl_zero(b);
    while (a != 0) {
      const int da = 63 - std::countl_zero(a);
      if (da < db) break;
      a ^= b << (da - db);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace pointless::detail

#endif
