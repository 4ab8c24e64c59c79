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

#include "pointless/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "detail/gf2.hpp"
#include "pointless/error.hpp"

namespace pointless {

namespace gf2 = detail;

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, const std::vector<Elem>& coeffs) : field_(std::move(field)) {
  if (field_->is_binary()) {
    words_.assign((coeffs.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] & 1u) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  } else {
    lanes_.reserve(coeffs.size());
    for (Elem c : coeffs) {
      if (c >= field_->q()) throw DomainError("coefficient out of range for F_" + std::to_string(field_->q()));
      lanes_.push_back(static_cast<std::uint16_t>(c));
    }
  }
  normalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t k) {
  std::vector<Elem> coeffs(k + 1, 0);
  coeffs[k] = c;
  return Poly(std::move(field), coeffs);
}

Poly Poly::from_words(FieldPtr field, std::vector<std::uint64_t> words) {
  if (!field->is_binary()) throw DomainError("bit-packed construction requires F_2");
  Poly f(std::move(field));
  f.words_ = std::move(words);
  f.normalize();
  return f;
}

Poly Poly::from_index(FieldPtr field, std::uint64_t index) {
  if (field->is_binary()) return from_words(std::move(field), {index});
  std::vector<Elem> coeffs;
  const std::uint64_t q = field->q();
  while (index != 0) {
    coeffs.push_back(static_cast<Elem>(index % q));
    index /= q;
  }
  return Poly(std::move(field), coeffs);
}

void Poly::normalize() {
  if (field_ && field_->is_binary()) {
    gf2::trim(words_);
    degree_ = gf2::degree(words_);
  } else {
    while (!lanes_.empty() && lanes_.back() == 0) lanes_.pop_back();
    degree_ = static_cast<int>(lanes_.size()) - 1;
  }
}

void Poly::require_same_field(const Poly& other) const {
  if (field_ != other.field_) throw DomainError("polynomial operands live over different fields");
}

Elem Poly::coeff(std::size_t i) const noexcept {
  if (degree_ < 0 || i > static_cast<std::size_t>(degree_)) return 0;
  if (field_->is_binary()) return static_cast<Elem>((words_[i / 64] >> (i % 64)) & 1u);
  return lanes_[i];
}

std::vector<Elem> Poly::coefficients() const {
  std::vector<Elem> out(static_cast<std::size_t>(degree_ + 1));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i);
  return out;
}

std::uint64_t Poly::index() const {
  if (field_->is_binary()) {
    if (words_.size() > 1) throw LimitError("polynomial index exceeds 64 bits");
    return words_.empty() ? 0 : words_[0];
  }
  const unsigned __int128 q = field_->q();
  unsigned __int128 v = 0;
  for (int i = degree_; i >= 0; --i) {
    v = v * q + coeff(static_cast<std::size_t>(i));
    if (v > UINT64_MAX) throw LimitError("polynomial index exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(field_);
  if (c == 1 || field_->is_binary()) return *this;
  Poly out = *this;
  for (auto& lane : out.lanes_) lane = static_cast<std::uint16_t>(field_->mul(lane, c));
  out.normalize();
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly out(field_);
  if (field_->is_binary()) {
    gf2::xor_shifted(out.words_, words_, k);
  } else {
    out.lanes_.assign(k, 0);
    out.lanes_.insert(out.lanes_.end(), lanes_.begin(), lanes_.end());
  }
  out.normalize();
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (field_->is_binary()) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  } else {
    if (lanes_.size() < rhs.lanes_.size()) lanes_.resize(rhs.lanes_.size(), 0);
    for (std::size_t i = 0; i < rhs.lanes_.size(); ++i)
      lanes_[i] = static_cast<std::uint16_t>(field_->add(lanes_[i], rhs.lanes_[i]));
  }
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (field_->is_binary()) return *this += rhs;
  if (lanes_.size() < rhs.lanes_.size()) lanes_.resize(rhs.lanes_.size(), 0);
  for (std::size_t i = 0; i < rhs.lanes_.size(); ++i)
    lanes_[i] = static_cast<std::uint16_t>(field_->sub(lanes_[i], rhs.lanes_[i]));
  normalize();
  return *this;
}

Poly operator-(const Poly& a) {
  if (a.field_->is_binary()) return a;
  Poly out = a;
  for (auto& lane : out.lanes_) lane = static_cast<std::uint16_t>(a.field_->neg(lane));
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  Poly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& f = *a.field_;
  if (f.is_binary()) {
    if (a.words_.size() == 1 && b.words_.size() == 1) {
      const auto r = gf2::clmul64(a.words_[0], b.words_[0]);
      out.words_ = {r.lo, r.hi};
    } else {
      for (int i = 0; i <= a.degree_; ++i)
        if (gf2::bit(a.words_, static_cast<std::size_t>(i))) gf2::xor_shifted(out.words_, b.words_, static_cast<std::size_t>(i));
    }
  } else {
    out.lanes_.assign(a.lanes_.size() + b.lanes_.size() - 1, 0);
    for (std::size_t i = 0; i < a.lanes_.size(); ++i) {
      if (a.lanes_[i] == 0) continue;
      for (std::size_t j = 0; j < b.lanes_.size(); ++j)
        out.lanes_[i + j] = static_cast<std::uint16_t>(f.add(out.lanes_[i + j], f.mul(a.lanes_[i], b.lanes_[j])));
    }
  }
  out.normalize();
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (a.field_ != b.field_ || a.degree_ != b.degree_) return false;
  return a.field_->is_binary() ? a.words_ == b.words_ : a.lanes_ == b.lanes_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (a.field_->is_binary()) {
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  for (std::size_t i = a.lanes_.size(); i-- > 0;)
    if (auto c = a.lanes_[i] <=> b.lanes_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw DomainError("polynomial operands live over different fields");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const FieldPtr& field = a.field();
  if (a.degree() < b.degree()) return {Poly(field), a};
  const int db = b.degree();
  if (field->is_binary()) {
    gf2::Words r = a.words();
    gf2::Words qw;
    const gf2::Words& bw = b.words();
    for (int i = a.degree(); i >= db; --i) {
      if (!gf2::bit(r, static_cast<std::size_t>(i))) continue;
      const std::size_t s = static_cast<std::size_t>(i - db);
      gf2::xor_shifted(r, bw, s);
      if (qw.size() <= s / 64) qw.resize(s / 64 + 1, 0);
      qw[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    return {Poly::from_words(field, std::move(qw)), Poly::from_words(field, std::move(r))};
  }
  std::vector<Elem> r = a.coefficients();
  const std::vector<Elem> bc = b.coefficients();
  std::vector<Elem> qc(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem lead_inv = field->inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Elem t = field->mul(c, lead_inv);
    const std::size_t s = static_cast<std::size_t>(i - db);
    qc[s] = t;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[s + j] = field->sub(r[s + j], field->mul(t, bc[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(field, qc), Poly(field, r)};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }

Poly operator%(const Poly& a, const Poly& b) {
  if (a.field() == b.field() && a.field()->is_binary() && !b.is_zero() && b.degree() >= 1 &&
      b.degree() < 64 && a.words().size() <= 2) {
    if (a.degree() < b.degree()) return a;
    const auto& w = a.words();
    const gf2::U128 x{w[0], w.size() > 1 ? w[1] : 0};
    return Poly::from_words(a.field(), {gf2::reduce128(x, b.words()[0], b.degree())});
  }
  return divrem(a, b).remainder;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& field = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(field, 1), s1(field);
  Poly t0(field), t1 = Poly::constant(field, 1);
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(qr.remainder));
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = field->inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

namespace {

bool binary_word_path(const Poly& a, const Poly& b, const Poly& m) {
  return m.field()->is_binary() && m.degree() >= 1 && m.degree() < 64 && a.degree() < m.degree() &&
         b.degree() < m.degree();
}

}  // namespace

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  if (m.is_zero()) throw DomainError("modulus is the zero polynomial");
  if (a.field() == m.field() && b.field() == m.field() && binary_word_path(a, b, m)) {
    if (a.is_zero() || b.is_zero()) return Poly(m.field());
    return Poly::from_words(m.field(), {gf2::mulmod64(a.words()[0], b.words()[0], m.words()[0], m.degree())});
  }
  return (a * b) % m;
}

Poly sqrmod(const Poly& a, const Poly& m) {
  if (a.field() == m.field() && binary_word_path(a, a, m)) {
    if (a.is_zero()) return a;
    return Poly::from_words(m.field(), {gf2::sqrmod64(a.words()[0], m.words()[0], m.degree())});
  }
  return mulmod(a, a, m);
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  if (m.is_zero()) throw DomainError("modulus is the zero polynomial");
  Poly base = a % m;
  Poly result = Poly::constant(m.field(), 1) % m;
  if (e == 0) return result;
  for (int i = 63 - std::countl_zero(e); i >= 0; --i) {
    result = sqrmod(result, m);
    if ((e >> i) & 1u) result = mulmod(result, base, m);
  }
  return result;
}

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m) {
  if (m.is_zero()) throw DomainError("modulus is the zero polynomial");
  if (e < 0) return powmod(invmod(a, m), mpz_class(-e), m);
  if (e.fits_ulong_p()) return powmod(a, static_cast<std::uint64_t>(e.get_ui()), m);
  Poly base = a % m;
  Poly result = Poly::constant(m.field(), 1) % m;
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    result = sqrmod(result, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = mulmod(result, base, m);
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& m) {
  ExtendedGcd eg = extended_gcd(a % m, m);
  if (!eg.g.is_one()) throw DomainError(to_string(a) + " is not invertible modulo " + to_string(m));
  return eg.s % m;
}

Elem eval(const Poly& f, Elem x) {
  const Field& field = *f.field();
  Elem acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = field.add(field.mul(acc, x), f.coeff(static_cast<std::size_t>(i)));
  return acc;
}

std::string to_string(const Poly& f, PrintOptions opts) {
  const Field& field = *f.field();
  if (opts.hex && field.is_binary()) {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (f.is_zero()) return "0x0";
    std::string out;
    for (int nib = f.degree() / 4; nib >= 0; --nib) {
      const auto w = f.words()[static_cast<std::size_t>(nib) / 16];
      out.push_back(kDigits[(w >> (4 * (nib % 16))) & 0xF]);
    }
    return "0x" + out;
  }
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Elem c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += field.to_string(c);
      continue;
    }
    if (c != 1) out += field.to_string(c) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

[[noreturn]] void bad_token(std::string_view token, std::string_view why) {
  throw ParseError("malformed polynomial term '" + std::string(token) + "': " + std::string(why));
}

std::uint64_t parse_uint(std::string_view s, std::string_view token) {
  if (s.empty()) bad_token(token, "missing number");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(token, "expected a decimal number");
    if (v > (UINT64_MAX - 9) / 10) bad_token(token, "number too large");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

Elem parse_coefficient(const Field& field, std::string_view s, std::string_view token) {
  if (!s.empty() && s[0] == 'a') {
    if (field.is_prime_field()) bad_token(token, "symbolic coefficient 'a' requires an extension field");
    if (s.size() == 1) return field.exp(1);
    if (s[1] != '^') bad_token(token, "expected 'a^j'");
    return field.exp(parse_uint(s.substr(2), token));
  }
  const std::uint64_t v = parse_uint(s, token);
  if (field.is_prime_field()) {
    if (v >= field.p()) bad_token(token, "coefficient must be below " + std::to_string(field.p()));
    return static_cast<Elem>(v);
  }
  if (v > 1) bad_token(token, "extension-field coefficients are 0, 1, a or a^j");
  return static_cast<Elem>(v);
}

Poly parse_hex(const FieldPtr& field, std::string_view text) {
  const std::string_view digits = text.substr(2);
  if (digits.empty()) bad_token(text, "empty hex literal");
  std::vector<std::uint64_t> words((digits.size() + 15) / 16, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[digits.size() - 1 - i])));
    std::uint64_t nib;
    if (ch >= '0' && ch <= '9') nib = static_cast<std::uint64_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') nib = static_cast<std::uint64_t>(ch - 'a' + 10);
    else bad_token(text, "invalid hex digit");
    words[i / 16] |= nib << (4 * (i % 16));
  }
  return Poly::from_words(field, std::move(words));
}

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("empty polynomial");
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    if (!field->is_binary()) bad_token(s, "hex form is only defined over F_2");
    return parse_hex(field, s);
  }

  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negate = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negate = s[pos] == '-';
      ++pos;
    } else if (!first) {
      bad_token(s.substr(pos), "expected '+' or '-'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view token = std::string_view(s).substr(pos, end - pos);
    if (token.empty()) bad_token(s, "empty term");
    pos = end;

    std::string_view coef_part = token;
    std::string_view x_part;
    if (const auto xp = token.find('x'); xp != std::string_view::npos) {
      coef_part = token.substr(0, xp);
      x_part = token.substr(xp);
      if (!coef_part.empty() && coef_part.back() == '*') coef_part.remove_suffix(1);
      if (!coef_part.empty() && coef_part.back() == '*') bad_token(token, "repeated '*'");
    }
    Elem c = 1;
    if (!coef_part.empty()) c = parse_coefficient(*field, coef_part, token);
    else if (x_part.empty()) bad_token(token, "empty term");

    std::uint64_t k = 0;
    if (!x_part.empty()) {
      if (x_part.size() == 1) k = 1;
      else if (x_part[1] != '^') bad_token(token, "expected 'x^k'");
      else k = parse_uint(x_part.substr(2), token);
    }
    if (k > (1u << 24)) bad_token(token, "exponent too large");
    if (negate) c = field->neg(c);
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = field->add(coeffs[k], c);
  }
  return Poly(field, coeffs);
}

}  // namespace pointless
