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

#include "pointless/modulus.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pointless/error.hpp"
#include "pointless/irreducible.hpp"

namespace pointless {

Place Place::finite(const Poly& p) {
  if (p.degree() < 1) throw DomainError("place polynomial '" + pointless::to_string(p) + "' is constant");
  if (!is_irreducible(p)) throw DomainError("place polynomial '" + pointless::to_string(p) + "' is not irreducible");
  Place out;
  out.field_ = p.field();
  out.poly_ = p.monic();
  return out;
}

Place Place::infinity(FieldPtr field) {
  Place out;
  out.poly_ = Poly(field);
  out.field_ = std::move(field);
  out.infinite_ = true;
  return out;
}

std::string Place::to_string(PrintOptions opts) const {
  return infinite_ ? std::string("inf") : pointless::to_string(poly_, opts);
}

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// True if s[0] == '(' and its partner is s.back().
bool wrapped(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
  }
  return false;
}

}  // namespace

Place parse_place(const FieldPtr& field, std::string_view text) {
  std::string s = trim(text);
  if (s == "inf" || s == "infinity") return Place::infinity(field);
  while (wrapped(s)) s = s.substr(1, s.size() - 2);
  const Poly p = parse_poly(field, s);
  if (p.degree() < 1) throw DomainError("place '" + s + "' is constant");
  if (!is_irreducible(p)) throw DomainError("place '" + s + "' is not irreducible");
  return Place::finite(p);
}

Modulus::Modulus(FieldPtr field, std::vector<ModulusFactor> factors) : field_(std::move(field)) {
  std::map<Poly, int> merged;
  for (auto& f : factors) {
    if (f.multiplicity < 1) throw DomainError("multiplicity of '" + pointless::to_string(f.place) + "' must be positive");
    if (f.place.field() != field_) throw DomainError("modulus factor over a different field");
    if (f.place.degree() < 1) throw DomainError("modulus factor '" + pointless::to_string(f.place) + "' is constant");
    if (!is_irreducible(f.place))
      throw DomainError("modulus factor '" + pointless::to_string(f.place) + "' is not irreducible");
    merged[f.place.monic()] += f.multiplicity;
  }
  for (auto& [p, e] : merged) factors_.push_back({p, e});
}

int Modulus::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.multiplicity * f.place.degree();
  return d;
}

Poly Modulus::product() const {
  Poly out = Poly::constant(field_, 1);
  for (const auto& f : factors_)
    for (int i = 0; i < f.multiplicity; ++i) out = out * f.place;
  return out;
}

int Modulus::find(const Poly& p) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].place == p) return static_cast<int>(i);
  return -1;
}

Modulus Modulus::without(std::size_t index) const {
  Modulus out(field_);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (i != index) out.factors_.push_back(factors_[i]);
  return out;
}

std::string Modulus::to_string(PrintOptions opts) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ", ";
    if (f.multiplicity == 1)
      out += pointless::to_string(f.place, opts);
    else
      out += "(" + pointless::to_string(f.place, opts) + ")^" + std::to_string(f.multiplicity);
  }
  return out;
}

bool operator==(const Modulus& a, const Modulus& b) noexcept {
  if (a.field_ != b.field_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (!(a.factors_[i].place == b.factors_[i].place) || a.factors_[i].multiplicity != b.factors_[i].multiplicity)
      return false;
  return true;
}

Modulus parse_modulus(const FieldPtr& field, std::string_view text) {
  std::string s = trim(text);
  if (s.empty() || s == "1") return Modulus(field);
  // Outer parentheses around a comma list, e.g. "(a,b)".
  if (wrapped(s) && s.find(',') != std::string::npos) s = s.substr(1, s.size() - 2);

  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in modulus '" + s + "'");
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in modulus '" + s + "'");
  items.push_back(cur);

  std::vector<ModulusFactor> factors;
  for (std::string item : items) {
    if (item.empty()) throw ParseError("empty factor in modulus '" + s + "'");
    int mult = 1;
    if (item.front() == '(') {
      const std::size_t close = item.rfind(')');
      const std::string tail = item.substr(close + 1);
      if (!tail.empty()) {
        if (tail.size() < 2 || tail[0] != '^' ||
            !std::all_of(tail.begin() + 1, tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError("bad multiplicity '" + tail + "' in modulus factor '" + item + "'");
        if (tail.size() > 6) throw ParseError("multiplicity too large in '" + item + "'");
        mult = std::stoi(tail.substr(1));
        item = item.substr(0, close + 1);
      }
      while (wrapped(item)) item = item.substr(1, item.size() - 2);
    }
    const Poly p = parse_poly(field, item);
    if (p.degree() < 1) throw DomainError("modulus factor '" + item + "' is constant");
    if (!is_irreducible(p)) throw DomainError("modulus factor '" + item + "' is not irreducible");
    if (mult < 1) throw DomainError("multiplicity of '" + item + "' must be positive");
    factors.push_back({p.monic(), mult});
  }
  return Modulus(field, std::move(factors));
}

void for_each_modulus(const FieldPtr& field, int max_degree, const std::function<void(const Modulus&)>& visit) {
  std::vector<Poly> places;
  for (int t = 1; t <= max_degree; ++t)
    for (const Poly& p : monic_irreducibles(field, static_cast<unsigned>(t))) places.push_back(p);

  for (int total = 0; total <= max_degree; ++total) {
    std::vector<ModulusFactor> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
      if (left == 0) {
        visit(Modulus(field, chosen));
        return;
      }
      for (std::size_t i = start; i < places.size(); ++i) {
        const int d = places[i].degree();
        if (d > left) break;
        for (int e = 1; e * d <= left; ++e) {
          chosen.push_back({places[i], e});
          rec(i + 1, left - e * d);
          chosen.pop_back();
        }
      }
    };
    rec(0, total);
  }
}

}  // namespace pointless
