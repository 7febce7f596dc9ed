#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace octacat {

using Rational = mpq_class;

/// Parses `[-]p[/q]` into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  bool slash = false;
  bool digit_seen = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (slash || !digit_seen) throw ParseError("bad rational literal '" + std::string(text) + "'");
      slash = true;
      digit_seen = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_seen = true;
    } else {
      throw ParseError("bad rational literal '" + std::string(text) + "'");
    }
  }
  if (!digit_seen) throw ParseError("bad rational literal '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Univariate polynomial in the formal parameter `t` with rational coefficients.
///
/// Stored densely by exponent with the leading coefficient nonzero; the zero
/// polynomial has no coefficients at all.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long c) { if (c != 0) coeffs_.emplace_back(c); }  // NOLINT(implicit)
  PolyQ(const Rational& c) {  // NOLINT(implicit)
    if (c != 0) {
      coeffs_.push_back(c);
      coeffs_.back().canonicalize();
    }
  }

  static PolyQ t() { return monomial(Rational(1), 1); }
  static PolyQ monomial(const Rational& c, std::size_t exponent) {
    PolyQ p;
    if (c == 0) return p;
    p.coeffs_.assign(exponent + 1, Rational(0));
    p.coeffs_[exponent] = c;
    p.coeffs_[exponent].canonicalize();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  PolyQ& operator+=(const PolyQ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
  PolyQ& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& x : coeffs_) x *= c;
    }
    return *this;
  }

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator-(PolyQ a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }

  PolyQ pow(std::size_t e) const {
    PolyQ result(1L);
    PolyQ base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Exact division; throws if `d` does not divide `*this`.
  PolyQ exact_div(const PolyQ& d) const {
    if (d.is_zero()) throw Error("division by the zero polynomial");
    PolyQ rem = *this;
    PolyQ quot;
    const Rational& lead = d.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
      PolyQ term = monomial(rem.coeffs_.back() / lead, shift);
      quot += term;
      rem -= term * d;
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    return quot;
  }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. `t^2 - 3*t + 1/2`.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      std::string body;
      if (i == 0) {
        body = mag.get_str();
      } else {
        std::string var = i == 1 ? "t" : "t^" + std::to_string(i);
        body = mag == 1 ? var : mag.get_str() + "*" + var;
      }
      if (first) {
        out = (c < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (c < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

  /// Inverse of `str()`; also accepts missing spaces, a leading `+`, and
  /// outer parentheses.
  static PolyQ parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty polynomial literal");
    PolyQ result;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
      }
      first = false;
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') {
        if (s[end] == '^') {
          ++end;
          if (end < s.size() && (s[end] == '+' || s[end] == '-')) ++end;
          continue;
        }
        ++end;
      }
      std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
      Rational c = 1;
      std::size_t exponent = 0;
      std::size_t tpos = term.find('t');
      std::string coeff_part = tpos == std::string::npos ? term : term.substr(0, tpos);
      if (tpos != std::string::npos) {
        if (!coeff_part.empty()) {
          if (coeff_part.back() != '*') throw ParseError("expected '*' before t in '" + term + "'");
          coeff_part.pop_back();
          if (coeff_part.empty()) throw ParseError("missing coefficient in '" + term + "'");
        }
        std::string rest = term.substr(tpos + 1);
        exponent = 1;
        if (!rest.empty()) {
          if (rest.front() != '^' || rest.size() < 2) throw ParseError("bad exponent in '" + term + "'");
          for (std::size_t i = 1; i < rest.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(rest[i]))) throw ParseError("bad exponent in '" + term + "'");
          exponent = std::stoul(rest.substr(1));
        }
      }
      if (!coeff_part.empty()) c = parse_rational(coeff_part);
      result += monomial(sign * c, exponent);
      pos = end;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline std::string to_string(const PolyQ& p) { return p.str(); }

}  // namespace octacat
