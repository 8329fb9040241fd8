#pragma once

#include "kahlerdeg/rational.hpp"

#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kahlerdeg {

using Exponent = std::int64_t;

/// Raised by parse_poly. `position` is the 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Sparse univariate polynomial in t over the rationals.
///
/// Terms are kept in descending exponent order so the leading term is
/// `begin()`. No stored coefficient is ever zero; the zero polynomial has no
/// terms.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<>>;
  using const_iterator = TermMap::const_iterator;

  Poly() = default;

  static Poly constant(const Rational& c) { return monomial(c, 0); }

  static Poly monomial(const Rational& c, Exponent e) {
    if (e < 0) throw std::invalid_argument("Poly: negative exponent");
    Poly p;
    if (!kahlerdeg::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }

  /// t^e with coefficient 1.
  static Poly power(Exponent e) { return monomial(Rational{1}, e); }

  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degree d(f); -1 for the zero polynomial.
  Exponent degree() const noexcept {
    return terms_.empty() ? -1 : terms_.begin()->first;
  }

  /// Coefficient of the leading monomial M(f); zero for the zero polynomial.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational{0} : terms_.begin()->second;
  }

  Rational coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational{0} : it->second;
  }

  bool is_monic() const { return !terms_.empty() && is_one(terms_.begin()->second); }

  /// Exponents with nonzero coefficient, descending.
  std::vector<Exponent> support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  std::size_t term_count() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// f - M(f)
  Poly tail() const {
    Poly p = *this;
    if (!p.terms_.empty()) p.terms_.erase(p.terms_.begin());
    return p;
  }

  Poly monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational{1} / leading_coefficient());
  }

  void add_term(Exponent e, const Rational& c) {
    if (kahlerdeg::is_zero(c)) return;
    if (e < 0) throw std::invalid_argument("Poly: negative exponent");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (kahlerdeg::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (kahlerdeg::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational{-1}; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply by c*t^e.
  Poly shifted(Exponent e, const Rational& c = Rational{1}) const {
    Poly out;
    if (kahlerdeg::is_zero(c)) return out;
    for (const auto& [ex, cx] : terms_) out.terms_.emplace_hint(out.terms_.end(), ex + e, cx * c);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    Exponent prev = degree();
    for (const auto& [e, c] : terms_) {
      for (Exponent k = e; k < prev; ++k) acc *= x;
      acc += c;
      prev = e;
    }
    for (Exponent k = 0; k < prev; ++k) acc *= x;
    return acc;
  }

 private:
  TermMap terms_;
};

inline Poly pow(const Poly& base, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Poly result = Poly::constant(1);
  Poly b = base;
  while (k > 0) {
    if (k & 1) result *= b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return result;
}

/// Formal derivative.
inline Poly derivative(const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (e > 0) out.add_term(e - 1, c * Rational{static_cast<long>(e)});
  }
  return out;
}

/// p(t + shift)
inline Poly substitute_shift(const Poly& p, const Rational& shift) {
  Poly out;
  const Poly lin = Poly::power(1) + Poly::constant(shift);
  // Horner in descending order.
  Exponent prev = p.degree();
  if (prev < 0) return out;
  for (const auto& [e, c] : p) {
    for (Exponent k = e; k < prev; ++k) out *= lin;
    out += Poly::constant(c);
    prev = e;
  }
  for (Exponent k = 0; k < prev; ++k) out *= lin;
  return out;
}

/// Canonical rendering: descending exponents, reduced fractions, `*` between
/// coefficient and power, unit coefficients elided. Matches the GAP strings,
/// e.g. "t^7+1/2*t^2" and "t^2+2/3*t".
inline std::string render(const Poly& p, std::string_view var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p) {
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (!is_one(mag)) {
      out += to_string(mag);
      out += "*";
    }
    out += var;
    if (e != 1) {
      out += "^";
      out += std::to_string(e);
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Poly out;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out += term() * Rational{sign};
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      out += term() * Rational{c == '-' ? -1 : 1};
      skip_ws();
    }
    return out;
  }

 private:
  Poly term() {
    skip_ws();
    if (at_end()) throw ParseError("expected term", pos_);
    if (peek() == 't') return Poly::power(power());
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(std::string("expected coefficient or 't', found '") + peek() + "'", pos_);
    }
    Rational coeff{Integer{digits()}};
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      Integer den{digits()};
      if (den == 0) throw ParseError("zero denominator", at);
      coeff /= Rational{den};
      skip_ws();
    }
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 't') throw ParseError("expected 't' after '*'", pos_);
      return Poly::monomial(coeff, power());
    }
    return Poly::constant(coeff);
  }

  Exponent power() {
    ++pos_;  // 't'
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent overflow", at);
    return std::stoll(d);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `expr := term (('+'|'-') term)*` with `term := coeff ['*' power] |
/// power`, `power := 't' ['^' nat]`, `coeff := int ['/' nat]`. A leading sign
/// on the first term is accepted. Whitespace is ignored.
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Splits on top-level commas: "t^6+t, t^4" -> two polynomials.
inline std::vector<Poly> parse_poly_list(std::string_view text) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    try {
      out.push_back(parse_poly(text.substr(start, stop - start)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// GAP-style list rendering: "[ t^4, t^6+t, t^7+1/2*t^2 ]".
inline std::string render_list(const std::vector<Poly>& ps) {
  if (ps.empty()) return "[ ]";
  std::string out = "[ ";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += render(ps[i]);
  }
  return out + " ]";
}

template <class Int>
std::string render_list(const std::vector<Int>& xs) {
  if (xs.empty()) return "[ ]";
  std::string out = "[ ";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + " ]";
}

}  // namespace kahlerdeg
