#pragma once

// Truncated Laurent series in one variable with exact rational coefficients.
//
// A series carries a floor: every exponent below it is unknown (it was
// discarded or never computed). A floor of kExact marks a series that is
// known exactly, e.g. one built from a polynomial. Arithmetic propagates the
// floor so callers can tell when precision has run out.

#include "kahlerdeg/poly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kahlerdeg {

inline constexpr Exponent kExact = std::numeric_limits<Exponent>::min() / 4;

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentSeries {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<>>;

  LaurentSeries() = default;

  explicit LaurentSeries(const Poly& p, Exponent floor = kExact) : floor_(floor) {
    for (const auto& [e, c] : p) {
      if (e >= floor_) terms_.emplace(e, c);
    }
  }

  static LaurentSeries monomial(const Rational& c, Exponent e, Exponent floor = kExact) {
    LaurentSeries s;
    s.floor_ = floor;
    if (!kahlerdeg::is_zero(c) && e >= floor) s.terms_.emplace(e, c);
    return s;
  }

  /// Zero up to the given floor, i.e. O(t^floor).
  static LaurentSeries big_o(Exponent floor) {
    LaurentSeries s;
    s.floor_ = floor;
    return s;
  }

  bool is_exact() const noexcept { return floor_ == kExact; }
  Exponent floor() const noexcept { return floor_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Leading exponent; only meaningful when !is_zero().
  Exponent leading_exponent() const { return terms_.begin()->first; }
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational{0} : terms_.begin()->second;
  }

  bool is_known(Exponent e) const noexcept { return e >= floor_; }

  Rational coefficient(Exponent e) const {
    if (!is_known(e)) {
      throw PrecisionError("coefficient of t^" + std::to_string(e) +
                           " is below the truncation floor " + std::to_string(floor_));
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational{0} : it->second;
  }

  void add_term(Exponent e, const Rational& c) {
    if (kahlerdeg::is_zero(c) || e < floor_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (kahlerdeg::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Discards everything below `floor`; never lowers the current floor.
  LaurentSeries truncated(Exponent floor) const {
    LaurentSeries s;
    s.floor_ = std::max(floor_, floor);
    for (const auto& [e, c] : terms_) {
      if (e < s.floor_) break;
      s.terms_.emplace_hint(s.terms_.end(), e, c);
    }
    return s;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) {
    raise_floor(o.floor_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentSeries& operator-=(const LaurentSeries& o) {
    raise_floor(o.floor_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentSeries& operator*=(const Rational& s) {
    if (kahlerdeg::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

  /// Product. A coefficient is known only if no pairing with an unknown
  /// tail reaches it, so the floor is the largest such bound.
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    return multiply(a, b, kExact);
  }

  /// Product with everything below `cut` discarded.
  static LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b, Exponent cut) {
    std::optional<Exponent> floor;
    auto consider = [&floor](Exponent f) { floor = floor ? std::max(*floor, f) : f; };
    if (!a.is_exact()) {
      if (!b.is_zero()) consider(a.floor_ + b.leading_exponent());
      if (!b.is_exact()) consider(a.floor_ + b.floor_);
    }
    if (!b.is_exact() && !a.is_zero()) consider(b.floor_ + a.leading_exponent());
    LaurentSeries out;
    out.floor_ = std::max(floor.value_or(kExact), cut);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        if (ea + eb < out.floor_) break;
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.floor_ == b.floor_ && a.terms_ == b.terms_;
  }

  /// Agreement on every exponent both series know.
  bool agrees_with(const LaurentSeries& o) const {
    const Exponent f = std::max(floor_, o.floor_);
    return truncated(f).terms_ == o.truncated(f).terms_;
  }

 private:
  void raise_floor(Exponent f) {
    if (f <= floor_) return;
    floor_ = f;
    while (!terms_.empty() && std::prev(terms_.end())->first < floor_) {
      terms_.erase(std::prev(terms_.end()));
    }
  }

  TermMap terms_;
  Exponent floor_ = kExact;
};

inline LaurentSeries derivative(const LaurentSeries& s) {
  LaurentSeries out = LaurentSeries::big_o(s.is_exact() ? kExact : s.floor() - 1);
  for (const auto& [e, c] : s.terms()) {
    if (e != 0) out.add_term(e - 1, c * Rational{static_cast<long>(e)});
  }
  return out;
}

/// "T^7-7/4*T^4+35/32*T+O(T^-2)"
inline std::string render(const LaurentSeries& s, std::string_view var = "T") {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (!is_one(mag)) out += to_string(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (!s.is_exact()) {
    if (!out.empty()) out += "+";
    out += "O(" + std::string(var) + "^" + std::to_string(s.floor()) + ")";
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Power series in w with constant term 1, stored densely as coefficients
// h[0..order]. These drive both the change of parameter and its inverse.

using DenseSeries = std::vector<Rational>;

/// h^alpha up to w^order, for h[0] == 1 and any rational alpha.
/// From h*g' = alpha*h'*g:  j*g_j = sum_{i=1..j} (alpha*i - (j-i)) h_i g_{j-i}.
inline DenseSeries series_pow_unit(const DenseSeries& h, const Rational& alpha,
                                   std::size_t order) {
  if (h.empty() || h[0] != 1) throw std::invalid_argument("series_pow_unit: h(0) must be 1");
  DenseSeries g(order + 1, Rational{0});
  g[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) {
    Rational acc = 0;
    const std::size_t top = std::min(j, h.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      if (is_zero(h[i])) continue;
      Rational k = alpha * Rational{static_cast<long>(i)} - Rational{static_cast<long>(j - i)};
      acc += k * h[i] * g[j - i];
    }
    g[j] = acc / Rational{static_cast<long>(j)};
  }
  return g;
}

/// log h up to w^order, for h[0] == 1.
inline DenseSeries series_log_unit(const DenseSeries& h, std::size_t order) {
  if (h.empty() || h[0] != 1) throw std::invalid_argument("series_log_unit: h(0) must be 1");
  DenseSeries L(order + 1, Rational{0});
  auto hc = [&h](std::size_t i) { return i < h.size() ? h[i] : Rational{0}; };
  for (std::size_t j = 1; j <= order; ++j) {
    Rational acc = hc(j) * Rational{static_cast<long>(j)};
    for (std::size_t i = 1; i < j; ++i) {
      if (i >= h.size() || is_zero(h[i])) continue;
      acc -= Rational{static_cast<long>(j - i)} * h[i] * L[j - i];
    }
    L[j] = acc / Rational{static_cast<long>(j)};
  }
  return L;
}

/// Inverse of a series with nonzero leading term, truncated at `floor`.
inline LaurentSeries inverse(const LaurentSeries& s, Exponent floor) {
  if (s.is_zero()) throw std::domain_error("inverse: zero series");
  const Exponent d = s.leading_exponent();
  const Rational c = s.leading_coefficient();
  // s = c T^d (1 + u), with u holding only negative exponents.
  LaurentSeries u = LaurentSeries::big_o(s.is_exact() ? kExact : s.floor() - d);
  for (const auto& [e, k] : s.terms()) {
    if (e != d) u.add_term(e - d, k / c);
  }
  const Exponent cut = floor + d;
  LaurentSeries sum = LaurentSeries::monomial(1, 0, cut);
  LaurentSeries term = LaurentSeries::monomial(1, 0);
  LaurentSeries neg_u = u * Rational{-1};
  while (true) {
    term = LaurentSeries::multiply(term, neg_u, cut);
    if (term.is_zero()) {
      sum += term;
      break;
    }
    sum += term;
  }
  LaurentSeries out = LaurentSeries::big_o(sum.is_exact() ? kExact : sum.floor() - d);
  for (const auto& [e, k] : sum.terms()) out.add_term(e - d, k / c);
  return out;
}

/// outer(inner(T)), where inner = T + (lower terms), truncated at `floor`.
/// Unknown tails of either argument are propagated into the result floor.
inline LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner,
                             Exponent floor) {
  if (inner.is_zero() || inner.leading_exponent() != 1 || inner.leading_coefficient() != 1) {
    throw std::invalid_argument("compose: inner series must have leading term T");
  }
  LaurentSeries result = LaurentSeries::big_o(floor);
  if (!outer.is_exact()) result = LaurentSeries::big_o(std::max(floor, outer.floor()));
  if (outer.is_zero()) return result;
  const Exponent top = outer.leading_exponent();
  Exponent bottom = std::prev(outer.terms().end())->first;
  std::vector<std::pair<Exponent, LaurentSeries>> powers;
  if (top >= 0) {
    // Each factor of inner shifts exponents up by one, so the powers are
    // kept `top` steps below the requested floor.
    const Exponent work = floor - top;
    LaurentSeries p = LaurentSeries::monomial(1, 0);
    for (Exponent k = 0; k <= top; ++k) {
      if (k > 0) p = LaurentSeries::multiply(p, inner, work);
      if (k >= bottom) powers.emplace_back(k, p);
    }
  }
  if (bottom < 0) {
    // The inverse is needed to a depth that survives multiplication by the
    // largest negative power still to come.
    const LaurentSeries inv = inverse(inner, floor);
    LaurentSeries p = LaurentSeries::monomial(1, 0);
    for (Exponent k = -1; k >= bottom; --k) {
      p = LaurentSeries::multiply(p, inv, floor);
      powers.emplace_back(k, p);
    }
  }
  for (const auto& [k, p] : powers) {
    auto it = outer.terms().find(k);
    if (it != outer.terms().end()) result += p.truncated(floor) * it->second;
  }
  return result;
}

/// Given q = t + sum_{i>=1} c_i t^{-i}, returns q1(T) = T + sum b_k T^{-k}
/// with q(q1(T)) = T up to exponents >= precision.
///
/// Writing w = 1/t, z = 1/T turns T = q(t) into w = z*g(w) with
/// g(w) = 1 + sum c_i w^{i+1}; Lagrange inversion then gives
/// b_e = (1/e) [w^{1-e}] g(w)^{-e} for every e != 0, and b_0 = 0.
inline LaurentSeries series_invert_parameter(const LaurentSeries& q, Exponent precision) {
  if (precision > 0) throw std::invalid_argument("series_invert_parameter: precision must be <= 0");
  if (q.is_zero() || q.leading_exponent() != 1 || q.leading_coefficient() != 1) {
    throw std::invalid_argument("series_invert_parameter: leading term must be t");
  }
  for (const auto& [e, c] : q.terms()) {
    if (e == 0 || e > 1) {
      throw std::invalid_argument("series_invert_parameter: malformed leading term (t^" +
                                  std::to_string(e) + " present)");
    }
  }
  const Exponent floor = q.is_exact() ? precision : std::max(precision, q.floor());
  const std::size_t order = static_cast<std::size_t>(1 - floor);
  DenseSeries g(order + 1, Rational{0});
  g[0] = 1;
  for (const auto& [e, c] : q.terms()) {
    if (e >= 0) continue;
    const std::size_t idx = static_cast<std::size_t>(1 - e);
    if (idx <= order) g[idx] = c;
  }
  LaurentSeries out = LaurentSeries::monomial(1, 1, floor);
  for (Exponent e = -1; e >= floor; --e) {
    const std::size_t need = static_cast<std::size_t>(1 - e);
    DenseSeries ge = series_pow_unit(g, Rational{static_cast<long>(-e)}, need);
    out.add_term(e, ge[need] / Rational{static_cast<long>(e)});
  }
  return out;
}

}  // namespace kahlerdeg
