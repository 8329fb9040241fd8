#pragma once

// Normal form of a plane parametrization (X, Y), deg X = n > deg Y = m.
// Y is turned into T^m by a change of parameter, and the weighted
// Wronskian w = n Y' X - m X' Y is pushed down by the moves
//   (1) Y <- Y + alpha      when m + lambda = n,
//   (2) X <- X - c Y^(k)    when m + lambda = (k + 1) m,
// until it vanishes or its degree + 1 is a gap of the value semigroup.

#include "kahlerdeg/algebra.hpp"
#include "kahlerdeg/kahler.hpp"
#include "kahlerdeg/laurent.hpp"
#include "kahlerdeg/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kahlerdeg {

struct NormalizedParametrization {
  /// X in the new parameter T, known down to (and including) T^precision.
  LaurentSeries x1;
  Int m;
  Int n;
  /// Largest exponent below n with nonzero coefficient; empty when x1 = T^n.
  std::optional<Exponent> lambda;
  Rational c_lambda;
  Exponent precision;

  /// Y in the new parameter, exactly T^m.
  LaurentSeries y1() const { return LaurentSeries::monomial(Rational{1}, m); }
};

/// w = n Y' X - m X' Y for deg X = n, deg Y = m.
inline Poly wronskian_poly(const Poly& x, const Poly& y) {
  const Rational n(x.degree());
  const Rational m(y.degree());
  return derivative(y) * x * n - derivative(x) * y * m;
}

/// Writes Y = t^m (1 + v(1/t)) and sets T = t (1 + v)^(1/m), so Y = T^m.
/// The coefficient of T^e in X(t(T)) is, by Lagrange inversion,
///   sum_j a_j (j/e) [w^(j-e)] (1+v)^(-e/m)            for e != 0,
///   a_0 - sum_j a_j (j/m) [w^j] log(1+v)                for e == 0.
/// Requires the t^(m-1) coefficient of Y to vanish and precision < 0.
inline NormalizedParametrization reparametrize(const CurveParametrization& p, Exponent precision) {
  if (precision >= 0) throw std::invalid_argument("reparametrize: precision must be negative");
  const Poly& x = p.high();
  const Poly& y = p.low();
  const Int m = p.m();
  const Int n = p.n();
  if (!is_zero(y.coefficient(m - 1))) {
    throw std::invalid_argument("reparametrize: t^(m-1) coefficient of Y must be 0; center first");
  }
  DenseSeries h(static_cast<std::size_t>(m) + 1);
  for (Int j = 0; j <= m; ++j) h[static_cast<std::size_t>(j)] = y.coefficient(m - j);

  NormalizedParametrization out{LaurentSeries::big_o(precision), m, n, std::nullopt, Rational{0}, precision};
  for (Exponent e = n; e >= precision; --e) {
    Rational c;
    if (e == 0) {
      DenseSeries log = series_log_unit(h, static_cast<std::size_t>(n));
      c = x.coefficient(0);
      for (Int j = 1; j <= n; ++j) {
        const Rational a = x.coefficient(j);
        if (!is_zero(a)) c -= a * make_rational(j, m) * log[static_cast<std::size_t>(j)];
      }
    } else {
      DenseSeries g = series_pow_unit(h, make_rational(-e, m), static_cast<std::size_t>(n - e));
      for (Int j = std::max<Int>(e, 1); j <= n; ++j) {
        const Rational a = x.coefficient(j);
        if (!is_zero(a)) c += a * make_rational(j, e) * g[static_cast<std::size_t>(j - e)];
      }
    }
    c.canonicalize();
    if (is_zero(c)) continue;
    out.x1.add_term(e, c);
    if (e < n && !out.lambda) {
      out.lambda = e;
      out.c_lambda = c;
    }
  }
  if (!out.lambda && precision > 1 - m) {
    throw PrecisionError("reparametrize: no subleading term down to T^" + std::to_string(precision));
  }
  if (out.x1.is_zero() || out.x1.leading_exponent() != n || !is_one(out.x1.leading_coefficient())) {
    throw std::logic_error("reparametrize: leading term of X1 is not T^n");
  }
  return out;
}

/// W = n Y1' X1 - m X1' Y1 with Y1 = T^m: the term c T^e of X1 contributes
/// m (n - e) c T^(e + m - 1).
inline LaurentSeries wronskian(const NormalizedParametrization& np) {
  LaurentSeries w = LaurentSeries::big_o(np.precision + np.m - 1);
  for (const auto& [e, c] : np.x1.terms()) {
    if (e == np.n) continue;
    w.add_term(e + np.m - 1, Rational(np.m * (np.n - e)) * c);
  }
  return w;
}

struct NormalFormStep {
  enum class Move { shift_y, subtract_power };
  Move move;
  Exponent lambda;
  Rational c_lambda;
  /// alpha for shift_y, c_lambda for subtract_power.
  Rational amount;
  /// Power of Y subtracted (subtract_power only).
  Int power;
  /// w before the move.
  Poly w_before;
  Poly x_after;
  Poly y_after;
};

struct NormalFormOutcome {
  enum class Kind { quasi_homogeneous, non_exact_witness, precision_exhausted };
  Kind kind;
  std::optional<Int> witness_degree;
  std::vector<NormalFormStep> steps;
  /// Final pair (degree n, degree m) and its Wronskian.
  Poly x;
  Poly y;
  Poly w;
  std::optional<Exponent> lambda;
  Rational c_lambda;
};

inline std::string to_string(NormalFormOutcome::Kind k) {
  switch (k) {
    case NormalFormOutcome::Kind::quasi_homogeneous:
      return "quasi_homogeneous";
    case NormalFormOutcome::Kind::non_exact_witness:
      return "non_exact_witness";
    case NormalFormOutcome::Kind::precision_exhausted:
      return "precision_exhausted";
  }
  return "unknown";
}

inline Exponent default_max_precision(Int m, Int n) { return -(2 * n * m + n); }

/// Runs the moves on the centered parametrization. The working floor starts
/// at -2m and deepens towards max_precision when lambda is not resolved.
inline NormalFormOutcome normal_form(const CurveParametrization& p, std::optional<Exponent> max_precision = {}) {
  const CurveParametrization c = p.centered();
  const Int m = c.m();
  const Int n = c.n();
  AlgebraBasis algebra = compute_algebra_basis({c.x(), c.y()});
  if (!algebra.is_numerical()) throw NonNumericalError(algebra.degree_monoid.content());
  const NumericalSemigroup& gamma = algebra.degree_monoid.semigroup();
  const Exponent floor_limit = max_precision.value_or(default_max_precision(m, n));
  if (floor_limit >= 0) throw std::invalid_argument("normal_form: max precision must be negative");

  NormalFormOutcome out{NormalFormOutcome::Kind::quasi_homogeneous, std::nullopt, {}, c.high(), c.low(), {},
                        std::nullopt, Rational{0}};
  Exponent floor = std::max(floor_limit, -2 * m);
  std::optional<Exponent> last_lambda;
  std::optional<Int> last_w_degree;
  const std::size_t cap = static_cast<std::size_t>(4 * n * m + 16);
  for (std::size_t iter = 0; iter < cap; ++iter) {
    out.w = wronskian_poly(out.x, out.y);
    if (out.w.is_zero()) {
      out.kind = NormalFormOutcome::Kind::quasi_homogeneous;
      out.lambda.reset();
      return out;
    }
    std::optional<NormalizedParametrization> np;
    while (!np) {
      try {
        np = reparametrize(CurveParametrization(out.x, out.y), floor);
      } catch (const PrecisionError&) {
        if (floor <= floor_limit) {
          out.kind = NormalFormOutcome::Kind::precision_exhausted;
          return out;
        }
        floor = std::max(floor_limit, std::min(2 * floor, floor - m));
      }
    }
    if (!np->lambda) throw std::logic_error("normal_form: w != 0 but X1 = T^n");
    const Exponent lambda = *np->lambda;
    const Rational c_lambda = np->c_lambda;
    LaurentSeries big_w = wronskian(*np);
    if (big_w.leading_exponent() != out.w.degree() || big_w.leading_coefficient() != out.w.leading_coefficient()) {
      throw std::logic_error("normal_form: leading terms of W(T) and w(t) differ");
    }
    out.lambda = lambda;
    out.c_lambda = c_lambda;
    if (!gamma.contains(m + lambda)) {
      out.kind = NormalFormOutcome::Kind::non_exact_witness;
      out.witness_degree = m + lambda - 1;
      return out;
    }
    if (last_w_degree && out.w.degree() >= *last_w_degree && last_lambda && lambda >= *last_lambda) {
      throw std::logic_error("normal_form: no progress");
    }
    last_w_degree = out.w.degree();
    last_lambda = lambda;
    NormalFormStep step{NormalFormStep::Move::shift_y, lambda, c_lambda, Rational{0}, 0, out.w, {}, {}};
    // For m = 1 a constant shift of Y would undo the centering.
    if (m + lambda == n && m > 1) {
      step.amount = Rational(m) * c_lambda / Rational(n);
      out.y += Poly::constant(step.amount);
    } else if ((m + lambda) % m == 0) {
      step.move = NormalFormStep::Move::subtract_power;
      step.amount = c_lambda;
      step.power = (m + lambda) / m - 1;
      out.x -= pow(out.y, step.power) * c_lambda;
    } else {
      throw std::logic_error("normal_form: m + lambda = " + std::to_string(m + lambda) +
                             " lies in the semigroup but is neither n nor a multiple of m");
    }
    step.x_after = out.x;
    step.y_after = out.y;
    out.steps.push_back(std::move(step));
  }
  throw std::logic_error("normal_form: iteration cap reached");
}

}  // namespace kahlerdeg
