#pragma once

// Special functions used by the analytic solution families: Lambert W (principal
// branch), Kummer M and U, the complex dilogarithm and log-gamma.
//
// Everything here is a header template on the floating-point type. Series are
// accumulated in long double so that the moderate cancellation in 1F1 at
// |z| ~ 20 stays below double resolution.

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "eulerheat/errors.hpp"

namespace eulerheat::specfun {

struct SpecFunConfig {
  double rel_tol = 1e-13;
  int max_terms = 500;

  void validate() const {
    if (!(rel_tol > 0.0)) throw ParameterError("SpecFunConfig: rel_tol must be > 0");
    if (max_terms < 1) throw ParameterError("SpecFunConfig: max_terms must be >= 1");
  }
};

template <std::floating_point Real>
using Complex = std::complex<Real>;

enum class DilogConvention {
  kSpenceLi2,     ///< Li2(z) = -int_0^z ln(1-s)/s ds
  kReflectedLi2   ///< dilog(z) = Li2(1-z), the computer-algebra convention
};

template <std::floating_point Real>
struct LogGamma {
  Real value;  ///< ln|Gamma(x)|
  int sign;    ///< sign of Gamma(x)
};

namespace detail {

template <std::floating_point Real>
bool is_nonpositive_integer(Real x) {
  return x <= Real(0) && std::nearbyint(x) == x;
}

template <std::floating_point Real>
bool is_integer(Real x) {
  return std::nearbyint(x) == x;
}

// 1/Gamma(x); exactly zero at the poles.
inline long double reciprocal_gamma(long double x) {
  if (is_nonpositive_integer(x)) return 0.0L;
  const long double lg = std::lgamma(x);
  int sign = 1;
  if (x < 0.0L && static_cast<long long>(std::ceil(-x)) % 2 == 1) sign = -1;
  return sign * std::exp(-lg);
}

// Plain 1F1 power series for z >= 0 (no Kummer transformation).
inline long double kummer_series(long double a, long double b, long double z,
                                 const SpecFunConfig& cfg) {
  long double term = 1.0L;
  long double sum = 1.0L;
  long double largest = 1.0L;
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  for (int n = 0; n < cfg.max_terms; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
    largest = std::max(largest, std::fabs(term));
    if (term == 0.0L) return sum;  // a is a non-positive integer
    // Once the term ratio drops below 1/2 the remaining tail is bounded by |term|.
    const bool decreasing = std::fabs((a + n + 1) / (b + n + 1)) * z / (n + 2) < 0.5L;
    if (decreasing && (std::fabs(term) <= cfg.rel_tol * std::fabs(sum) * 1e-3L ||
                       std::fabs(term) <= eps * largest)) {
      return sum;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within max_terms");
}

inline bool asymptotic_terminates(long double a, long double b) {
  return is_nonpositive_integer(a) || is_nonpositive_integer(a - b + 1.0L);
}

// Asymptotic series for U(a,b,z) at large z. Returns false when the smallest
// term is not below the requested tolerance.
inline bool kummer_u_asymptotic(long double a, long double b, long double z,
                                const SpecFunConfig& cfg, long double& out) {
  const long double c = a - b + 1.0L;
  const bool finite_sum = asymptotic_terminates(a, b);
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int n = 0; n < cfg.max_terms; ++n) {
    const long double next = term * (a + n) * (c + n) / (n + 1) * (-1.0L / z);
    if (next == 0.0L) {
      out = sum * std::pow(z, -a);
      return true;
    }
    if (!finite_sum && std::fabs(next) >= std::fabs(term)) break;  // divergence sets in
    term = next;
    sum += term;
    if (!finite_sum && std::fabs(term) <= 0.1L * cfg.rel_tol * std::fabs(sum)) {
      out = sum * std::pow(z, -a);
      return true;
    }
  }
  out = sum * std::pow(z, -a);
  return false;
}

// Coefficients B_{2k}/(2k+1)! of the dilogarithm Bernoulli series.
inline const std::array<long double, 24>& dilog_bernoulli_coefficients() {
  static const std::array<long double, 24> coeffs = [] {
    std::array<long double, 24> c{};
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int k = 1; k <= static_cast<int>(c.size()); ++k) {
      const long double zeta = std::riemann_zeta(static_cast<long double>(2 * k));
      const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
      c[k - 1] = sign * 2.0L * zeta / (std::pow(two_pi, 2 * k) * (2 * k + 1));
    }
    return c;
  }();
  return coeffs;
}

// Li2 on |z| <= 1, Re z <= 1/2 via the series in u = -ln(1-z).
template <std::floating_point Real>
Complex<Real> dilog_core(Complex<Real> z) {
  using C = Complex<long double>;
  const C zl(z.real(), z.imag());
  const C u = -std::log(C(1.0L) - zl);
  const C u2 = u * u;
  C sum = u - u2 / 4.0L;
  C power = u;
  for (long double c : dilog_bernoulli_coefficients()) {
    power *= u2;
    const C term = c * power;
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  return {static_cast<Real>(sum.real()), static_cast<Real>(sum.imag())};
}

}  // namespace detail

/**
 * \brief Principal branch W0 of the Lambert W function, the inverse of w -> w e^w.
 *
 * Initial guess from the branch-point expansion near -1/e, the Taylor series near 0
 * or the log-log asymptote for large x, then refined by Halley iteration.
 * Arguments below -1/e by at most rel_tol/e are clamped to the branch point.
 */
template <std::floating_point Real>
Real lambert_w0(Real x, const SpecFunConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("lambert_w0: non-finite argument");
  const Real inv_e = std::exp(Real(-1));
  const Real q = x + inv_e;
  if (q < -Real(cfg.rel_tol) * inv_e) throw DomainError("lambert_w0: x < -1/e");
  if (q <= Real(0)) return Real(-1);
  if (x == Real(0)) return Real(0);

  // p = sqrt(2(e x + 1)) is the natural variable at the branch point.
  const Real p = std::sqrt(Real(2) * (std::numbers::e_v<Real> * x + Real(1)));
  Real w;
  if (p < Real(0.3)) {
    w = Real(-1) +
        p * (Real(1) +
             p * (Real(-1) / 3 +
                  p * (Real(11) / 72 +
                       p * (Real(-43) / 540 + p * (Real(769) / 17280 + p * (Real(-221) / 8505))))));
    if (p < Real(1e-3)) return w;
  } else if (x < Real(1)) {
    w = std::fabs(x) < Real(0.25) ? x * (Real(1) + x * (Real(-1) + x * Real(1.5))) : std::log1p(x);
  } else {
    const Real l1 = std::log(x);
    const Real l2 = std::log(l1 > Real(1) ? l1 : Real(1) + l1);
    w = l1 - l2 + l2 / std::max(l1, Real(1));
  }

  for (int it = 0; it < cfg.max_terms; ++it) {
    const Real ew = std::exp(w);
    const Real f = w * ew - x;
    const Real wp1 = w + Real(1);
    if (wp1 == Real(0)) return w;
    const Real denom = ew * wp1 - (w + Real(2)) * f / (Real(2) * wp1);
    const Real step = f / denom;
    w -= step;
    if (std::fabs(step) <= Real(cfg.rel_tol) * (Real(1) + std::fabs(w)) * Real(1e-2) ||
        std::fabs(step) <= 4 * std::numeric_limits<Real>::epsilon() * (Real(1) + std::fabs(w))) {
      return w;
    }
  }
  throw ConvergenceError("lambert_w0: Halley iteration did not converge");
}

/// W0(e^log_x) without forming e^log_x; solves w + ln w = log_x once e^log_x would overflow.
template <std::floating_point Real>
Real lambert_w0_exp(Real log_x, const SpecFunConfig& cfg = {}) {
  if (log_x < Real(40)) return lambert_w0(std::exp(log_x), cfg);
  Real w = log_x - std::log(log_x);
  for (int it = 0; it < cfg.max_terms; ++it) {
    const Real step = (w + std::log(w) - log_x) / (Real(1) + Real(1) / w);
    w -= step;
    if (std::fabs(step) <= 4 * std::numeric_limits<Real>::epsilon() * w) return w;
  }
  throw ConvergenceError("lambert_w0_exp: Newton iteration did not converge");
}

/// ln|Gamma(x)| and the sign of Gamma(x). Throws PoleError at 0, -1, -2, ...
template <std::floating_point Real>
LogGamma<Real> log_gamma(Real x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
  if (detail::is_nonpositive_integer(x)) throw PoleError("log_gamma: pole at non-positive integer");
  int sign = 1;
  if (x < Real(0) && static_cast<long long>(std::ceil(-x)) % 2 == 1) sign = -1;
  return {std::lgamma(x), sign};
}

/**
 * \brief Kummer's confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
 *
 * Direct power series for z >= 0; for z < 0 the Kummer transformation
 * M(a,b,z) = e^z M(b-a, b, -z) keeps the summed series free of alternating signs.
 */
template <std::floating_point Real>
Real kummer_m(Real a, Real b, Real z, const SpecFunConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
    throw DomainError("kummer_m: non-finite argument");
  if (detail::is_nonpositive_integer(b)) throw ParameterError("kummer_m: b is a non-positive integer");
  if (z == Real(0)) return Real(1);
  const long double la = a, lb = b, lz = z;
  if (z > Real(0)) return static_cast<Real>(detail::kummer_series(la, lb, lz, cfg));
  return static_cast<Real>(std::exp(lz) * detail::kummer_series(lb - la, lb, -lz, cfg));
}

/**
 * \brief Kummer's second function U(a, b, z) for z > 0 and non-integer b.
 *
 * Uses the two-M connection formula for moderate z and the asymptotic
 * expansion z^-a sum (a)_n (a-b+1)_n (-z)^-n / n! once z is large enough for
 * it to reach rel_tol (or whenever that series terminates). Denominator gammas
 * enter through 1/Gamma, which vanishes at its poles.
 */
template <std::floating_point Real>
Real kummer_u(Real a, Real b, Real z, const SpecFunConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
    throw DomainError("kummer_u: non-finite argument");
  if (!(z > Real(0))) throw DomainError("kummer_u: requires z > 0");
  if (detail::is_integer(b)) throw PoleError("kummer_u: integer b puts Gamma(1-b) or Gamma(b-1) on a pole");
  const long double la = a, lb = b, lz = z;

  long double asym = 0.0L;
  if (detail::asymptotic_terminates(la, lb)) {
    detail::kummer_u_asymptotic(la, lb, lz, cfg, asym);
    return static_cast<Real>(asym);
  }
  if (lz >= 22.0L && detail::kummer_u_asymptotic(la, lb, lz, cfg, asym)) return static_cast<Real>(asym);
  if (lz >= 22.0L) return static_cast<Real>(asym);  // best available: optimally truncated

  const long double g1 = std::tgamma(1.0L - lb) * detail::reciprocal_gamma(la - lb + 1.0L);
  const long double g2 = std::tgamma(lb - 1.0L) * detail::reciprocal_gamma(la);
  // The two series cancel down to U, so each runs to long-double resolution.
  SpecFunConfig inner = cfg;
  inner.rel_tol = 0.0;
  long double u = 0.0L;
  if (g1 != 0.0L) u += g1 * detail::kummer_series(la, lb, lz, inner);
  if (g2 != 0.0L) u += g2 * std::pow(lz, 1.0L - lb) * detail::kummer_series(la - lb + 1.0L, 2.0L - lb, lz, inner);
  return static_cast<Real>(u);
}

/// Principal-branch dilogarithm Li2(z).
template <std::floating_point Real>
Complex<Real> li2(Complex<Real> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("dilog: non-finite argument");
  constexpr Real pi2_6 = std::numbers::pi_v<Real> * std::numbers::pi_v<Real> / 6;
  if (z == Complex<Real>(0)) return {0, 0};
  if (z == Complex<Real>(1)) return {pi2_6, 0};

  if (std::abs(z) > Real(1)) {
    // Inversion: Li2(z) = -pi^2/6 - ln^2(-z)/2 - Li2(1/z)
    const Complex<Real> l = std::log(-z);
    return -pi2_6 - Real(0.5) * l * l - li2(Real(1) / z);
  }
  if (z.real() > Real(0.5)) {
    // Reflection: Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z)
    const Complex<Real> w = Real(1) - z;
    return pi2_6 - std::log(z) * std::log(w) - detail::dilog_core<Real>(w);
  }
  return detail::dilog_core<Real>(z);
}

template <std::floating_point Real>
Complex<Real> dilog(Complex<Real> z, DilogConvention convention) {
  return convention == DilogConvention::kSpenceLi2 ? li2(z) : li2(Complex<Real>(Real(1)) - z);
}

inline std::string to_string(DilogConvention c) {
  return c == DilogConvention::kSpenceLi2 ? "spence_li2" : "reflected_li2";
}

}  // namespace eulerheat::specfun
