#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "eulerheat/errors.hpp"

namespace eulerheat::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
QuadResult gk15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }
  return {kronrod * half, std::fabs((kronrod - gauss) * half), 15};
}

template <typename F>
QuadResult adapt(F& f, double lo, double hi, double abs_tol, double rel_tol, int depth,
                 const QuadResult& whole) {
  const double mid = 0.5 * (lo + hi);
  QuadResult left = gk15(f, lo, mid);
  QuadResult right = gk15(f, mid, hi);
  QuadResult sum{left.value + right.value, left.error + right.error,
                 whole.evaluations + left.evaluations + right.evaluations};
  if (!std::isfinite(sum.value)) throw NumericalError("quadrature: non-finite integrand");
  const double target = std::max(abs_tol, rel_tol * std::fabs(sum.value));
  if (sum.error <= target || depth <= 0 || mid == lo || mid == hi) return sum;
  QuadResult l = adapt(f, lo, mid, 0.5 * abs_tol, rel_tol, depth - 1, left);
  QuadResult r = adapt(f, mid, hi, 0.5 * abs_tol, rel_tol, depth - 1, right);
  return {l.value + r.value, l.error + r.error, sum.evaluations + l.evaluations + r.evaluations};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi].
template <typename F>
QuadResult integrate(F&& f, double lo, double hi, double abs_tol = 1e-14, double rel_tol = 1e-13,
                     int max_depth = 30) {
  if (lo == hi) return {};
  if (hi < lo) {
    QuadResult r = integrate(f, hi, lo, abs_tol, rel_tol, max_depth);
    r.value = -r.value;
    return r;
  }
  QuadResult whole = detail::gk15(f, lo, hi);
  if (whole.error <= std::max(abs_tol, rel_tol * std::fabs(whole.value)) && std::isfinite(whole.value))
    return whole;
  return detail::adapt(f, lo, hi, abs_tol, rel_tol, max_depth, whole);
}

}  // namespace eulerheat::quad
