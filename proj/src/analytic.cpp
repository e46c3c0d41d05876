#include "eulerheat/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "eulerheat/errors.hpp"
#include "eulerheat/quadrature.hpp"

namespace eulerheat {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using specfun::DilogConvention;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(what) + " must be > 0");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ParameterError(std::string(what) + " must be finite");
}

void require_time(double t) {
  if (!(t > 0.0)) throw DomainError("eval_state: requires t > 0");
}

// --- ACubic ---------------------------------------------------------------------

double acubic_h(const ACubic& p, double eta, FormulaVariant variant) {
  const double num = variant == FormulaVariant::kCorrected ? 0.25 * eta * eta + 2.0 * p.c1
                                                           : 4.0 * eta * eta + 2.0 * p.c1;
  const double radicand = num / (3.0 * p.a);
  if (radicand < 0.0) throw DomainError("a-cubic: negative radicand in h (c1 < 0 near eta = 0)");
  return std::sqrt(radicand);
}

// f solving -alpha f = lambda f''; the printed form uses alpha/lambda as the frequency.
double acubic_f(const ACubic& p, double eta, FormulaVariant variant) {
  if (variant == FormulaVariant::kAsPrinted) {
    const double k = p.alpha / p.lambda;
    return p.c2 * std::cos(k * eta) + p.c3 * std::sin(k * eta);
  }
  const double ratio = p.alpha / p.lambda;
  if (ratio >= 0.0) {
    const double k = std::sqrt(ratio);
    return p.c2 * std::cos(k * eta) + p.c3 * std::sin(k * eta);
  }
  const double k = std::sqrt(-ratio);
  return p.c2 * std::cosh(k * eta) + p.c3 * std::sinh(k * eta);
}

// --- BTravel --------------------------------------------------------------------

struct LambertWave {
  double w = 0.0;
  double kappa = 0.0;  ///< d ln X / d zeta
};

LambertWave btravel_w(const BTravel& p, double zeta, FormulaVariant variant) {
  const double b2c1 = p.b * p.b * p.c1;
  const double sign = variant == FormulaVariant::kCorrected ? -1.0 : 1.0;
  const double log_x = (-b2c1 + sign * zeta * p.a * p.a + p.c2 * p.a) / b2c1 - std::log(p.b * p.c1);
  return {specfun::lambert_w0_exp(log_x), sign * p.a * p.a / b2c1};
}

// --- CTravel --------------------------------------------------------------------

struct ExpWave {
  double rho = 0.0;
  double q = 0.0;  ///< c2 e / (c1 + c2 e)
};

ExpWave ctravel_wave(const CTravel& p, double zeta, FormulaVariant variant) {
  const double sigma = variant == FormulaVariant::kCorrected ? -1.0 : 1.0;
  const double e = std::exp(sigma * p.a * zeta / p.A);
  const double rho = p.c1 + p.c2 * e;
  if (!(rho > 0.0)) throw DomainError("c-travel: density must be > 0 where v = -A t rho_x / rho");
  return {rho, p.c2 * e / rho};
}

double zk_positive_part(double x, double t1, double A, int m) {
  const double beta = 1.0 / (m + 1);
  const double b2 = zk_width_squared(m);
  return A * A - b2 * x * x * std::pow(t1, -2.0 * beta);
}

}  // namespace

std::string family_name(const SolutionFamily& family) {
  return std::visit(overloaded{[](const ACubic&) { return std::string("a-cubic"); },
                               [](const BZk&) { return std::string("b-zk"); },
                               [](const BTravel&) { return std::string("b-travel"); },
                               [](const CGauss&) { return std::string("c-gauss"); },
                               [](const CTravel&) { return std::string("c-travel"); },
                               [](const DVirial&) { return std::string("d-virial"); }},
                    family);
}

void validate(const SolutionFamily& family) {
  std::visit(overloaded{[](const ACubic& p) {
                          require_positive(p.a, "a-cubic a");
                          require_positive(p.lambda, "a-cubic lambda");
                          require_finite(p.alpha, "a-cubic alpha");
                          require_finite(p.c1, "a-cubic c1");
                          require_finite(p.c2, "a-cubic c2");
                          require_finite(p.c3, "a-cubic c3");
                        },
                        [](const BZk& p) {
                          require_positive(p.b, "b-zk b");
                          require_positive(p.A, "b-zk A");
                          require_positive(p.lambda, "b-zk lambda");
                          require_finite(p.gamma, "b-zk gamma");
                        },
                        [](const BTravel& p) {
                          require_positive(p.a, "b-travel a");
                          require_positive(p.b, "b-travel b");
                          require_positive(p.c1, "b-travel c1");
                          require_finite(p.c2, "b-travel c2");
                        },
                        [](const CGauss& p) {
                          require_positive(p.A, "c-gauss A");
                          require_positive(p.lambda, "c-gauss lambda");
                          require_finite(p.gamma, "c-gauss gamma");
                        },
                        [](const CTravel& p) {
                          require_positive(p.A, "c-travel A");
                          require_finite(p.a, "c-travel a");
                          require_finite(p.c1, "c-travel c1");
                          require_finite(p.c2, "c-travel c2");
                        },
                        [](const DVirial& p) {
                          require_positive(p.A, "d-virial A");
                          require_positive(p.lambda, "d-virial lambda");
                          require_finite(p.c1, "d-virial c1");
                          require_finite(p.c2, "d-virial c2");
                          require_finite(p.c3, "d-virial c3");
                        }},
             family);
}

bool is_self_similar(const SolutionFamily& family) {
  return !std::holds_alternative<BTravel>(family) && !std::holds_alternative<CTravel>(family);
}

bool has_temperature(const SolutionFamily& family) { return !std::holds_alternative<BTravel>(family); }

EosModel family_eos(const SolutionFamily& family) {
  return std::visit(overloaded{[](const ACubic& p) -> EosModel { return Polytropic{p.a, 3.0}; },
                               [](const BZk& p) -> EosModel { return Quadratic{p.b}; },
                               [](const BTravel& p) -> EosModel { return Quadratic{p.b}; },
                               [](const CGauss& p) -> EosModel { return Linear{p.A}; },
                               [](const CTravel& p) -> EosModel { return Linear{p.A}; },
                               [](const DVirial& p) -> EosModel { return Virial{p.A, 0.0, 0.0}; }},
                    family);
}

double family_diffusivity(const SolutionFamily& family) {
  return std::visit(overloaded{[](const ACubic& p) { return p.lambda; }, [](const BZk& p) { return p.lambda; },
                               [](const BTravel&) { return 1.0; }, [](const CGauss& p) { return p.lambda; },
                               [](const CTravel&) { return 1.0; }, [](const DVirial& p) { return p.lambda; }},
                    family);
}

// --- Kummer temperature ------------------------------------------------------------

double KummerTemperature::first_parameter() const { return 0.5 - gamma / (2.0 * kappa - 1.0); }
double KummerTemperature::argument_scale() const { return (2.0 * kappa - 1.0) / (4.0 * lambda); }

Jet KummerTemperature::jet(double eta) const {
  constexpr double b = 1.5;
  const double a = first_parameter();
  const double s = argument_scale();
  if (!(s > 0.0)) throw ParameterError("kummer temperature: requires kappa > 1/2");
  const double z = s * eta * eta;

  double k0 = 0.0, k1 = 0.0, k2 = 0.0;  // K and dK/dz, d2K/dz2
  if (c1 != 0.0) {
    k0 += c1 * specfun::kummer_m(a, b, z);
    k1 += c1 * a / b * specfun::kummer_m(a + 1.0, b + 1.0, z);
    k2 += c1 * a * (a + 1.0) / (b * (b + 1.0)) * specfun::kummer_m(a + 2.0, b + 2.0, z);
  }
  if (c2 != 0.0) {
    if (eta == 0.0) throw DomainError("kummer temperature: U term is singular at eta = 0");
    k0 += c2 * specfun::kummer_u(a, b, z);
    k1 += -c2 * a * specfun::kummer_u(a + 1.0, b + 1.0, z);
    k2 += c2 * a * (a + 1.0) * specfun::kummer_u(a + 2.0, b + 2.0, z);
  }
  // f = eta K(s eta^2)
  return {eta * k0, k0 + 2.0 * s * eta * eta * k1, 6.0 * s * eta * k1 + 4.0 * s * s * eta * eta * eta * k2};
}

KummerTemperature bzk_temperature(const BZk& p) { return {2.0 / 3.0, p.gamma, p.lambda, p.c1, p.c2}; }

KummerTemperature cgauss_temperature(const CGauss& p, FormulaVariant variant) {
  const double kappa = variant == FormulaVariant::kCorrected ? 1.0 : 2.0;
  return {kappa, p.gamma, p.lambda, p.c1, p.c2};
}

Jet btravel_profile(const BTravel& p, double zeta, FormulaVariant variant) {
  validate(SolutionFamily{p});
  const LambertWave lw = btravel_w(p, zeta, variant);
  const double amp = p.b * p.c1 / p.a;
  const double w = lw.w;
  const double r = w / (1.0 + w);
  return {amp * (w + 1.0), amp * lw.kappa * r, amp * lw.kappa * lw.kappa * w / std::pow(1.0 + w, 3)};
}

// --- shapes and states -------------------------------------------------------------

Shape shape_functions(const SolutionFamily& family, double eta, FormulaVariant variant) {
  validate(family);
  return std::visit(
      overloaded{
          [&](const ACubic& p) -> Shape { return {acubic_f(p, eta, variant), 0.5 * eta, acubic_h(p, eta, variant)}; },
          [&](const BZk& p) -> Shape {
            return {bzk_temperature(p)(eta), 2.0 * eta / 3.0, std::max(0.0, zk_positive_part(eta, 1.0, p.A, 2))};
          },
          [&](const BTravel&) -> Shape { throw ParameterError("shape_functions: b-travel is not self-similar"); },
          [&](const CGauss& p) -> Shape {
            // rho = t^-1 F(x/t); in eta = x/sqrt(t) at t = 1 the shape is F itself.
            const double width = variant == FormulaVariant::kCorrected ? 2.0 * p.A : p.A;
            const double kappa = variant == FormulaVariant::kCorrected ? 1.0 : 2.0;
            return {cgauss_temperature(p, variant)(eta), kappa * eta,
                    std::sqrt(2.0 / p.A) * std::exp(-eta * eta / width)};
          },
          [&](const CTravel&) -> Shape { throw ParameterError("shape_functions: c-travel is not self-similar"); },
          [&](const DVirial& p) -> Shape {
            return {virial_temperature_shape(p, eta), 0.5 * eta, virial_density_quadrature(eta, p, variant)};
          }},
      family);
}

StatePoint eval_state(const SolutionFamily& family, double x, double t, FormulaVariant variant) {
  validate(family);
  return std::visit(
      overloaded{
          [&](const ACubic& p) -> StatePoint {
            require_time(t);
            const double sq = std::sqrt(t);
            const double eta = x / sq;
            return {acubic_h(p, eta, variant) / sq, x / (2.0 * t),
                    std::pow(t, -p.alpha) * acubic_f(p, eta, variant)};
          },
          [&](const BZk& p) -> StatePoint {
            require_time(t);
            const double t1 = p.b * t * t / 4.0;
            const double rho = zk_profile(x, t1, p.A, 2);
            StatePoint s{rho, std::nullopt, std::pow(t, -p.gamma) * bzk_temperature(p)(x / std::sqrt(t))};
            if (rho > 0.0) s.v = 2.0 * x / (3.0 * t);
            return s;
          },
          [&](const BTravel& p) -> StatePoint {
            if (variant == FormulaVariant::kAsPrinted) {
              const LambertWave lw = btravel_w(p, x - p.a * t * t, variant);
              return {p.b * p.c1 / p.a * (lw.w + 1.0), -lw.w * t / (lw.w + 1.0), std::nullopt};
            }
            const Jet h = btravel_profile(p, x - 0.5 * p.a * t * t, variant);
            return {h.value, -p.b * t * h.d1, std::nullopt};
          },
          [&](const CGauss& p) -> StatePoint {
            require_time(t);
            const bool corrected = variant == FormulaVariant::kCorrected;
            const double width = corrected ? 2.0 * p.A : p.A;
            const double rho = std::sqrt(2.0 / p.A) / t * std::exp(-x * x / (width * t * t));
            const double v = (corrected ? 1.0 : 2.0) * x / t;
            return {rho, v, std::pow(t, -p.gamma) * cgauss_temperature(p, variant)(x / std::sqrt(t))};
          },
          [&](const CTravel& p) -> StatePoint {
            const ExpWave w = ctravel_wave(p, x - 0.5 * p.a * t * t, variant);
            const double v = variant == FormulaVariant::kCorrected ? p.a * t * w.q : -p.a * t;
            return {w.rho, v, p.tc1 + p.tc2 * (x - 0.5 * p.a * t * t)};
          },
          [&](const DVirial& p) -> StatePoint {
            require_time(t);
            const double sq = std::sqrt(t);
            const double eta = x / sq;
            return {virial_density_quadrature(eta, p, variant) / sq, x / (2.0 * t),
                    virial_temperature_shape(p, eta) / t};
          }},
      family);
}

std::vector<FieldScaling> self_similar_scalings(const SolutionFamily& family) {
  return std::visit(
      overloaded{[](const ACubic& p) -> std::vector<FieldScaling> {
                   return {{"rho", 0.5, 0.5}, {"v", 0.5, 0.5}, {"T", p.alpha, 0.5}};
                 },
                 [](const BZk& p) -> std::vector<FieldScaling> {
                   return {{"rho", 1.0 / 3.0, 1.0 / 3.0, Clock::kT1}, {"v", 0.5, 0.5}, {"T", p.gamma, 0.5}};
                 },
                 [](const BTravel&) -> std::vector<FieldScaling> {
                   throw ParameterError("b-travel is a traveling wave, not self-similar");
                 },
                 [](const CGauss& p) -> std::vector<FieldScaling> {
                   return {{"rho", 1.0, 1.0}, {"v", 0.5, 0.5}, {"T", p.gamma, 0.5}};
                 },
                 [](const CTravel&) -> std::vector<FieldScaling> {
                   throw ParameterError("c-travel is a traveling wave, not self-similar");
                 },
                 [](const DVirial&) -> std::vector<FieldScaling> {
                   return {{"rho", 0.5, 0.5}, {"v", 0.5, 0.5}, {"T", 1.0, 0.5}};
                 }},
      family);
}

std::optional<double> momentum_defect(const SolutionFamily& family, double x, double t) {
  validate(family);
  return std::visit(
      overloaded{[&](const ACubic&) -> std::optional<double> { return 0.0; },
                 [&](const BZk& p) -> std::optional<double> {
                   if (zk_profile(x, p.b * t * t / 4.0, p.A, 2) <= 0.0) return std::nullopt;
                   return -8.0 * x / (9.0 * t * t);
                 },
                 [&](const BTravel& p) -> std::optional<double> {
                   const double w = btravel_w(p, x - 0.5 * p.a * t * t, FormulaVariant::kCorrected).w;
                   return t * t * std::pow(p.a, 4) * w / (p.b * p.b * p.c1 * std::pow(1.0 + w, 4));
                 },
                 [&](const CGauss&) -> std::optional<double> { return -x / (t * t); },
                 [&](const CTravel& p) -> std::optional<double> {
                   const double q = ctravel_wave(p, x - 0.5 * p.a * t * t, FormulaVariant::kCorrected).q;
                   return std::pow(p.a, 3) * t * t * q * (1.0 - q) * (1.0 - q) / p.A;
                 },
                 [&](const DVirial&) -> std::optional<double> { return 0.0; }},
      family);
}

// --- ZK profile ----------------------------------------------------------------------

double zk_width_squared(int m) {
  if (m < 2) throw ParameterError("zk: requires m >= 2");
  return static_cast<double>(m - 1) / (2.0 * m * (m + 1));
}

double zk_profile(double x, double t1, double A, int m) {
  if (!(t1 > 0.0)) throw DomainError("zk_profile: requires t1 > 0");
  require_positive(A, "zk_profile A");
  const double alpha = 1.0 / (m + 1);
  const double base = zk_positive_part(x, t1, A, m);
  if (base <= 0.0) return 0.0;
  const double power_m1 = std::pow(t1, -alpha * (m - 1)) * base;
  return m == 2 ? power_m1 : std::pow(power_m1, 1.0 / (m - 1));
}

double front_position(double t1, double A, int m) {
  if (!(t1 > 0.0)) throw DomainError("front_position: requires t1 > 0");
  return A / std::sqrt(zk_width_squared(m)) * std::pow(t1, 1.0 / (m + 1));
}

double zk_mass(double A, int m) {
  const double p = 1.0 / (m - 1);
  const double beta_fn = std::exp(std::lgamma(0.5) + std::lgamma(p + 1.0) - std::lgamma(p + 1.5));
  return std::pow(A, 2.0 * p) * A / std::sqrt(zk_width_squared(m)) * beta_fn;
}

// --- virial ----------------------------------------------------------------------------

double virial_temperature_shape(const DVirial& p, double eta) {
  const double u = eta / std::sqrt(p.lambda);
  return p.c1 * std::sin(u) + p.c2 * std::cos(u);
}

void check_virial_zero_free(const DVirial& p, double eta, double radius) {
  const double amp = std::hypot(p.c1, p.c2);
  if (amp == 0.0) throw PoleError("d-virial: temperature shape vanishes identically");
  // f = amp sin(u + phi); zeros at u = k pi - phi
  const double phi = std::atan2(p.c2, p.c1);
  const double scale = std::sqrt(p.lambda);
  const double lo = std::min(0.0, eta) / scale - radius / scale;
  const double hi = std::max(0.0, eta) / scale + radius / scale;
  const double k = std::ceil((lo + phi) / std::numbers::pi);
  if (k * std::numbers::pi - phi <= hi) throw PoleError("d-virial: temperature shape f has a zero in [0, eta]");
}

double virial_density_quadrature(double eta, const DVirial& p, FormulaVariant variant) {
  validate(SolutionFamily{p});
  check_virial_zero_free(p, eta);
  const double scale = std::sqrt(p.lambda);
  auto integrand = [&](double z) {
    const double u = z / scale;
    const double f = p.c1 * std::sin(u) + p.c2 * std::cos(u);
    const double fp = (p.c1 * std::cos(u) - p.c2 * std::sin(u)) / scale;
    return (z / (4.0 * p.A) - fp) / f;
  };
  const double integral = quad::integrate(integrand, 0.0, eta, 1e-15, 1e-14).value;
  return variant == FormulaVariant::kCorrected ? p.c3 * std::exp(integral) : p.c3 * integral;
}

namespace {

std::complex<double> virial_closed_raw(double eta, DilogConvention convention) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C w = i * std::exp(i * eta);
  const C plus = 1.0 + w;
  const C minus = 1.0 - w;
  const C powers = std::exp(-0.25 * eta * std::log(plus)) * std::exp(0.25 * eta * std::log(minus));
  const C bracket = -4.0 * eta - specfun::dilog(plus, convention) + specfun::dilog(minus, convention);
  return powers * std::exp(-0.25 * i * bracket) / (std::exp(2.0 * i * eta) + 1.0);
}

}  // namespace

std::vector<ClosedFormBranch> virial_density_closed_form(double eta, const DVirial& p) {
  if (p.c1 != 0.0 || p.c2 != 1.0 || p.c3 != 1.0 || p.A != 1.0 || p.lambda != 1.0)
    throw ParameterError("virial closed form exists only at c1 = 0, c2 = c3 = A = lambda = 1");
  check_virial_zero_free(p, eta);
  std::vector<ClosedFormBranch> out;
  for (DilogConvention conv : {DilogConvention::kSpenceLi2, DilogConvention::kReflectedLi2}) {
    const std::complex<double> value = virial_closed_raw(eta, conv);
    const double origin = virial_closed_raw(0.0, conv).real();
    out.push_back({conv, value, value.real(), p.c3 * value.real() / origin});
  }
  return out;
}

VirialDensity virial_density(double eta, const DVirial& p, VirialPath path) {
  VirialDensity out;
  out.path = path;
  if (path == VirialPath::kQuadrature) {
    out.value = virial_density_quadrature(eta, p);
  } else {
    out.branches = virial_density_closed_form(eta, p);
    out.value = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

VirialCrossCheck virial_cross_check(const DVirial& p, const Eigen::ArrayXd& etas, double tol) {
  VirialCrossCheck out;
  for (Eigen::Index k = 0; k < etas.size(); ++k) {
    const double quad_value = virial_density_quadrature(etas[k], p);
    for (const auto& branch : virial_density_closed_form(etas[k], p)) {
      const double dev = std::fabs(branch.normalized - quad_value) / std::fabs(quad_value);
      auto& slot = out.max_rel_deviation[static_cast<int>(branch.convention)];
      slot = std::max(slot, std::isfinite(dev) ? dev : std::numeric_limits<double>::infinity());
    }
  }
  const int best = out.max_rel_deviation[0] <= out.max_rel_deviation[1] ? 0 : 1;
  if (out.max_rel_deviation[best] < tol) out.selected = static_cast<DilogConvention>(best);
  return out;
}

std::vector<EvalRow> sample_family(const SolutionFamily& family, const Eigen::ArrayXd& xs, const Eigen::ArrayXd& ts,
                                   FormulaVariant variant) {
  std::vector<EvalRow> rows;
  rows.reserve(static_cast<std::size_t>(xs.size() * ts.size()));
  for (Eigen::Index j = 0; j < ts.size(); ++j) {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      const StatePoint s = eval_state(family, xs[i], ts[j], variant);
      rows.push_back({xs[i], ts[j], s.rho, s.v, s.T});
    }
  }
  return rows;
}

}  // namespace eulerheat
