#pragma once

// Closed-form solution families of
//   rho_t + (rho v)_x = 0,  v_t + v v_x = -p_x / rho,  T_t + v T_x = lambda T_xx
// under the polytropic (p = a rho^3), quadratic, linear and virial closures.
//
// Every evaluator takes a FormulaVariant. kCorrected is the form that satisfies
// its own reduced equations; kAsPrinted reproduces the historically published
// expressions, kept so the residual engine can show where they fail.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "eulerheat/eos.hpp"
#include "eulerheat/specfun.hpp"

namespace eulerheat {

enum class FormulaVariant { kCorrected, kAsPrinted };

/// p = a rho^3, self-similar with beta = gamma = delta = 1/2 and free alpha.
struct ACubic {
  double a = 1.0;
  double c1 = 0.0;
  double c2 = 1.0;
  double c3 = 0.0;
  double alpha = 1.0;
  double lambda = 1.0;
};

/// p = (b/2) rho^2: Zeldovich-Kompaneets density in t1 = b t^2 / 4, Kummer temperature.
struct BZk {
  double b = 1.0;
  double A = 1.0;
  double gamma = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;
  double lambda = 1.0;
};

/// p = (b/2) rho^2: Lambert-W wave in zeta = x - a t^2 / 2; no temperature.
struct BTravel {
  double a = 1.0;
  double b = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
};

/// p = A rho: Gaussian density in t2 = t^2 / 2, Kummer temperature.
struct CGauss {
  double A = 1.0;
  double gamma = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;
  double lambda = 1.0;
};

/// p = A rho: exponential wave in zeta = x - a t^2 / 2, linear temperature.
struct CTravel {
  double a = 1.0;
  double A = 1.0;
  double c1 = 0.0;
  double c2 = 1.0;
  double tc1 = 0.0;
  double tc2 = 1.0;
};

/// p = A T rho: trigonometric temperature, density by quadrature.
struct DVirial {
  double A = 1.0;
  double lambda = 1.0;
  double c1 = 0.0;
  double c2 = 1.0;
  double c3 = 1.0;
};

using SolutionFamily = std::variant<ACubic, BZk, BTravel, CGauss, CTravel, DVirial>;

struct StatePoint {
  double rho = 0.0;
  std::optional<double> v;  ///< empty outside the BZk support
  std::optional<double> T;  ///< empty for BTravel
};

struct Shape {
  std::optional<double> f;
  double g = 0.0;
  double h = 0.0;
};

/// Value and first two derivatives of a profile.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

enum class Clock { kT, kT1 };

/// field(x, t) = clock^-decay F(x / clock^spread)
struct FieldScaling {
  std::string field;
  double decay = 0.0;
  double spread = 0.5;
  Clock clock = Clock::kT;
};

std::string family_name(const SolutionFamily& family);
void validate(const SolutionFamily& family);
bool is_self_similar(const SolutionFamily& family);
bool has_temperature(const SolutionFamily& family);
/// The closure each family is built on.
EosModel family_eos(const SolutionFamily& family);
/// Heat conductivity used in residuals; 1 for families without one (linear T makes it irrelevant).
double family_diffusivity(const SolutionFamily& family);

Shape shape_functions(const SolutionFamily& family, double eta,
                      FormulaVariant variant = FormulaVariant::kCorrected);

StatePoint eval_state(const SolutionFamily& family, double x, double t,
                      FormulaVariant variant = FormulaVariant::kCorrected);

/// Time powers that collapse each field onto a function of its similarity variable.
std::vector<FieldScaling> self_similar_scalings(const SolutionFamily& family);

/// Closed-form v_t + v v_x + p_x / rho: zero for exact families, the neglected
/// quasi-stationary term otherwise. Empty outside the BZk support.
std::optional<double> momentum_defect(const SolutionFamily& family, double x, double t);

// --- porous-medium (Zeldovich-Kompaneets) profile -------------------------------

/// B^2 = (m-1) / (2m(m+1)).
double zk_width_squared(int m);
/// rho with rho^(m-1) = t1^(-alpha(m-1)) (A^2 - B^2 x^2 t1^(-2 beta))_+, alpha = beta = 1/(m+1).
double zk_profile(double x, double t1, double A, int m);
double front_position(double t1, double A, int m);
/// Exact mass (4/3) A^3 / B for m = 2; general m by closed-form beta function.
double zk_mass(double A, int m);

// --- family building blocks with analytic derivatives -------------------------

/// f = eta [c1 M(a', 3/2, s eta^2) + c2 U(a', 3/2, s eta^2)] solving
/// lambda f'' - (kappa - 1/2) eta f' + gamma f = 0 for v = kappa x / t.
struct KummerTemperature {
  double kappa = 1.0;
  double gamma = 1.0;
  double lambda = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;

  [[nodiscard]] double first_parameter() const;  ///< a' = 1/2 - gamma / (2 kappa - 1)
  [[nodiscard]] double argument_scale() const;   ///< s = (2 kappa - 1) / (4 lambda)
  [[nodiscard]] Jet jet(double eta) const;
  [[nodiscard]] double operator()(double eta) const { return jet(eta).value; }
};

KummerTemperature bzk_temperature(const BZk& p);
KummerTemperature cgauss_temperature(const CGauss& p, FormulaVariant variant);

/// Density profile h(zeta) of the Lambert-W wave with derivatives along zeta.
Jet btravel_profile(const BTravel& p, double zeta, FormulaVariant variant = FormulaVariant::kCorrected);

// --- virial density --------------------------------------------------------------

enum class VirialPath { kQuadrature, kClosedForm };

struct ClosedFormBranch {
  specfun::DilogConvention convention;
  std::complex<double> value;  ///< raw closed-form expression
  double real_part = 0.0;
  double normalized = 0.0;     ///< c3 * Re value(eta) / Re value(0)
};

struct VirialDensity {
  VirialPath path = VirialPath::kQuadrature;
  double value = 0.0;                      ///< quadrature value (kQuadrature)
  std::vector<ClosedFormBranch> branches;  ///< one per dilog convention (kClosedForm)
};

/// Temperature shape f(eta) = c1 sin(eta / sqrt(lambda)) + c2 cos(eta / sqrt(lambda)).
double virial_temperature_shape(const DVirial& p, double eta);
/// Throws PoleError if f vanishes on the closed interval between 0 and eta (within radius).
void check_virial_zero_free(const DVirial& p, double eta, double radius = 0.0);

/// c3 exp(int_0^eta (z/(4A) - f'(z)) / f(z) dz); kAsPrinted drops the exponential.
double virial_density_quadrature(double eta, const DVirial& p,
                                 FormulaVariant variant = FormulaVariant::kCorrected);
/// Complex-dilogarithm closed form; only defined at c1 = 0, c2 = c3 = A = lambda = 1.
std::vector<ClosedFormBranch> virial_density_closed_form(double eta, const DVirial& p);
VirialDensity virial_density(double eta, const DVirial& p, VirialPath path);

struct VirialCrossCheck {
  std::optional<specfun::DilogConvention> selected;  ///< empty on convention mismatch
  std::array<double, 2> max_rel_deviation{};         ///< indexed by DilogConvention
};

/// Compares CLOSED_FORM against QUADRATURE on the given eta samples under both conventions.
VirialCrossCheck virial_cross_check(const DVirial& p, const Eigen::ArrayXd& etas, double tol = 1e-6);

// --- tabulation ------------------------------------------------------------------

struct EvalRow {
  double x = 0.0;
  double t = 0.0;
  double rho = 0.0;
  std::optional<double> v;
  std::optional<double> T;
};

/// Samples the family on the tensor grid xs x ts (t-major order).
std::vector<EvalRow> sample_family(const SolutionFamily& family, const Eigen::ArrayXd& xs,
                                   const Eigen::ArrayXd& ts,
                                   FormulaVariant variant = FormulaVariant::kCorrected);

}  // namespace eulerheat
