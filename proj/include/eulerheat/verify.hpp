#pragma once

// Residual-based referee for the analytic families: finite-difference PDE
// residuals, reduced ODE residuals, self-similar collapse, porous-medium front
// fits, convergence orders and the printed-versus-corrected erratum report.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eulerheat/analytic.hpp"
#include "eulerheat/eos.hpp"
#include "eulerheat/pdesolver.hpp"

namespace eulerheat::verify {

struct Region {
  double x_lo = 0.1;
  double x_hi = 1.0;
  double t_lo = 1.0;
  double t_hi = 2.0;
};

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;  ///< root mean square over the sample lattice
};

struct ResidualOptions {
  int samples = 33;            ///< lattice points per direction
  double front_margin = 3.0;   ///< ZK front exclusion, in units of dx
  double fzero_radius = 1e-2;  ///< DVirial f-zero exclusion in eta
  int time_order = 4;          ///< central time difference of order 2 or 4
  void validate() const;
};

struct ResidualReport {
  std::string family;
  FormulaVariant mode = FormulaVariant::kCorrected;
  std::vector<std::string> eq_names;
  std::vector<Norms> norms;
  /// Per equation, the largest round-off bound of the stencil sums (eps times summed term magnitudes).
  std::vector<double> roundoff_floor;
  double dx = 0.0;
  double dt = 0.0;
  Region region;
  std::optional<double> order_estimate;
  /// Norms of (momentum residual - closed-form momentum defect).
  std::optional<Norms> momentum_defect_deviation;

  [[nodiscard]] const Norms& norm(const std::string& eq) const;
  [[nodiscard]] bool has(const std::string& eq) const;
};

/// Pointwise residuals on the sample lattice (x fastest).
struct ResidualSamples {
  std::vector<std::string> eq_names;
  Eigen::ArrayXd x;
  Eigen::ArrayXd t;
  std::vector<Eigen::ArrayXd> residual;  ///< one per equation
  std::vector<Eigen::ArrayXd> floor;     ///< round-off bound per equation
  std::optional<Eigen::ArrayXd> defect;  ///< closed-form momentum defect, when defined
};

ResidualSamples residual_samples(const SolutionFamily& family, const Region& region, double dx, double dt,
                                 FormulaVariant mode = FormulaVariant::kCorrected, const ResidualOptions& opts = {});

ResidualReport pde_residual(const SolutionFamily& family, const Region& region, double dx, double dt,
                            FormulaVariant mode = FormulaVariant::kCorrected, const ResidualOptions& opts = {});

/// pde_residual at each spacing (dx = dt = h); returns the finest report with order_estimate
/// set to the smallest per-equation order. Levels within 10x of their round-off floor are
/// dropped; an equation keeping fewer than two levels does not contribute. Where a momentum
/// defect is defined, momentum enters as its deviation from the defect.
ResidualReport pde_residual_study(const SolutionFamily& family, const Region& region,
                                  const std::vector<double>& spacings,
                                  FormulaVariant mode = FormulaVariant::kCorrected, const ResidualOptions& opts = {});

struct OdeReport {
  std::string family;
  FormulaVariant mode = FormulaVariant::kCorrected;
  std::vector<std::string> eq_names;
  std::vector<double> sup;  ///< scaled by max(1, largest term) pointwise
  double lo = 0.0;
  double hi = 0.0;
  int n_samples = 0;
  [[nodiscard]] double max() const;
};

/// Reduced-equation residuals. ACubic and DVirial: the three similarity ODEs. BZk and CGauss:
/// the Kummer temperature ODE. BTravel, CTravel: the profile ODE along zeta.
OdeReport ode_residual(const SolutionFamily& family, double lo, double hi, int n_samples,
                       FormulaVariant mode = FormulaVariant::kCorrected);

struct CollapseReport {
  std::vector<double> times;
  double max_pairwise_deviation = 0.0;
  Exponents<double> exponents_used;
  std::vector<std::pair<std::string, double>> per_field;
};

CollapseReport collapse_test(const SolutionFamily& family, const std::vector<double>& times,
                             const Eigen::ArrayXd& eta_grid);

struct FrontFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double fit_residual = 0.0;  ///< rms of log x_f about the fitted line
  bool front_moved = false;
  std::vector<double> t1;
  std::vector<double> position;
};

/// Rightmost crossing of the threshold (sub-cell linear), fitted as x_f = amplitude * t1^exponent.
/// Without an explicit threshold each snapshot uses 1e-6 * max rho.
FrontFit front_fit(const pde::PorousTrajectory& trajectory, std::optional<double> threshold = std::nullopt);

/// Least-squares slope of log norm against log spacing.
double convergence_order(const std::vector<double>& spacings, const std::vector<double>& norms);
/// Uses dx and the largest Linf across equations of each report.
double convergence_order(const std::vector<ResidualReport>& reports);

struct ErratumLevel {
  double spacing = 0.0;
  double printed = 0.0;    ///< Linf of the printed-form residual (or its deviation from the expected field)
  double corrected = 0.0;  ///< Linf of the corrected-form residual
  bool printed_fails = false;
  bool corrected_passes = false;
};

struct ErratumEntry {
  std::string id;
  std::string family;
  std::string equation;
  std::string description;
  bool forms_coincide = false;
  /// Set when the printed residual is compared against a known field instead of a threshold.
  std::optional<std::string> expected_printed_residual;
  double corrected_tol = 0.0;
  double printed_tol = 0.0;
  std::vector<ErratumLevel> levels;
  bool verdict = false;
};

struct ErratumReport {
  std::vector<ErratumEntry> entries;
  [[nodiscard]] bool all_pass() const;
};

/// The default spacings keep the 1e-10 check of the linear-temperature entry above the
/// round-off of the second x difference.
ErratumReport erratum_report(const std::vector<double>& spacings = {8e-3, 4e-3});

}  // namespace eulerheat::verify
