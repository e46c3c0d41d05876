#pragma once

// Explicit finite-difference integrator for
//   rho_t + (rho v)_x = 0,  v_t + v v_x = -p_x / rho,  T_t + v T_x = lambda T_xx
// plus the reduced porous-medium equation rho_t1 = (rho^2)_xx.

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "eulerheat/analytic.hpp"
#include "eulerheat/eos.hpp"

namespace eulerheat::pde {

/// Uniform node-centred grid, x_i = x0 + i dx.
struct Grid1D {
  double x0 = 0.0;
  double dx = 1.0;
  int n = 3;

  void validate() const;
  [[nodiscard]] double x(int i) const { return x0 + i * dx; }
  [[nodiscard]] Eigen::ArrayXd nodes() const;
  /// Grid with n nodes spanning [lo, hi] inclusive.
  static Grid1D spanning(double lo, double hi, int n);
};

struct State {
  Grid1D grid;
  double t = 0.0;
  Eigen::ArrayXd rho;
  Eigen::ArrayXd v;
  Eigen::ArrayXd T;

  void validate() const;
};

struct Periodic {};
/// Boundary nodes are overwritten by the family's exact trace at the new time level.
struct DirichletFromFamily {
  SolutionFamily family;
  FormulaVariant variant = FormulaVariant::kCorrected;
};
/// Zero-gradient extrapolation.
struct Outflow {};

using BcSpec = std::variant<Periodic, DirichletFromFamily, Outflow>;

struct SolverConfig {
  double cfl = 0.4;
  double dt_max = 1.0;            ///< cap when no wave speed or diffusion limits the step
  double vacuum = 1e-14;          ///< cells with rho below this carry v = 0
  double wall_clock_budget = 600;  ///< seconds
  void validate() const;
};

/// Samples a family onto the grid; absent v or T become 0.
State state_from_family(const SolutionFamily& family, const Grid1D& grid, double t,
                        FormulaVariant variant = FormulaVariant::kCorrected);

double stable_dt(const State& state, const EosModel& eos, double lambda, double cfl, double dt_max = 1.0,
                 double vacuum = 1e-14);

State step(const State& state, const EosModel& eos, double lambda, double dt, const BcSpec& bc,
           double vacuum = 1e-14);

/// Integrates to each requested output time (ascending, >= ic.t); the last step before an
/// output is shortened to land on it exactly.
std::vector<State> simulate(const State& ic, const EosModel& eos, double lambda,
                            const std::vector<double>& output_times, const BcSpec& bc,
                            const SolverConfig& cfg = {});

inline std::vector<State> simulate(const State& ic, const EosModel& eos, double lambda, double t_end,
                                   const BcSpec& bc, const SolverConfig& cfg = {}) {
  return simulate(ic, eos, lambda, std::vector<double>{t_end}, bc, cfg);
}

struct PorousTrajectory {
  Grid1D grid;
  std::vector<double> t1;
  std::vector<Eigen::ArrayXd> rho;
  long steps = 0;
};

struct PorousConfig {
  /// dt = cfl dx^2 / (8 max rho); cfl <= 1 keeps rho >= 0.
  double cfl = 1.0;
  double wall_clock_budget = 600;
};

/// rho_t1 = (rho^2)_xx with zero-flux ends, conservative central differencing.
PorousTrajectory porous_media_mode(const Grid1D& grid, const Eigen::ArrayXd& ic, double t1_start,
                                   const std::vector<double>& output_t1, const PorousConfig& cfg = {});

double mass(const Grid1D& grid, const Eigen::ArrayXd& rho);

/// Sum over fields of dx * sum |numeric - exact|; T skipped for families without temperature.
double l1_error(const State& numeric, const SolutionFamily& family,
                FormulaVariant variant = FormulaVariant::kCorrected);

}  // namespace eulerheat::pde
