#include "eulerheat/pdesolver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "eulerheat/errors.hpp"

namespace eulerheat::pde {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double pressure_or_vacuum(const EosModel& eos, double rho, double T, double vacuum) {
  return rho < vacuum ? 0.0 : pressure(eos, rho, T);
}

double sound_speed(const EosModel& eos, double rho, double T, double vacuum) {
  if (rho < vacuum) return 0.0;
  return std::sqrt(std::max(0.0, dpressure_drho(eos, rho, T)));
}

void check_finite(const State& s) {
  for (int i = 0; i < s.grid.n; ++i) {
    if (!std::isfinite(s.rho[i]) || !std::isfinite(s.v[i]) || !std::isfinite(s.T[i])) {
      std::ostringstream msg;
      msg << "step: non-finite value at t = " << s.t << ", node " << i << " (x = " << s.grid.x(i)
          << "); reduce cfl";
      throw NumericalError(msg.str());
    }
  }
}

void apply_dirichlet(State& s, const DirichletFromFamily& bc) {
  for (int i : {0, s.grid.n - 1}) {
    const StatePoint p = eval_state(bc.family, s.grid.x(i), s.t, bc.variant);
    s.rho[i] = p.rho;
    s.v[i] = p.v.value_or(0.0);
    s.T[i] = p.T.value_or(0.0);
  }
}

}  // namespace

void Grid1D::validate() const {
  if (n < 3) throw ParameterError("Grid1D: requires n >= 3");
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) throw ParameterError("Grid1D: requires finite dx > 0");
}

Eigen::ArrayXd Grid1D::nodes() const {
  return x0 + dx * Eigen::ArrayXd::LinSpaced(n, 0.0, n - 1.0);
}

Grid1D Grid1D::spanning(double lo, double hi, int n) {
  if (n < 3 || !(hi > lo)) throw ParameterError("Grid1D::spanning: requires n >= 3 and hi > lo");
  return {lo, (hi - lo) / (n - 1), n};
}

void State::validate() const {
  grid.validate();
  if (rho.size() != grid.n || v.size() != grid.n || T.size() != grid.n)
    throw ParameterError("State: field arrays must match the grid size");
  if ((rho < 0.0).any()) throw DomainError("State: rho must be >= 0");
}

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ParameterError("SolverConfig: requires 0 < cfl <= 1");
  if (!(dt_max > 0.0)) throw ParameterError("SolverConfig: requires dt_max > 0");
  if (!(vacuum >= 0.0)) throw ParameterError("SolverConfig: requires vacuum >= 0");
}

State state_from_family(const SolutionFamily& family, const Grid1D& grid, double t, FormulaVariant variant) {
  grid.validate();
  State s{grid, t, Eigen::ArrayXd(grid.n), Eigen::ArrayXd(grid.n), Eigen::ArrayXd(grid.n)};
  for (int i = 0; i < grid.n; ++i) {
    const StatePoint p = eval_state(family, grid.x(i), t, variant);
    s.rho[i] = p.rho;
    s.v[i] = p.v.value_or(0.0);
    s.T[i] = p.T.value_or(0.0);
  }
  return s;
}

double stable_dt(const State& state, const EosModel& eos, double lambda, double cfl, double dt_max, double vacuum) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ParameterError("stable_dt: requires 0 < cfl <= 1");
  if (!(lambda >= 0.0)) throw ParameterError("stable_dt: requires lambda >= 0");
  state.validate();
  double speed = 0.0;
  for (int i = 0; i < state.grid.n; ++i) {
    speed = std::max(speed, std::fabs(state.v[i]) + sound_speed(eos, state.rho[i], state.T[i], vacuum));
  }
  const double dx = state.grid.dx;
  const double dt_adv = speed > 0.0 ? dx / speed : kInf;
  const double dt_diff = lambda > 0.0 ? dx * dx / (2.0 * lambda) : kInf;
  return std::min(cfl * std::min(dt_adv, dt_diff), dt_max);
}

State step(const State& state, const EosModel& eos, double lambda, double dt, const BcSpec& bc, double vacuum) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("step: requires finite dt > 0");
  const int n = state.grid.n;
  const double dx = state.grid.dx;
  const bool periodic = std::holds_alternative<Periodic>(bc);
  const auto& rho = state.rho;
  const auto& v = state.v;
  const auto& T = state.T;

  Eigen::ArrayXd p(n);
  for (int i = 0; i < n; ++i) p[i] = pressure_or_vacuum(eos, rho[i], T[i], vacuum);

  // Local Lax-Friedrichs flux at i+1/2 (index i); periodic adds the wrap interface n-1+1/2.
  const int n_faces = periodic ? n : n - 1;
  Eigen::ArrayXd flux(n_faces);
  for (int i = 0; i < n_faces; ++i) {
    const int j = (i + 1) % n;
    const double a = std::max(std::fabs(v[i]), std::fabs(v[j]));
    flux[i] = 0.5 * (rho[i] * v[i] + rho[j] * v[j]) - 0.5 * a * (rho[j] - rho[i]);
  }

  State out = state;
  out.t = state.t + dt;
  const int lo = periodic ? 0 : 1;
  const int hi = periodic ? n : n - 1;
  for (int i = lo; i < hi; ++i) {
    const int l = (i - 1 + n) % n;
    const int r = (i + 1) % n;
    const int face_l = periodic ? l : i - 1;
    out.rho[i] = rho[i] - dt / dx * (flux[i] - flux[face_l]);

    const double vx = v[i] >= 0.0 ? (v[i] - v[l]) / dx : (v[r] - v[i]) / dx;
    if (rho[i] < vacuum) {
      out.v[i] = 0.0;
    } else {
      const double px = (p[r] - p[l]) / (2.0 * dx);
      out.v[i] = v[i] - dt * (v[i] * vx + px / rho[i]);
    }

    const double tx = v[i] >= 0.0 ? (T[i] - T[l]) / dx : (T[r] - T[i]) / dx;
    const double txx = (T[r] - 2.0 * T[i] + T[l]) / (dx * dx);
    out.T[i] = T[i] - dt * (v[i] * tx - lambda * txx);
  }
  for (int i = lo; i < hi; ++i) {
    if (out.rho[i] < vacuum) out.v[i] = 0.0;
  }

  std::visit([&](const auto& b) {
    using B = std::decay_t<decltype(b)>;
    if constexpr (std::is_same_v<B, DirichletFromFamily>) {
      apply_dirichlet(out, b);
    } else if constexpr (std::is_same_v<B, Outflow>) {
      out.rho[0] = out.rho[1];
      out.v[0] = out.v[1];
      out.T[0] = out.T[1];
      out.rho[n - 1] = out.rho[n - 2];
      out.v[n - 1] = out.v[n - 2];
      out.T[n - 1] = out.T[n - 2];
    }
  }, bc);

  check_finite(out);
  return out;
}

std::vector<State> simulate(const State& ic, const EosModel& eos, double lambda,
                            const std::vector<double>& output_times, const BcSpec& bc, const SolverConfig& cfg) {
  cfg.validate();
  ic.validate();
  if (output_times.empty()) throw ParameterError("simulate: no output times");
  if (!std::is_sorted(output_times.begin(), output_times.end()))
    throw ParameterError("simulate: output times must be ascending");
  if (output_times.front() < ic.t) throw ParameterError("simulate: output time before the initial time");

  const auto start = Clock::now();
  std::vector<State> trajectory;
  State s = ic;
  long steps = 0;
  for (double target : output_times) {
    while (s.t < target) {
      double dt = stable_dt(s, eos, lambda, cfg.cfl, cfg.dt_max, cfg.vacuum);
      if (s.t + dt >= target) dt = target - s.t;
      s = step(s, eos, lambda, dt, bc, cfg.vacuum);
      if (s.t > target) s.t = target;  // guard against rounding past the output
      if (++steps % 256 == 0 && elapsed_seconds(start) > cfg.wall_clock_budget)
        throw NumericalError("simulate: wall-clock budget exhausted");
    }
    s.t = target;
    trajectory.push_back(s);
  }
  return trajectory;
}

PorousTrajectory porous_media_mode(const Grid1D& grid, const Eigen::ArrayXd& ic, double t1_start,
                                   const std::vector<double>& output_t1, const PorousConfig& cfg) {
  grid.validate();
  if (ic.size() != grid.n) throw ParameterError("porous_media_mode: ic size must match the grid");
  if ((ic < 0.0).any()) throw DomainError("porous_media_mode: ic must be >= 0");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ParameterError("porous_media_mode: requires 0 < cfl <= 1");
  if (!std::is_sorted(output_t1.begin(), output_t1.end()) || (!output_t1.empty() && output_t1.front() < t1_start))
    throw ParameterError("porous_media_mode: output times must be ascending and >= t1_start");

  const auto start = Clock::now();
  const int n = grid.n;
  const double dx = grid.dx;
  PorousTrajectory traj{grid, {}, {}, 0};
  Eigen::ArrayXd rho = ic;
  Eigen::ArrayXd sq(n);
  Eigen::ArrayXd next(n);
  double t1 = t1_start;

  // Only cells within one node of the support change in a step.
  auto support = [&](int& lo, int& hi) {
    lo = 0;
    while (lo < n && rho[lo] == 0.0) ++lo;
    hi = n - 1;
    while (hi >= 0 && rho[hi] == 0.0) --hi;
  };

  for (double target : output_t1) {
    int lo = 0, hi = -1;
    support(lo, hi);
    while (t1 < target && hi >= lo) {
      const double peak = rho.segment(lo, hi - lo + 1).maxCoeff();
      if (peak <= 0.0) break;
      double dt = cfg.cfl * dx * dx / (8.0 * peak);
      if (t1 + dt >= target) dt = target - t1;
      const int a = std::max(lo - 1, 0);
      const int b = std::min(hi + 1, n - 1);
      double* r = rho.data();
      double* q = sq.data();
      double* nx = next.data();
      for (int i = std::max(a - 1, 0); i <= std::min(b + 1, n - 1); ++i) q[i] = r[i] * r[i];
      const double k = dt / (dx * dx);
      const int ia = std::max(a, 1);
      const int ib = std::min(b, n - 2);
      for (int i = ia; i <= ib; ++i) nx[i] = r[i] + k * ((q[i + 1] - q[i]) - (q[i] - q[i - 1]));
      // zero-flux ends
      if (a == 0) nx[0] = r[0] + k * (q[1] - q[0]);
      if (b == n - 1) nx[n - 1] = r[n - 1] - k * (q[n - 1] - q[n - 2]);
      double check = 0.0;
      for (int i = a; i <= b; ++i) {
        r[i] = nx[i];
        check += nx[i];
      }
      if (!std::isfinite(check)) throw NumericalError("porous_media_mode: non-finite density");
      lo = a;
      hi = b;
      while (lo < hi && rho[lo] == 0.0) ++lo;
      while (hi > lo && rho[hi] == 0.0) --hi;
      t1 += dt;
      if (++traj.steps % 4096 == 0 && elapsed_seconds(start) > cfg.wall_clock_budget)
        throw NumericalError("porous_media_mode: wall-clock budget exhausted");
    }
    t1 = target;
    traj.t1.push_back(target);
    traj.rho.push_back(rho);
  }
  return traj;
}

double mass(const Grid1D& grid, const Eigen::ArrayXd& rho) { return rho.sum() * grid.dx; }

double l1_error(const State& numeric, const SolutionFamily& family, FormulaVariant variant) {
  const State exact = state_from_family(family, numeric.grid, numeric.t, variant);
  double err = ((numeric.rho - exact.rho).abs().sum() + (numeric.v - exact.v).abs().sum()) * numeric.grid.dx;
  if (has_temperature(family)) err += (numeric.T - exact.T).abs().sum() * numeric.grid.dx;
  return err;
}

}  // namespace eulerheat::pde
