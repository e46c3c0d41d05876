#pragma once

// Equation-of-state closures and the exact power-counting test that decides
// whether the self-similar ansatz
//   T = t^-alpha f(eta), v = t^-delta g(eta), rho = t^-gamma h(eta), eta = x / t^beta
// closes the continuity / Euler / heat system for a given closure.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eulerheat/rational.hpp"

namespace eulerheat {

struct Polytropic {
  double a = 1.0;  ///< pressure scale
  double n = 3.0;  ///< exponent, p = a rho^n
};

struct Quadratic {
  double b = 1.0;  ///< p = (b/2) rho^2
};

struct Linear {
  double A = 1.0;  ///< p = A rho
};

struct Virial {
  double A = 1.0;  ///< p = A T rho (1 + B rho + C rho^2)
  double B = 0.0;
  double C = 0.0;
};

struct VanDerWaals {
  double a = 1.0;  ///< p = a T rho / (b - rho) - c rho^2
  double b = 1.0;
  double c = 1.0;
};

using EosModel = std::variant<Polytropic, Quadratic, Linear, Virial, VanDerWaals>;

/// Similarity exponents. An empty optional is a free (or unused) exponent.
template <typename Scalar>
struct Exponents {
  std::optional<Scalar> alpha;  ///< temperature decay
  std::optional<Scalar> beta;   ///< spatial spread
  std::optional<Scalar> gamma;  ///< density decay
  std::optional<Scalar> delta;  ///< velocity decay
  std::optional<Scalar> omega;  ///< separate spread exponent where a field needs one
};

struct ConstraintResult {
  bool feasible = false;
  std::optional<Exponents<Rational>> exponents;  ///< present iff feasible
  std::vector<std::string> free_params;
  std::string reason;
  /// gamma == beta, i.e. the continuity ODE is a total eta-derivative.
  bool continuity_integrable = false;
};

/// Decay powers P of every term of one equation (term ~ t^-P) under given exponents.
struct TermPowers {
  std::string equation;
  std::vector<std::string> terms;
  std::vector<Rational> powers;
};

std::string eos_name(const EosModel& eos);
void validate(const EosModel& eos);

double pressure(const EosModel& eos, double rho, double T = 0.0);
/// dp/drho at fixed T; squared sound speed (may be negative for Van der Waals).
double dpressure_drho(const EosModel& eos, double rho, double T = 0.0);
bool depends_on_temperature(const EosModel& eos);

ConstraintResult exponent_constraints(const EosModel& eos);

/// Requires alpha, beta, gamma, delta all set.
std::vector<TermPowers> term_powers(const EosModel& eos, const Exponents<Rational>& e);

}  // namespace eulerheat
