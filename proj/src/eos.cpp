#include "eulerheat/eos.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "eulerheat/errors.hpp"

namespace eulerheat {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3;
constexpr std::array<const char*, 4> kSymbol = {"alpha", "beta", "gamma", "delta"};

// c0 + sum coef[i] * unknown[i]
struct LinearForm {
  Rational c0;
  std::array<Rational, 4> coef{};

  LinearForm& add(int i, Rational r) {
    coef[i] += r;
    return *this;
  }
  [[nodiscard]] Rational eval(const std::array<Rational, 4>& x) const {
    Rational s = c0;
    for (int i = 0; i < 4; ++i) s += coef[i] * x[i];
    return s;
  }
};

LinearForm form(Rational c0, std::initializer_list<std::pair<int, Rational>> terms) {
  LinearForm f{c0, {}};
  for (auto [i, r] : terms) f.add(i, r);
  return f;
}

struct Term {
  std::string name;
  LinearForm power;
};

struct Equation {
  std::string name;
  std::vector<Term> terms;
};

// Pressure monomial T^i rho^j; p_x / rho decays like t^-(i alpha + j gamma + beta - gamma).
Term pressure_term(const std::string& name, Rational i_temp, Rational j_rho) {
  return {name, form(0, {{kAlpha, i_temp}, {kGamma, j_rho - 1}, {kBeta, 1}})};
}

struct PowerModel {
  std::vector<Equation> equations;
};

PowerModel build_model(const EosModel& eos) {
  PowerModel m;
  m.equations.push_back({"continuity",
                         {{"rho_t", form(1, {{kGamma, 1}})},
                          {"(rho v)_x", form(0, {{kGamma, 1}, {kDelta, 1}, {kBeta, 1}})}}});

  Equation momentum{"momentum",
                    {{"v_t", form(1, {{kDelta, 1}})},
                     {"v v_x", form(0, {{kDelta, 2}, {kBeta, 1}})}}};
  std::visit(overloaded{
                 [&](const Polytropic& p) {
                   momentum.terms.push_back(pressure_term("p_x/rho [rho^n]", 0, Rational::from_double(p.n)));
                 },
                 [&](const Quadratic&) { momentum.terms.push_back(pressure_term("p_x/rho [rho^2]", 0, 2)); },
                 [&](const Linear&) { momentum.terms.push_back(pressure_term("p_x/rho [rho]", 0, 1)); },
                 [&](const Virial& v) {
                   momentum.terms.push_back(pressure_term("p_x/rho [T rho]", 1, 1));
                   if (v.B != 0.0) momentum.terms.push_back(pressure_term("p_x/rho [T rho^2]", 1, 2));
                   if (v.C != 0.0) momentum.terms.push_back(pressure_term("p_x/rho [T rho^3]", 1, 3));
                 },
                 [&](const VanDerWaals&) {
                   // (b - rho) is homogeneous in t only if rho ~ t^0.
                   m.equations.push_back(
                       {"vdw denominator (b - rho)", {{"b", form(0, {})}, {"rho", form(0, {{kGamma, 1}})}}});
                   momentum.terms.push_back(pressure_term("p_x/rho [a T rho/(b - rho)]", 1, 1));
                   momentum.terms.push_back(pressure_term("p_x/rho [c rho^2]", 0, 2));
                 },
             },
             eos);
  m.equations.push_back(std::move(momentum));

  m.equations.push_back({"heat",
                         {{"T_t", form(1, {{kAlpha, 1}})},
                          {"v T_x", form(0, {{kAlpha, 1}, {kDelta, 1}, {kBeta, 1}})},
                          {"lambda T_xx", form(0, {{kAlpha, 1}, {kBeta, 2}})}}});
  return m;
}

struct Constraint {
  std::string label;
  LinearForm lhs;  ///< lhs == 0
};

std::vector<Constraint> constraints_of(const PowerModel& m) {
  std::vector<Constraint> out;
  for (const auto& eq : m.equations) {
    for (std::size_t k = 1; k < eq.terms.size(); ++k) {
      LinearForm d = eq.terms[k].power;
      d.c0 -= eq.terms[0].power.c0;
      for (int i = 0; i < 4; ++i) d.coef[i] -= eq.terms[0].power.coef[i];
      out.push_back({eq.name + ": " + eq.terms[0].name + " ~ " + eq.terms[k].name, d});
    }
  }
  return out;
}

struct Solution {
  bool consistent = false;
  std::array<std::optional<Rational>, 4> value;
};

// Gauss-Jordan elimination over the rationals.
Solution solve(const std::vector<Constraint>& cs) {
  const std::size_t rows = cs.size();
  std::vector<std::array<Rational, 5>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (int i = 0; i < 4; ++i) a[r][i] = cs[r].lhs.coef[i];
    a[r][4] = -cs[r].lhs.c0;
  }
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  std::size_t row = 0;
  for (int col = 0; col < 4 && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 5; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  Solution s;
  for (std::size_t r = row; r < rows; ++r) {
    if (!a[r][4].is_zero()) return s;
  }
  s.consistent = true;
  for (int col = 0; col < 4; ++col) {
    if (pivot_row[col] < 0) continue;
    bool determined = true;
    for (int other = 0; other < 4; ++other) {
      if (other != col && pivot_row[other] < 0 && !a[pivot_row[col]][other].is_zero()) determined = false;
    }
    if (determined) s.value[col] = a[pivot_row[col]][4];
  }
  return s;
}

// Deletion filter: a minimal subset of cs that is still inconsistent.
std::vector<Constraint> minimal_conflict(std::vector<Constraint> cs) {
  for (std::size_t i = 0; i < cs.size();) {
    std::vector<Constraint> trial = cs;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!solve(trial).consistent) {
      cs = std::move(trial);
    } else {
      ++i;
    }
  }
  return cs;
}

}  // namespace

std::string eos_name(const EosModel& eos) {
  return std::visit(overloaded{[](const Polytropic&) { return std::string("polytropic"); },
                               [](const Quadratic&) { return std::string("quadratic"); },
                               [](const Linear&) { return std::string("linear"); },
                               [](const Virial&) { return std::string("virial"); },
                               [](const VanDerWaals&) { return std::string("vdw"); }},
                    eos);
}

void validate(const EosModel& eos) {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string("eos: ") + what + " must be > 0");
  };
  std::visit(overloaded{[&](const Polytropic& p) {
                          positive(p.a, "polytropic a");
                          if (!std::isfinite(p.n)) throw ParameterError("eos: polytropic n must be finite");
                        },
                        [&](const Quadratic& q) { positive(q.b, "quadratic b"); },
                        [&](const Linear& l) { positive(l.A, "linear A"); },
                        [&](const Virial& v) {
                          positive(v.A, "virial A");
                          if (!std::isfinite(v.B) || !std::isfinite(v.C))
                            throw ParameterError("eos: virial B, C must be finite");
                        },
                        [&](const VanDerWaals& w) {
                          positive(w.a, "vdw a");
                          positive(w.b, "vdw b");
                          positive(w.c, "vdw c");
                        }},
             eos);
}

bool depends_on_temperature(const EosModel& eos) {
  return std::holds_alternative<Virial>(eos) || std::holds_alternative<VanDerWaals>(eos);
}

double pressure(const EosModel& eos, double rho, double T) {
  if (!(rho > 0.0)) throw DomainError("pressure: rho must be > 0");
  return std::visit(overloaded{[&](const Polytropic& p) { return p.a * std::pow(rho, p.n); },
                               [&](const Quadratic& q) { return 0.5 * q.b * rho * rho; },
                               [&](const Linear& l) { return l.A * rho; },
                               [&](const Virial& v) { return v.A * T * rho * (1.0 + v.B * rho + v.C * rho * rho); },
                               [&](const VanDerWaals& w) {
                                 if (rho == w.b) throw PoleError("pressure: Van der Waals pole at rho = b");
                                 if (rho > w.b) throw DomainError("pressure: Van der Waals requires rho < b");
                                 return w.a * T * rho / (w.b - rho) - w.c * rho * rho;
                               }},
                    eos);
}

double dpressure_drho(const EosModel& eos, double rho, double T) {
  if (!(rho > 0.0)) throw DomainError("dpressure_drho: rho must be > 0");
  return std::visit(
      overloaded{[&](const Polytropic& p) { return p.a * p.n * std::pow(rho, p.n - 1.0); },
                 [&](const Quadratic& q) { return q.b * rho; },
                 [&](const Linear& l) { return l.A; },
                 [&](const Virial& v) { return v.A * T * (1.0 + 2.0 * v.B * rho + 3.0 * v.C * rho * rho); },
                 [&](const VanDerWaals& w) {
                   if (rho >= w.b) throw PoleError("dpressure_drho: Van der Waals requires rho < b");
                   return w.a * T * w.b / ((w.b - rho) * (w.b - rho)) - 2.0 * w.c * rho;
                 }},
      eos);
}

ConstraintResult exponent_constraints(const EosModel& eos) {
  const PowerModel model = build_model(eos);
  std::vector<Constraint> cs = constraints_of(model);
  ConstraintResult result;

  Solution sol = solve(cs);
  if (!sol.consistent) {
    std::ostringstream why;
    why << "inconsistent power counting; conflicting constraints:";
    for (const auto& c : minimal_conflict(cs)) why << " [" << c.label << "]";
    result.reason = why.str();
    return result;
  }

  std::string note;
  if (!sol.value[kGamma]) {
    // gamma left open: fix it so the continuity ODE is a total derivative.
    cs.push_back({"conservation law: gamma = beta", form(0, {{kGamma, 1}, {kBeta, -1}})});
    sol = solve(cs);
    note = "; gamma fixed by conservation-law integrability (gamma = beta)";
    if (!sol.consistent) {
      result.reason = "conservation-law integrability gamma = beta contradicts the power counting";
      return result;
    }
  }
  if (sol.value[kGamma] && sol.value[kGamma]->is_zero()) {
    result.reason =
        "density decay exponent forced to gamma = 0: pressure terms of different degree in rho share "
        "one power of t only for a non-decaying density";
    return result;
  }

  Exponents<Rational> e;
  e.alpha = sol.value[kAlpha];
  e.beta = sol.value[kBeta];
  e.gamma = sol.value[kGamma];
  e.delta = sol.value[kDelta];
  for (int i = 0; i < 4; ++i) {
    if (!sol.value[i]) result.free_params.emplace_back(kSymbol[i]);
  }
  result.feasible = true;
  result.exponents = e;
  result.continuity_integrable = e.gamma && e.beta && *e.gamma == *e.beta;
  result.reason = "all terms share a common power of t" + note;
  return result;
}

std::vector<TermPowers> term_powers(const EosModel& eos, const Exponents<Rational>& e) {
  if (!e.alpha || !e.beta || !e.gamma || !e.delta)
    throw ParameterError("term_powers: all of alpha, beta, gamma, delta must be set");
  const std::array<Rational, 4> x{*e.alpha, *e.beta, *e.gamma, *e.delta};
  std::vector<TermPowers> out;
  for (const auto& eq : build_model(eos).equations) {
    TermPowers tp{eq.name, {}, {}};
    for (const auto& term : eq.terms) {
      tp.terms.push_back(term.name);
      tp.powers.push_back(term.power.eval(x));
    }
    out.push_back(std::move(tp));
  }
  return out;
}

}  // namespace eulerheat
