#include "eulerheat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "eulerheat/analytic.hpp"
#include "eulerheat/cli.hpp"
#include "eulerheat/eos.hpp"
#include "eulerheat/pdesolver.hpp"
#include "eulerheat/specfun.hpp"
#include "eulerheat/verify.hpp"

namespace eulerheat::acceptance {
namespace {

__extension__ typedef __float128 Quad;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Maclaurin series of 1F1 in quad precision; independent of the library path.
double kummer_series_quad(double a, double b, double z) {
  Quad term = 1, sum = 1;
  const Quad qa = a, qb = b, qz = z;
  for (int k = 0; k < 4000; ++k) {
    term *= (qa + k) * qz / ((qb + k) * (k + 1));
    sum += term;
    const Quad mag = term < 0 ? -term : term;
    const Quad ref = sum < 0 ? -sum : sum;
    if (k > std::fabs(z) && mag < Quad(1e-32) * (ref > 1 ? ref : Quad(1))) break;
  }
  return static_cast<double>(sum);
}

void specfun_oracles(Outcome& o) {
  using specfun::li2;
  constexpr double inv_e = 1.0 / std::numbers::e;

  double worst_w = 0.0;
  const int nw = 10000;
  for (int k = 0; k < nw; ++k) {
    const double x = -inv_e + 1e-9 + (20.0 + inv_e - 1e-9) * k / (nw - 1);
    const double w = specfun::lambert_w0(x);
    worst_w = std::max(worst_w, std::fabs(w * std::exp(w) - x) / std::max(1.0, std::fabs(x)));
  }
  o.require(worst_w <= 1e-12, "lambert_w0 identity");

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> da(-3.0, 3.0), dz(-20.0, 20.0);
  double worst_m = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double a = da(rng), z = dz(rng);
    const double ref = kummer_series_quad(a, 1.5, z);
    worst_m = std::max(worst_m, std::fabs(specfun::kummer_m(a, 1.5, z) - ref) / std::max(1.0, std::fabs(ref)));
  }
  o.require(worst_m <= 1e-10, "kummer_m against quad-precision series");

  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  const double li2_one = std::abs(li2(std::complex<double>(1.0)) - pi2_6);
  o.require(li2_one <= 1e-12, "Li2(1)");

  double worst_refl = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double z = k / 1000.0;
    const double lhs = li2(std::complex<double>(z)).real() + li2(std::complex<double>(1.0 - z)).real();
    const double rhs = pi2_6 - std::log(z) * std::log(1.0 - z);
    worst_refl = std::max(worst_refl, std::fabs(lhs - rhs));
  }
  o.require(worst_refl <= 1e-10, "reflection identity");

  o.detail << "W residual " << sci(worst_w) << ", M deviation " << sci(worst_m) << ", Li2(1) error "
           << sci(li2_one) << ", reflection " << sci(worst_refl);
}

const verify::Region kRegion{0.1, 1.0, 1.0, 2.0};
const std::vector<double> kSpacings{4e-3, 2e-3, 1e-3};

void exact_residuals(Outcome& o) {
  for (const SolutionFamily& f : {SolutionFamily{ACubic{}}, SolutionFamily{DVirial{}}}) {
    const auto rep = verify::pde_residual_study(f, kRegion, kSpacings);
    double worst = 0.0;
    for (const auto& n : rep.norms) worst = std::max(worst, n.linf);
    const double order = rep.order_estimate.value_or(0.0);
    o.require(worst < 1e-6, rep.family + " residual");
    o.require(order >= 1.9, rep.family + " order");
    o.detail << rep.family << " max " << sci(worst) << " order " << sci(order) << "; ";
  }
}

void quasi_stationary_residuals(Outcome& o) {
  for (const SolutionFamily& f : {SolutionFamily{BZk{}}, SolutionFamily{CGauss{}}, SolutionFamily{CTravel{}}}) {
    const auto rep = verify::pde_residual_study(f, kRegion, kSpacings);
    const double cont = rep.norm("continuity").linf;
    const double heat = rep.norm("heat").linf;
    const double defect = rep.momentum_defect_deviation ? rep.momentum_defect_deviation->linf : INFINITY;
    const double order = rep.order_estimate.value_or(0.0);
    o.require(cont < 1e-6 && heat < 1e-6, rep.family + " continuity/heat");
    o.require(defect < 1e-6, rep.family + " momentum defect");
    o.require(order >= 1.9, rep.family + " order");
    o.detail << rep.family << " cont " << sci(cont) << " heat " << sci(heat) << " defect " << sci(defect)
             << " order " << sci(order) << "; ";
  }
}

void ode_residuals(Outcome& o) {
  const double bt = verify::ode_residual(BTravel{}, -5.0, 5.0, 1001).max();
  const double bz = verify::ode_residual(BZk{}, 0.0, 5.0, 501).max();
  const double cg = verify::ode_residual(CGauss{}, 0.0, 5.0, 501).max();
  o.require(bt < 1e-8, "b-travel ODE");
  o.require(bz < 1e-8, "b-zk temperature ODE");
  o.require(cg < 1e-8, "c-gauss temperature ODE");
  const auto cross = virial_cross_check(DVirial{}, Eigen::ArrayXd::LinSpaced(241, -1.2, 1.2), 1e-6);
  o.require(cross.selected.has_value(), "d-virial closed form against quadrature");
  const double dev = cross.selected ? cross.max_rel_deviation[static_cast<int>(*cross.selected)] : INFINITY;
  o.detail << "b-travel " << sci(bt) << ", b-zk " << sci(bz) << ", c-gauss " << sci(cg) << ", d-virial "
           << (cross.selected ? specfun::to_string(*cross.selected) : std::string("no convention")) << " deviation "
           << sci(dev);
}

void front_law(Outcome& o) {
  const double A = 1.0;
  const int n = 4000;
  const auto grid = pde::Grid1D::spanning(-8.0, 8.0, n);
  Eigen::ArrayXd ic(n);
  for (int i = 0; i < n; ++i) ic[i] = zk_profile(grid.x(i), 1.0, A, 2);
  std::vector<double> outs;
  for (int k = 0; k <= 30; ++k) outs.push_back(std::pow(8.0, k / 30.0));
  const auto traj = pde::porous_media_mode(grid, ic, 1.0, outs);
  const auto fit = verify::front_fit(traj);

  const double m0 = pde::mass(grid, ic);
  double drift = 0.0;
  for (const auto& r : traj.rho) drift = std::max(drift, std::fabs(pde::mass(grid, r) / m0 - 1.0));
  const double amp_ref = std::sqrt(12.0) * A;
  const double amp_err = std::fabs(fit.amplitude / amp_ref - 1.0);
  o.require(std::fabs(fit.exponent - 1.0 / 3.0) <= 0.02, "front exponent");
  o.require(amp_err <= 0.03, "front amplitude");
  o.require(drift <= 1e-10, "mass conservation");
  o.detail << "exponent " << fit.exponent << ", amplitude " << fit.amplitude << " (rel err " << sci(amp_err)
           << "), mass drift " << sci(drift) << ", " << traj.steps << " steps";
}

void simulator_convergence(Outcome& o) {
  const SolutionFamily f = ACubic{1.0, 1.0, 1.0, 0.0, 1.0, 1.0};
  std::vector<double> hs, errs;
  for (int cells : {25, 50, 100, 200, 400}) {
    const auto grid = pde::Grid1D::spanning(0.0, 1.0, cells + 1);
    const auto ic = pde::state_from_family(f, grid, 1.0);
    const auto out = pde::simulate(ic, family_eos(f), family_diffusivity(f), 1.2, pde::DirichletFromFamily{f});
    hs.push_back(grid.dx);
    errs.push_back(pde::l1_error(out.back(), f));
  }
  double min_pair = INFINITY;
  for (std::size_t k = 1; k < errs.size(); ++k) {
    o.require(errs[k] < errs[k - 1], "L1 error decreases");
    min_pair = std::min(min_pair, std::log2(errs[k - 1] / errs[k]));
  }
  const double fitted = verify::convergence_order(hs, errs);
  o.require(fitted >= 0.9 && min_pair >= 0.9, "order >= 0.9");
  o.detail << "L1 " << sci(errs.front()) << " -> " << sci(errs.back()) << ", fitted order " << fitted
           << ", smallest pairwise " << min_pair;
}

void collapse(Outcome& o) {
  const std::vector<double> times{1.0, 2.0, 4.0};
  const Eigen::ArrayXd etas = Eigen::ArrayXd::LinSpaced(49, -1.2, 1.2);
  for (const SolutionFamily& f : {SolutionFamily{ACubic{}}, SolutionFamily{BZk{}}, SolutionFamily{CGauss{}},
                                  SolutionFamily{DVirial{}}}) {
    const auto rep = verify::collapse_test(f, times, etas);
    o.require(rep.max_pairwise_deviation < 1e-10, family_name(f) + " collapse");
    o.detail << family_name(f) << " " << sci(rep.max_pairwise_deviation) << "; ";
  }
}

void erratum(Outcome& o) {
  const auto rep = verify::erratum_report();
  auto find = [&](const std::string& id) -> const verify::ErratumEntry* {
    for (const auto& e : rep.entries)
      if (e.id == id) return &e;
    return nullptr;
  };
  const auto* cubic = find("a-cubic-temperature-argument");
  const auto* travel = find("c-travel-temperature");
  o.require(cubic && travel, "entries present");
  if (!cubic || !travel) return;
  o.require(cubic->levels.size() >= 2 && travel->levels.size() >= 2, "two grid levels");
  for (const auto& l : cubic->levels) {
    o.require(l.printed > 1e-2, "a-cubic printed heat residual > 1e-2");
    o.require(l.corrected < 1e-6, "a-cubic corrected heat residual < 1e-6");
  }
  for (const auto& l : travel->levels) {
    o.require(l.printed <= 1e-8, "c-travel printed residual equals -2 a t tc2");
    o.require(l.corrected < 1e-10, "c-travel corrected residual < 1e-10");
  }
  o.require(rep.all_pass(), "every catalogued entry");
  o.detail << "a-cubic printed " << sci(cubic->levels.back().printed) << " corrected "
           << sci(cubic->levels.back().corrected) << "; c-travel printed deviation "
           << sci(travel->levels.back().printed) << " corrected " << sci(travel->levels.back().corrected);
}

struct Column {
  std::vector<double> x, t, rho, v, T;
};

Column eval_columns(const std::vector<std::string>& args, Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  o.require(code == 0, "eval exit status (" + err.str() + ")");
  Column c;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  o.require(line == "x,t,rho,v,T", "csv header");
  while (std::getline(in, line)) {
    std::array<std::string, 5> cells;
    std::size_t start = 0;
    for (int k = 0; k < 5; ++k) {
      const std::size_t end = line.find(',', start);
      cells[k] = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
      start = end == std::string::npos ? line.size() : end + 1;
    }
    auto num = [](const std::string& s) { return s.empty() ? NAN : std::stod(s); };
    c.x.push_back(num(cells[0]));
    c.t.push_back(num(cells[1]));
    c.rho.push_back(num(cells[2]));
    c.v.push_back(num(cells[3]));
    c.T.push_back(num(cells[4]));
  }
  return c;
}

void figures(Outcome& o) {
  // Steep front: rows are t-major, x ascending, so zeta ascends within each time block.
  const int nx = 2081;
  const Column bt = eval_columns({"eval", "--family", "b-travel", "--a", "1", "--b", "1", "--c1", "1", "--c2", "1",
                                  "--as-printed", "--x-min", "-40", "--x-max", "1000", "--nx",
                                  std::to_string(nx), "--times", "1,2"},
                                 o);
  o.require(bt.x.size() == 2 * static_cast<std::size_t>(nx), "b-travel row count");
  if (bt.x.size() == 2 * static_cast<std::size_t>(nx)) {
    for (int blk = 0; blk < 2; ++blk) {
      const std::size_t b0 = blk * nx, b1 = b0 + nx - 1;
      const double t = bt.t[b0];
      bool monotone = true;
      for (std::size_t k = b0 + 1; k <= b1; ++k) monotone = monotone && bt.rho[k] >= bt.rho[k - 1];
      o.require(monotone, "density nondecreasing in zeta");
      o.require(std::fabs(bt.rho[b0] - 1.0) < 1e-6, "left density plateau 1");
      o.require(std::fabs(bt.v[b0]) < 1e-6, "left velocity 0");
      o.require(std::fabs(bt.v[b1] + t) < 1e-2 * t, "right velocity -t");
      o.detail << "t=" << t << ": rho_left " << bt.rho[b0] << " v_left " << sci(bt.v[b0]) << " v_right "
               << bt.v[b1] << "; ";
    }
  }

  for (bool printed : {false, true}) {
    std::vector<std::string> args{"eval", "--family", "c-gauss", "--gamma", "1",   "--lambda", "1",
                                  "--c1", "1",        "--c2",    "0",       "--x-min", "-3",   "--x-max",
                                  "3",    "--nx",     "61",      "--times", "1,2,4"};
    if (printed) args.emplace_back("--as-printed");
    const Column cg = eval_columns(args, o);
    if (cg.x.size() != 3 * 61u) {
      o.require(false, "c-gauss row count");
      continue;
    }
    double odd_err = 0.0;
    std::array<double, 3> peak{};
    for (int blk = 0; blk < 3; ++blk) {
      for (int i = 0; i < 61; ++i) {
        const double T = cg.T[blk * 61 + i], mirror = cg.T[blk * 61 + 60 - i];
        odd_err = std::max(odd_err, std::fabs(T + mirror));
        peak[blk] = std::max(peak[blk], std::fabs(T));
      }
    }
    o.require(odd_err <= 1e-12 * peak[0], "c-gauss temperature odd in x");
    o.require(peak[1] < peak[0] && peak[2] < peak[1], "c-gauss temperature decays in t");
    o.detail << "c-gauss " << (printed ? "printed" : "corrected") << " max|T| " << sci(peak[0]) << " > "
             << sci(peak[1]) << " > " << sci(peak[2]) << ", odd error " << sci(odd_err) << "; ";
  }
}

void constraints(Outcome& o) {
  const auto poly = exponent_constraints(Polytropic{1.0, 3.0});
  o.require(poly.feasible && poly.exponents && poly.exponents->gamma == Rational(1, 2), "polytropic n=3");
  const auto vir = exponent_constraints(Virial{1.0, 0.0, 0.0});
  const bool vir_ok = vir.feasible && vir.exponents && vir.exponents->alpha == Rational(1) &&
                      vir.exponents->beta == Rational(1, 2) && vir.exponents->gamma == Rational(1, 2) &&
                      vir.exponents->delta == Rational(1, 2);
  o.require(vir_ok, "virial B=C=0");
  const auto vdw = exponent_constraints(VanDerWaals{});
  o.require(!vdw.feasible, "van der Waals infeasible");
  o.detail << "polytropic " << (poly.feasible ? "feasible" : "infeasible") << ", virial "
           << (vir.feasible ? "feasible" : "infeasible") << ", vdw " << (vdw.feasible ? "feasible" : "infeasible");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "special-function oracles", specfun_oracles},
      {2, "exact-family residuals", exact_residuals},
      {3, "quasi-stationary residuals", quasi_stationary_residuals},
      {4, "reduced ODE residuals", ode_residuals},
      {5, "porous-medium front law", front_law},
      {6, "simulator convergence", simulator_convergence},
      {7, "self-similar collapse", collapse},
      {8, "erratum detection", erratum},
      {9, "profile shapes", figures},
      {10, "exponent constraints", constraints},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back({c.id, c.name, o.passed, o.detail.str(), secs});
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace eulerheat::acceptance
