#include "eulerheat/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerheat/acceptance.hpp"
#include "eulerheat/errors.hpp"
#include "eulerheat/pdesolver.hpp"
#include "eulerheat/report_json.hpp"
#include "eulerheat/verify.hpp"

namespace eulerheat::cli {
namespace {

using nlohmann::json;

template <class P>
using Setters = std::vector<std::pair<std::string, double P::*>>;

template <class P>
P apply_params(P p, const Setters<P>& setters, const std::map<std::string, double>& params, const std::string& who) {
  for (const auto& [key, value] : params) {
    auto it = std::find_if(setters.begin(), setters.end(), [&](const auto& s) { return s.first == key; });
    if (it == setters.end()) throw ParameterError(who + " has no parameter --" + key);
    p.*(it->second) = value;
  }
  return p;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Every numeric parameter flag shared by families and closures.
const std::vector<std::string> kParamNames = {"a",   "b",     "c",     "A",      "B",      "C",   "c1",  "c2",
                                              "c3",  "alpha", "gamma", "lambda", "tc1",    "tc2", "n"};

struct ParamFlags {
  std::map<std::string, double> storage;
  std::vector<CLI::Option*> options;

  void attach(CLI::App* app) {
    for (const auto& name : kParamNames) {
      storage[name] = 0.0;
      options.push_back(app->add_option("--" + name, storage[name], "parameter " + name));
    }
  }
  [[nodiscard]] std::map<std::string, double> given() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < kParamNames.size(); ++i)
      if (options[i]->count() > 0) out[kParamNames[i]] = storage.at(kParamNames[i]);
    return out;
  }
};

// Output sink that is stdout unless --output names a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file " + path);
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& s, std::initializer_list<Format> allowed) {
  static const std::map<std::string, Format> names = {
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  auto it = names.find(s);
  if (it == names.end() || std::find(allowed.begin(), allowed.end(), it->second) == allowed.end())
    throw ParameterError("unsupported --format " + s + " for this command");
  return it->second;
}

std::vector<double> time_list(const std::vector<double>& times, double t_min, double t_max, int nt) {
  if (!times.empty()) return times;
  if (nt < 1) throw ParameterError("--nt must be >= 1");
  if (nt == 1) return {t_min};
  std::vector<double> out;
  for (int k = 0; k < nt; ++k) out.push_back(t_min + (t_max - t_min) * k / (nt - 1));
  return out;
}

Eigen::ArrayXd linspace(double lo, double hi, int n, const char* what) {
  if (n < 2 || !(hi > lo)) throw ParameterError(std::string(what) + ": needs max > min and at least 2 points");
  return Eigen::ArrayXd::LinSpaced(n, lo, hi);
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> suites = {
      {"all", {}},         {"specfun", {1}},   {"residual", {2, 3}}, {"ode", {4}},     {"front", {5}},
      {"simulator", {6}},  {"collapse", {7}},  {"erratum", {8}},     {"figures", {9}}, {"constraints", {10}}};
  auto it = suites.find(suite);
  if (it == suites.end()) throw ParameterError("unknown --suite " + suite);
  return it->second;
}

void write_state_csv(std::ostream& os, const pde::State& s, bool with_T) {
  for (int i = 0; i < s.grid.n; ++i) {
    os << format_double(s.grid.x(i)) << ',' << format_double(s.t) << ',' << format_double(s.rho[i]) << ','
       << format_double(s.v[i]) << ',';
    if (with_T) os << format_double(s.T[i]);
    os << '\n';
  }
}

}  // namespace

SolutionFamily make_family(const std::string& name, const std::map<std::string, double>& params) {
  SolutionFamily f;
  if (name == "a-cubic") {
    f = apply_params(ACubic{}, Setters<ACubic>{{"a", &ACubic::a}, {"c1", &ACubic::c1}, {"c2", &ACubic::c2},
                                                 {"c3", &ACubic::c3}, {"alpha", &ACubic::alpha},
                                                 {"lambda", &ACubic::lambda}},
                     params, name);
  } else if (name == "b-zk") {
    f = apply_params(BZk{}, Setters<BZk>{{"b", &BZk::b}, {"A", &BZk::A}, {"gamma", &BZk::gamma},
                                          {"c1", &BZk::c1}, {"c2", &BZk::c2}, {"lambda", &BZk::lambda}},
                     params, name);
  } else if (name == "b-travel") {
    f = apply_params(BTravel{}, Setters<BTravel>{{"a", &BTravel::a}, {"b", &BTravel::b}, {"c1", &BTravel::c1},
                                                  {"c2", &BTravel::c2}},
                     params, name);
  } else if (name == "c-gauss") {
    f = apply_params(CGauss{}, Setters<CGauss>{{"A", &CGauss::A}, {"gamma", &CGauss::gamma}, {"c1", &CGauss::c1},
                                                {"c2", &CGauss::c2}, {"lambda", &CGauss::lambda}},
                     params, name);
  } else if (name == "c-travel") {
    f = apply_params(CTravel{}, Setters<CTravel>{{"a", &CTravel::a}, {"A", &CTravel::A}, {"c1", &CTravel::c1},
                                                  {"c2", &CTravel::c2}, {"tc1", &CTravel::tc1},
                                                  {"tc2", &CTravel::tc2}},
                     params, name);
  } else if (name == "d-virial") {
    f = apply_params(DVirial{}, Setters<DVirial>{{"A", &DVirial::A}, {"lambda", &DVirial::lambda},
                                                  {"c1", &DVirial::c1}, {"c2", &DVirial::c2}, {"c3", &DVirial::c3}},
                     params, name);
  } else {
    throw ParameterError("unknown family " + name +
                         " (expected a-cubic, b-zk, b-travel, c-gauss, c-travel or d-virial)");
  }
  validate(f);
  return f;
}

EosModel make_eos(const std::string& name, const std::map<std::string, double>& params) {
  EosModel e;
  if (name == "polytropic") {
    e = apply_params(Polytropic{}, Setters<Polytropic>{{"a", &Polytropic::a}, {"n", &Polytropic::n}}, params, name);
  } else if (name == "quadratic") {
    e = apply_params(Quadratic{}, Setters<Quadratic>{{"b", &Quadratic::b}}, params, name);
  } else if (name == "linear") {
    e = apply_params(Linear{}, Setters<Linear>{{"A", &Linear::A}}, params, name);
  } else if (name == "virial") {
    e = apply_params(Virial{}, Setters<Virial>{{"A", &Virial::A}, {"B", &Virial::B}, {"C", &Virial::C}}, params,
                     name);
  } else if (name == "vdw") {
    e = apply_params(VanDerWaals{},
                     Setters<VanDerWaals>{{"a", &VanDerWaals::a}, {"b", &VanDerWaals::b}, {"c", &VanDerWaals::c}},
                     params, name);
  } else {
    throw ParameterError("unknown eos " + name + " (expected polytropic, quadratic, linear, virial or vdw)");
  }
  validate(e);
  return e;
}

void write_csv(std::ostream& os, const std::vector<EvalRow>& rows) {
  os << "x,t,rho,v,T\n";
  for (const auto& r : rows) {
    os << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.rho) << ',';
    if (r.v) os << format_double(*r.v);
    os << ',';
    if (r.T) os << format_double(*r.T);
    os << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form solutions of the Euler-heat system: evaluation, verification and simulation",
               "eulerheat"};
  app.set_config("--config", "", "flat key-value file; [command] sections or command.key lines");
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds the subset it uses.
  std::string family_name_opt, eos_name_opt, output = "-";
  std::string eval_format = "csv", verify_format = "text", sim_format = "csv", collapse_format = "json",
              constraints_format = "text", erratum_format = "json";
  bool as_printed = false;
  double x_min = -5.0, x_max = 5.0, t_min = 1.0, t_max = 1.0;
  int nx = 101, nt = 1;
  std::vector<double> times;

  auto add_family = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--family", family_name_opt, "a-cubic, b-zk, b-travel, c-gauss, c-travel, d-virial");
    if (required) o->required();
    sub->add_flag("--as-printed", as_printed, "use the historically printed formulas");
  };
  auto add_output = [&](CLI::App* sub, std::string& format) {
    sub->add_option("--output,-o", output, "output file, - for stdout");
    sub->add_option("--format", format, "text, csv or json")->capture_default_str();
  };

  // eval
  ParamFlags eval_params;
  auto* eval = app.add_subcommand("eval", "sample a family on an x-t grid");
  add_family(eval, true);
  eval_params.attach(eval);
  eval->add_option("--x-min", x_min)->capture_default_str();
  eval->add_option("--x-max", x_max)->capture_default_str();
  eval->add_option("--nx", nx)->capture_default_str();
  eval->add_option("--t-min", t_min)->capture_default_str();
  eval->add_option("--t-max", t_max)->capture_default_str();
  eval->add_option("--nt", nt)->capture_default_str();
  eval->add_option("--times", times, "explicit sample times (overrides --t-min/--t-max/--nt)")->delimiter(',');
  add_output(eval, eval_format);

  // verify
  ParamFlags verify_params;
  std::string suite = "all";
  std::vector<int> criteria;
  verify::Region region;
  std::vector<double> spacings = {4e-3, 2e-3, 1e-3};
  double tol = 1e-6, min_order = 1.9;
  int time_order = 4;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite, or a residual study of one family");
  verify_cmd->add_option("--suite", suite,
                         "all, specfun, residual, ode, front, simulator, collapse, erratum, figures, constraints")
      ->capture_default_str();
  verify_cmd->add_option("--criteria", criteria, "criterion ids 1-10")->delimiter(',');
  add_family(verify_cmd, false);
  verify_params.attach(verify_cmd);
  verify_cmd->add_option("--x-lo", region.x_lo)->capture_default_str();
  verify_cmd->add_option("--x-hi", region.x_hi)->capture_default_str();
  verify_cmd->add_option("--t-lo", region.t_lo)->capture_default_str();
  verify_cmd->add_option("--t-hi", region.t_hi)->capture_default_str();
  verify_cmd->add_option("--spacings", spacings, "dx = dt levels of the residual study")->delimiter(',');
  verify_cmd->add_option("--tol", tol, "Linf bound on each residual")->capture_default_str();
  verify_cmd->add_option("--min-order", min_order)->capture_default_str();
  verify_cmd->add_option("--time-order", time_order, "2 or 4")->capture_default_str();
  add_output(verify_cmd, verify_format);

  // simulate
  ParamFlags sim_params;
  std::string bc_name = "dirichlet";
  double t_start = 1.0, t_end = 1.2, cfl = -1.0, budget = 600.0;
  int snapshots = 1;
  bool porous = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "integrate from a family's state, or the porous-medium mode");
  add_family(simulate_cmd, false);
  sim_params.attach(simulate_cmd);
  simulate_cmd->add_flag("--porous", porous, "reduced porous-medium equation from the m = 2 profile (uses --A)");
  simulate_cmd->add_option("--bc", bc_name, "dirichlet, periodic or outflow")->capture_default_str();
  simulate_cmd->add_option("--x-min", x_min)->capture_default_str();
  simulate_cmd->add_option("--x-max", x_max)->capture_default_str();
  simulate_cmd->add_option("--nx", nx)->capture_default_str();
  simulate_cmd->add_option("--t-start", t_start)->capture_default_str();
  simulate_cmd->add_option("--t-end", t_end)->capture_default_str();
  simulate_cmd->add_option("--snapshots", snapshots, "equally spaced outputs after the initial state")
      ->capture_default_str();
  simulate_cmd->add_option("--cfl", cfl, "default 0.4 (Euler) or 1.0 (porous)");
  simulate_cmd->add_option("--budget", budget, "wall-clock budget in seconds")->capture_default_str();
  add_output(simulate_cmd, sim_format);

  // collapse
  ParamFlags collapse_params;
  double eta_min = -1.0, eta_max = 1.0, collapse_tol = 1e-10;
  int neta = 41;
  std::vector<double> collapse_times = {1.0, 2.0, 4.0};
  auto* collapse_cmd = app.add_subcommand("collapse", "rescaled snapshots of a self-similar family");
  add_family(collapse_cmd, true);
  collapse_params.attach(collapse_cmd);
  collapse_cmd->add_option("--times", collapse_times)->delimiter(',');
  collapse_cmd->add_option("--eta-min", eta_min)->capture_default_str();
  collapse_cmd->add_option("--eta-max", eta_max)->capture_default_str();
  collapse_cmd->add_option("--neta", neta)->capture_default_str();
  collapse_cmd->add_option("--tol", collapse_tol)->capture_default_str();
  add_output(collapse_cmd, collapse_format);

  // constraints
  ParamFlags eos_params;
  auto* constraints_cmd = app.add_subcommand("constraints", "similarity exponents admitted by a closure");
  constraints_cmd->add_option("--eos", eos_name_opt, "polytropic, quadratic, linear, virial, vdw")->required();
  eos_params.attach(constraints_cmd);
  add_output(constraints_cmd, constraints_format);

  // erratum
  std::vector<double> erratum_spacings = {8e-3, 4e-3};
  auto* erratum_cmd = app.add_subcommand("erratum", "printed versus corrected formula residuals");
  erratum_cmd->add_option("--spacings", erratum_spacings)->delimiter(',');
  add_output(erratum_cmd, erratum_format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "eulerheat: " << e.what() << '\n';
    return kConfigError;
  }

  const FormulaVariant variant = as_printed ? FormulaVariant::kAsPrinted : FormulaVariant::kCorrected;
  try {
    if (eval->parsed()) {
      const Format fmt = parse_format(eval_format, {Format::kCsv, Format::kJson});
      const SolutionFamily family = make_family(family_name_opt, eval_params.given());
      const std::vector<double> ts = time_list(times, t_min, t_max, nt);
      const Eigen::ArrayXd xs = linspace(x_min, x_max, nx, "eval");
      const Eigen::ArrayXd tv = Eigen::Map<const Eigen::ArrayXd>(ts.data(), static_cast<Eigen::Index>(ts.size()));
      const auto rows = sample_family(family, xs, tv, variant);
      Sink sink(output, out);
      if (fmt == Format::kCsv) {
        write_csv(*sink, rows);
      } else {
        *sink << json{{"family", eulerheat::family_name(family)},
                      {"mode", as_printed ? "as_printed" : "corrected"},
                      {"rows", rows}}.dump(1)
              << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const Format fmt = parse_format(verify_format, {Format::kText, Format::kJson});
      Sink sink(output, out);
      if (!family_name_opt.empty()) {
        const SolutionFamily family = make_family(family_name_opt, verify_params.given());
        verify::ResidualOptions opts;
        opts.time_order = time_order;
        const auto rep = verify::pde_residual_study(family, region, spacings, variant, opts);
        bool ok = rep.order_estimate && *rep.order_estimate >= min_order;
        for (std::size_t i = 0; i < rep.eq_names.size(); ++i) {
          const bool use_defect = rep.eq_names[i] == "momentum" && rep.momentum_defect_deviation;
          const double n = use_defect ? rep.momentum_defect_deviation->linf : rep.norms[i].linf;
          ok = ok && n < tol;
        }
        if (fmt == Format::kJson) {
          json j = rep;
          j["passed"] = ok;
          *sink << j.dump(1) << '\n';
        } else {
          *sink << rep.family << " dx=dt=" << rep.dx << '\n';
          for (std::size_t i = 0; i < rep.eq_names.size(); ++i)
            *sink << "  " << rep.eq_names[i] << " linf=" << rep.norms[i].linf << '\n';
          if (rep.momentum_defect_deviation)
            *sink << "  momentum-minus-defect linf=" << rep.momentum_defect_deviation->linf << '\n';
          *sink << "  order=" << (rep.order_estimate ? format_double(*rep.order_estimate) : "none") << '\n'
                << (ok ? "PASS" : "FAIL") << '\n';
        }
        return ok ? kOk : kVerificationFailed;
      }
      const std::vector<int> ids = criteria.empty() ? suite_criteria(suite) : criteria;
      for (int id : ids)
        if (id < 1 || id > acceptance::kCriterionCount) throw ParameterError("criterion ids are 1-10");
      const auto results = acceptance::run_criteria(ids);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (fmt == Format::kJson) {
        *sink << json{{"criteria", results}, {"passed", ok}}.dump(1) << '\n';
      } else {
        for (const auto& r : results) *sink << acceptance::format_line(r) << '\n';
        *sink << (ok ? "all criteria passed" : "some criteria failed") << '\n';
      }
      return ok ? kOk : kVerificationFailed;
    }

    if (simulate_cmd->parsed()) {
      const Format fmt = parse_format(sim_format, {Format::kCsv, Format::kJson});
      if (snapshots < 1) throw ParameterError("--snapshots must be >= 1");
      if (!(t_end > t_start)) throw ParameterError("--t-end must exceed --t-start");
      std::vector<double> outs;
      for (int k = 1; k <= snapshots; ++k) outs.push_back(t_start + (t_end - t_start) * k / snapshots);
      const pde::Grid1D grid = pde::Grid1D::spanning(x_min, x_max, nx);
      Sink sink(output, out);

      if (porous) {
        if (!family_name_opt.empty()) throw ParameterError("--porous takes no --family");
        double A = 1.0;
        for (const auto& [k, v] : sim_params.given()) {
          if (k != "A") throw ParameterError("--porous accepts only --A");
          A = v;
        }
        Eigen::ArrayXd ic(grid.n);
        for (int i = 0; i < grid.n; ++i) ic[i] = zk_profile(grid.x(i), t_start, A, 2);
        pde::PorousConfig cfg;
        if (cfl > 0.0) cfg.cfl = cfl;
        cfg.wall_clock_budget = budget;
        const auto traj = pde::porous_media_mode(grid, ic, t_start, outs, cfg);
        if (fmt == Format::kCsv) {
          *sink << "x,t,rho,v,T\n";
          for (std::size_t k = 0; k < traj.t1.size(); ++k)
            for (int i = 0; i < grid.n; ++i)
              *sink << format_double(grid.x(i)) << ',' << format_double(traj.t1[k]) << ','
                    << format_double(traj.rho[k][i]) << ",,\n";
        } else {
          json snaps = json::array();
          for (std::size_t k = 0; k < traj.t1.size(); ++k)
            snaps.push_back({{"t1", traj.t1[k]},
                             {"rho", std::vector<double>(traj.rho[k].data(), traj.rho[k].data() + grid.n)}});
          *sink << json{{"mode", "porous"}, {"steps", traj.steps}, {"snapshots", snaps}}.dump(1) << '\n';
        }
        return kOk;
      }

      if (family_name_opt.empty()) throw ParameterError("simulate needs --family or --porous");
      const SolutionFamily family = make_family(family_name_opt, sim_params.given());
      pde::BcSpec bc;
      if (bc_name == "dirichlet") {
        bc = pde::DirichletFromFamily{family, variant};
      } else if (bc_name == "periodic") {
        bc = pde::Periodic{};
      } else if (bc_name == "outflow") {
        bc = pde::Outflow{};
      } else {
        throw ParameterError("unknown --bc " + bc_name);
      }
      pde::SolverConfig cfg;
      if (cfl > 0.0) cfg.cfl = cfl;
      cfg.wall_clock_budget = budget;
      const pde::State ic = pde::state_from_family(family, grid, t_start, variant);
      const auto states = pde::simulate(ic, family_eos(family), family_diffusivity(family), outs, bc, cfg);
      const bool with_T = has_temperature(family);
      if (fmt == Format::kCsv) {
        *sink << "x,t,rho,v,T\n";
        write_state_csv(*sink, ic, with_T);
        for (const auto& s : states) write_state_csv(*sink, s, with_T);
      } else {
        json snaps = json::array();
        auto vec = [](const Eigen::ArrayXd& a) { return std::vector<double>(a.data(), a.data() + a.size()); };
        for (const auto& s : states) {
          json snap = {{"t", s.t}, {"rho", vec(s.rho)}, {"v", vec(s.v)},
                       {"l1_error", pde::l1_error(s, family, variant)}};
          if (with_T) snap["T"] = vec(s.T);
          snaps.push_back(snap);
        }
        *sink << json{{"family", eulerheat::family_name(family)},
                      {"x", vec(grid.nodes())},
                      {"snapshots", snaps}}.dump(1)
              << '\n';
      }
      return kOk;
    }

    if (collapse_cmd->parsed()) {
      const Format fmt = parse_format(collapse_format, {Format::kCsv, Format::kJson});
      const SolutionFamily family = make_family(family_name_opt, collapse_params.given());
      const auto rep = verify::collapse_test(family, collapse_times, linspace(eta_min, eta_max, neta, "collapse"));
      const bool ok = rep.max_pairwise_deviation < collapse_tol;
      Sink sink(output, out);
      if (fmt == Format::kJson) {
        json j = rep;
        j["passed"] = ok;
        *sink << j.dump(1) << '\n';
      } else {
        *sink << "field,max_pairwise_deviation\n";
        for (const auto& [name, dev] : rep.per_field) *sink << name << ',' << format_double(dev) << '\n';
      }
      return ok ? kOk : kVerificationFailed;
    }

    if (constraints_cmd->parsed()) {
      const Format fmt = parse_format(constraints_format, {Format::kText, Format::kJson});
      const EosModel eos = make_eos(eos_name_opt, eos_params.given());
      const ConstraintResult c = exponent_constraints(eos);
      Sink sink(output, out);
      if (fmt == Format::kJson) {
        *sink << json(c).dump(1) << '\n';
      } else {
        *sink << (c.feasible ? "feasible" : "infeasible") << '\n';
        if (c.exponents) {
          auto line = [&](const char* name, const std::optional<Rational>& r) {
            *sink << name << " = " << (r ? r->str() : "free") << '\n';
          };
          line("alpha", c.exponents->alpha);
          line("beta", c.exponents->beta);
          line("gamma", c.exponents->gamma);
          line("delta", c.exponents->delta);
          if (c.exponents->omega) line("omega", c.exponents->omega);
        }
        if (!c.free_params.empty()) {
          *sink << "free:";
          for (const auto& f : c.free_params) *sink << ' ' << f;
          *sink << '\n';
        }
        if (!c.reason.empty()) *sink << "reason: " << c.reason << '\n';
      }
      return kOk;
    }

    if (erratum_cmd->parsed()) {
      const Format fmt = parse_format(erratum_format, {Format::kText, Format::kJson});
      const auto rep = verify::erratum_report(erratum_spacings);
      Sink sink(output, out);
      if (fmt == Format::kJson) {
        *sink << json(rep).dump(1) << '\n';
      } else {
        for (const auto& e : rep.entries) {
          *sink << (e.verdict ? "PASS " : "FAIL ") << e.id << " (" << e.family << ", " << e.equation << ")\n";
          for (const auto& l : e.levels)
            *sink << "  h=" << l.spacing << " printed=" << l.printed << " corrected=" << l.corrected << '\n';
        }
      }
      return rep.all_pass() ? kOk : kVerificationFailed;
    }
  } catch (const ParameterError& e) {
    err << "eulerheat: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "eulerheat: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "eulerheat: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  err << "eulerheat: no command\n";
  return kConfigError;
}

}  // namespace eulerheat::cli
