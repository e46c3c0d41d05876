#include "eulerheat/report_json.hpp"

namespace eulerheat {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const Rational& r) { j = json{{"num", r.num()}, {"den", r.den()}, {"text", r.str()}}; }

void to_json(json& j, const Exponents<Rational>& e) {
  j = json{{"alpha", optional_json(e.alpha)},
           {"beta", optional_json(e.beta)},
           {"gamma", optional_json(e.gamma)},
           {"delta", optional_json(e.delta)},
           {"omega", optional_json(e.omega)}};
}

void to_json(json& j, const Exponents<double>& e) {
  j = json{{"alpha", optional_json(e.alpha)},
           {"beta", optional_json(e.beta)},
           {"gamma", optional_json(e.gamma)},
           {"delta", optional_json(e.delta)},
           {"omega", optional_json(e.omega)}};
}

void to_json(json& j, const ConstraintResult& c) {
  j = json{{"feasible", c.feasible},
           {"exponents", c.exponents ? json(*c.exponents) : json(nullptr)},
           {"free_params", c.free_params},
           {"reason", c.reason},
           {"continuity_integrable", c.continuity_integrable}};
}

void to_json(json& j, const EvalRow& row) {
  j = json{{"x", row.x}, {"t", row.t}, {"rho", row.rho}, {"v", optional_json(row.v)}, {"T", optional_json(row.T)}};
}

namespace verify {

void to_json(json& j, const Region& r) {
  j = json{{"x_lo", r.x_lo}, {"x_hi", r.x_hi}, {"t_lo", r.t_lo}, {"t_hi", r.t_hi}};
}

void to_json(json& j, const Norms& n) { j = json{{"linf", n.linf}, {"l2", n.l2}}; }

void to_json(json& j, const ResidualReport& r) {
  json eqs = json::object();
  for (std::size_t i = 0; i < r.eq_names.size(); ++i)
    eqs[r.eq_names[i]] = json{{"linf", r.norms[i].linf}, {"l2", r.norms[i].l2},
                              {"roundoff_floor", i < r.roundoff_floor.size() ? r.roundoff_floor[i] : 0.0}};
  j = json{{"family", r.family},
           {"mode", r.mode == FormulaVariant::kCorrected ? "corrected" : "as_printed"},
           {"norms", eqs},
           {"dx", r.dx},
           {"dt", r.dt},
           {"region", r.region},
           {"order_estimate", optional_json(r.order_estimate)},
           {"momentum_defect_deviation", optional_json(r.momentum_defect_deviation)}};
}

void to_json(json& j, const OdeReport& r) {
  json eqs = json::object();
  for (std::size_t i = 0; i < r.eq_names.size(); ++i) eqs[r.eq_names[i]] = r.sup[i];
  j = json{{"family", r.family},
           {"mode", r.mode == FormulaVariant::kCorrected ? "corrected" : "as_printed"},
           {"sup", eqs},
           {"lo", r.lo},
           {"hi", r.hi},
           {"n_samples", r.n_samples}};
}

void to_json(json& j, const CollapseReport& r) {
  json fields = json::object();
  for (const auto& [name, dev] : r.per_field) fields[name] = dev;
  j = json{{"times", r.times},
           {"max_pairwise_deviation", r.max_pairwise_deviation},
           {"exponents_used", r.exponents_used},
           {"per_field", fields}};
}

void to_json(json& j, const FrontFit& f) {
  j = json{{"exponent", f.exponent},      {"amplitude", f.amplitude}, {"fit_residual", f.fit_residual},
           {"front_moved", f.front_moved}, {"t1", f.t1},               {"position", f.position}};
}

void to_json(json& j, const ErratumLevel& l) {
  j = json{{"spacing", l.spacing},
           {"printed", l.printed},
           {"corrected", l.corrected},
           {"printed_fails", l.printed_fails},
           {"corrected_passes", l.corrected_passes}};
}

void to_json(json& j, const ErratumEntry& e) {
  j = json{{"id", e.id},
           {"family", e.family},
           {"equation", e.equation},
           {"description", e.description},
           {"forms_coincide", e.forms_coincide},
           {"expected_printed_residual", optional_json(e.expected_printed_residual)},
           {"corrected_tol", e.corrected_tol},
           {"printed_tol", e.printed_tol},
           {"levels", e.levels},
           {"verdict", e.verdict}};
}

void to_json(json& j, const ErratumReport& r) { j = json{{"entries", r.entries}, {"all_pass", r.all_pass()}}; }

}  // namespace verify

namespace acceptance {

void to_json(json& j, const CriterionResult& c) {
  j = json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}};
}

}  // namespace acceptance

}  // namespace eulerheat
