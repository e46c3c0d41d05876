#pragma once

// JSON serialization of reports. Field names follow the C++ member names.

#include <json.hpp>

#include "eulerheat/acceptance.hpp"
#include "eulerheat/analytic.hpp"
#include "eulerheat/eos.hpp"
#include "eulerheat/verify.hpp"

namespace eulerheat {

void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const Exponents<Rational>& e);
void to_json(nlohmann::json& j, const Exponents<double>& e);
void to_json(nlohmann::json& j, const ConstraintResult& c);
void to_json(nlohmann::json& j, const EvalRow& row);

namespace verify {
void to_json(nlohmann::json& j, const Region& r);
void to_json(nlohmann::json& j, const Norms& n);
void to_json(nlohmann::json& j, const ResidualReport& r);
void to_json(nlohmann::json& j, const OdeReport& r);
void to_json(nlohmann::json& j, const CollapseReport& r);
void to_json(nlohmann::json& j, const FrontFit& f);
void to_json(nlohmann::json& j, const ErratumLevel& l);
void to_json(nlohmann::json& j, const ErratumEntry& e);
void to_json(nlohmann::json& j, const ErratumReport& r);
}  // namespace verify

namespace acceptance {
void to_json(nlohmann::json& j, const CriterionResult& c);
}

}  // namespace eulerheat
