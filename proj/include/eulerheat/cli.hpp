#pragma once

// Command-line front end. Subcommands: eval, verify, simulate, collapse,
// constraints, erratum. Exit codes: 0 success, 1 verification failure,
// 2 configuration error, 3 numerical failure.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "eulerheat/analytic.hpp"
#include "eulerheat/eos.hpp"

namespace eulerheat::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kConfigError = 2, kNumericalFailure = 3 };

/// Family by name with parameter overrides; unknown names or parameters throw ParameterError.
SolutionFamily make_family(const std::string& name, const std::map<std::string, double>& params);
/// Names: polytropic, quadratic, linear, virial, vdw.
EosModel make_eos(const std::string& name, const std::map<std::string, double>& params);

/// Header x,t,rho,v,T; absent values are empty fields; %.17g.
void write_csv(std::ostream& os, const std::vector<EvalRow>& rows);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerheat::cli
