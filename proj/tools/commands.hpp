#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "belyi/homology.hpp"

namespace belyi::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kInvalidInput = 2 };

/// Renders Delta (or any wedge class) as "-[E_1]^[E_2] + [E_1]^[E_3]".
std::string format_text(const WedgeClass& w);
/// "-T_1 + T_3 - T_4".
std::string format_text(const TDecomposition& t);
/// "-[E_1]\wedge[E_3]+[E_1]\wedge[E_4]".
std::string format_latex(const WedgeClass& w);
std::string format_latex(const TDecomposition& t);

/// {"basis":"E","c":..,"k":..,"n":..,"object":"delta","terms":[{"coeff":..,"i":..,"j":..}]}.
nlohmann::json delta_document(const CurveParams& p, const WedgeClass& w);
/// Same shape with basis "T" and terms [{"coeff":..,"r":..}].
nlohmann::json delta_document(const CurveParams& p, const TDecomposition& t);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace belyi::cli
