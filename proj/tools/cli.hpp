#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperslice/json_io.hpp"

namespace hyperslice::cli {

enum ExitCode { kOk = 0, kDomainError = 2, kParseError = 3 };

/// Runs one subcommand; output goes to out, JSON error objects to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Quotes bare identifiers so that "[[0,1,i]]" parses as JSON.
std::string quote_identifiers(const std::string& src);

/// Parses "[[alpha, beta, J], ...]"; J is a basis name, dim coefficients or dim-1 imaginary coefficients.
SlicePoint parse_point(const std::string& src, const Algebra& alg, double tol);

/// Element from a basis name, a coefficient array, or a coefficient string "(r name c ...)".
Element parse_element(const Json& j, const Algebra& alg, bool imaginary_only_allowed);

/// Tolerance from HYPERSLICE_TOL, or the library default.
double default_tolerance();

}  // namespace hyperslice::cli
