#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pathhopf/verify.hpp"

namespace pathhopf::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kAxiomViolation = 2 };

enum class Format { text, json };

/// Runs one command line. `args` excludes the program name. Normal output goes to `out`
/// (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text: a header plus one line per axiom. JSON: the same fields, machine readable.
std::string format_report(const VerificationReport& report, Format format);

/// Parses "(p|q)" terms, optionally scaled ("0.5*(0-1|1-2)") and joined by '+'.
/// Each term is sent through the projector. Throws InputError on bad literals.
AlgebraElement parse_element(const WeakHopfAlgebra& alg, const std::string& literal);

/// Fixed notation with 9 decimals; tiny values print as 0.000000000, never as -0.000000000.
std::string format_number(double x);
std::string format_scalar(Scalar c);

}  // namespace pathhopf::cli
