#pragma once

#include <string>

namespace gns {

// "1/3", "-1/6", "2"; falls back to %.10g when no denominator <= max_den fits.
std::string format_fraction(double x, long max_den = 1000);

// Decimal rounding for table output: mode is "up", "down" or "nearest".
double round_to(double x, int digits, const std::string& mode);

// Significant-digit rounding (used for values below 0.01 in the tables).
double round_sig(double x, int sig, const std::string& mode);

// Table convention: 3 decimals, or 3 significant digits below 0.01.
double table_round(double x, const std::string& mode);
std::string table_text(double x, const std::string& mode);

// x as p/q times an optional 1/sqrt(m) and 1/pi, e.g. "1/(6 sqrt(6))", "1/(6 pi)";
// falls back to %.10g.
std::string format_constant(double x);

} // namespace gns
