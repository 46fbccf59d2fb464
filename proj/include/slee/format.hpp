// format.hpp -- deterministic numeric formatting for reports and the CLI.
#pragma once

#include <string>

namespace slee {

// Renders x with `digits` significant digits. Positional notation in the
// comfortable range, scientific at or above 1e15 and below 1e-4 (and for
// non-finite values, "inf"/"nan" verbatim). Output is locale-independent and
// byte-deterministic.
std::string format_sig(double x, int digits = 12);

}  // namespace slee
