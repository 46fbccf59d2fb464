#include "slee/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace slee {

std::string format_sig(double x, int digits) {
  if (digits < 1) digits = 1;
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  if (x == 0.0) return "0";

  // Round once via scientific rendering, then place the point by hand so the
  // positional form never double-rounds.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, x);
  const char* e = std::strchr(buf, 'e');
  const int exponent = std::atoi(e + 1);

  const bool negative = buf[0] == '-';
  std::string mantissa;  // the significant digits, no point
  for (const char* p = buf; p != e; ++p)
    if (*p >= '0' && *p <= '9') mantissa.push_back(*p);

  std::string out;
  if (exponent >= 15 || exponent < -4) {
    out = mantissa.substr(0, 1);
    if (mantissa.size() > 1) out += "." + mantissa.substr(1);
    out += "e";
    out += exponent < 0 ? "-" : "+";
    const int a = std::abs(exponent);
    if (a < 10) out += "0";
    out += std::to_string(a);
  } else if (exponent < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa;
  } else if (static_cast<std::size_t>(exponent) + 1 >= mantissa.size()) {
    out = mantissa + std::string(static_cast<std::size_t>(exponent) + 1 - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(exponent) + 1) + "." +
          mantissa.substr(static_cast<std::size_t>(exponent) + 1);
  }
  return negative ? "-" + out : out;
}

}  // namespace slee
