#include "streamsub/rational.hpp"

#include <cctype>

#include "streamsub/errors.hpp"

namespace streamsub {

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e > 0) return Rat(0);
    throw PreconditionError("rat_pow: zero base with negative exponent");
  }
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Rat out(1);
  while (n > 0) {  // square-and-multiply
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw PreconditionError("parse_rat: empty string");
  auto bad = [&] { throw PreconditionError("parse_rat: cannot parse '" + text + "'"); };
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (num.empty() || den.empty()) bad();
    try {
      BigInt n(num), d(den);
      if (d == 0) throw PreconditionError("parse_rat: zero denominator in '" + text + "'");
      return Rat(n, d);
    } catch (const std::runtime_error&) {
      bad();
    }
  }
  std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) bad();
    for (char c : whole)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = BigInt(whole) * scale + BigInt(frac);
    if (neg) n = -n;
    return Rat(n, scale);
  }
  try {
    return Rat(BigInt(text));
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0);  // unreachable
}

std::string rat_to_string(const Rat& r) {
  std::string n = numerator(r).str();
  if (denominator(r) == 1) return n;
  return n + "/" + denominator(r).str();
}

}  // namespace streamsub
