#ifndef GACT_RATIONAL_HPP
#define GACT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gact {

using BigInt = boost::multiprecision::cpp_int;
// Always held in canonical form (lowest terms, positive denominator);
// the backend normalizes after every operation.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) {
  return Rat(BigInt(num)) / Rat(BigInt(den));
}

// "a" or "a/b", optional leading sign
Rat parse_rational(const std::string& text);

std::string rational_to_string(const Rat& value);

// -1 / 0 / +1
int rat_cmp(const Rat& a, const Rat& b);

}  // namespace gact

#endif
