#ifndef SIMPSON_RATIONAL_HPP
#define SIMPSON_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace simpson {

// All numeric quantities are exact rationals. Equality and ordering are
// exact; there is no tolerance anywhere in the system.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses an integer string ("42", "-7"), a finite decimal string
/// ("0.25", "1095.5") or a fraction string ("19/9") into an exact rational.
Rational parse_rational(std::string_view text);

/// Renders as "num" when the denominator is 1, otherwise "num/den".
std::string to_fraction_string(const Rational& r);

/// Advisory decimal approximation; never used in any comparison.
double approx(const Rational& r);

}  // namespace simpson

#endif
