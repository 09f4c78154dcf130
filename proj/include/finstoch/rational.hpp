#ifndef FINSTOCH_RATIONAL_HPP
#define FINSTOCH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace finstoch {

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; every probability in the library is one of these.
using Rational = boost::multiprecision::cpp_rational;

using Integer = boost::multiprecision::cpp_int;

inline bool is_probability(const Rational& r) {
    return r >= 0 && r <= 1;
}

/// Parses "n" or "n/d" where n and d are non-negative decimal integers.
/// The result is reduced to lowest terms. Throws std::invalid_argument on
/// anything else (sign characters, hex, whitespace, zero denominator).
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument("bad rational \"" + std::string(text) + "\": " + why);
    };
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (num_part.empty() || den_part.empty())
        fail("empty numerator or denominator");
    for (std::string_view part : {num_part, den_part})
        for (char c : part)
            if (c < '0' || c > '9')
                fail("only decimal digits and a single '/' are allowed");
    const Integer num{std::string(num_part)};
    const Integer den{std::string(den_part)};
    if (den == 0)
        fail("zero denominator");
    return Rational(num, den);
}

/// Lowest-terms rendering: "3/4", integers as "3" (no "/1" suffix).
inline std::string format_rational(const Rational& r) {
    return r.str();
}

} // namespace finstoch

#endif // FINSTOCH_RATIONAL_HPP
