#ifndef OPGB_RATIONAL_HPP
#define OPGB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "opgb/errors.hpp"

namespace opgb {

// Exact arithmetic everywhere; no floating point in any computation.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Accepts "p", "-p", "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + text + "': " + e.what());
    }
}

} // namespace opgb

#endif
