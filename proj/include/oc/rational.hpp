// SPDX-License-Identifier: Apache-2.0
#ifndef OC_RATIONAL_HPP
#define OC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oc {

// Exact scalars. cpp_rational keeps values reduced with positive denominator,
// which is exactly the canonical form required of every coefficient here.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

inline Rational parse_rational(std::string_view sv) {
    const auto slash = sv.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(sv)));
        Int num{std::string(sv.substr(0, slash))};
        Int den{std::string(sv.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num);
        q /= den; // normalizes sign and reduces
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + std::string(sv) + "\"");
    }
}

} // namespace oc

#endif
