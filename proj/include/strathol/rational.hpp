#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "strathol/errors.hpp"

namespace strathol {

// All arithmetic in this library is exact. Membership predicates sit on closed
// boundaries (equalities occur at barycenters), so floating point is never used.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "7", "-7", "3/4", "-3/4".
inline Rat rat_from_string(const std::string& text) {
    auto parse_int = [&](const std::string& part) -> Int {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw ParseError("bad rational '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad rational '" + text + "'");
        return Int(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace strathol
