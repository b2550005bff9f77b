#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "pcarr/error.hpp"

namespace pcarr {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Always "p/q", also for integers ("3/1").
inline std::string to_pq(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_pq(std::string_view s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt p(std::string(s.substr(0, slash)));
        BigInt q(std::string(s.substr(slash + 1)));
        if (q == 0) throw Error(Errc::BadFormat, "zero denominator in '" + std::string(s) + "'");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(Errc::BadFormat, "not a rational: '" + std::string(s) + "'");
    }
}

} // namespace pcarr
