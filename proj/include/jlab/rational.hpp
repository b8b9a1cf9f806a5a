#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "jlab/errors.hpp"

namespace jlab {

// Exact arithmetic everywhere on the production path. cpp_rational keeps
// gcd(num, den) = 1 and den > 0 after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "p" for integers, "p/q" otherwise. Never a decimal.
inline std::string rat_to_string(const BigRat& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Accepts "p" or "p/q" with optional leading '-'.
inline BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        require(den != 0, "rational with zero denominator: " + s);
        return BigRat(num, den);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("malformed rational: " + s);
    }
}

inline BigInt floor_rat(const BigRat& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& v) {
    ensure(fits_int64(v), "integer out of int64 range: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline std::uint64_t to_uint64(const BigInt& v) {
    ensure(v >= 0 && v <= std::numeric_limits<std::uint64_t>::max(),
           "integer out of uint64 range: " + v.str());
    return static_cast<std::uint64_t>(v);
}

} // namespace jlab
