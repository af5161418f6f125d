#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace meshmat {

// Exact arithmetic scalars used throughout the library.  All spectral and
// counting identities are checked in these types; doubles appear only in the
// eigenvalue estimates of flux.hpp.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

// Converts, throwing away nothing: callers must have checked is_integral.
inline Int to_integer(const Rat& q) { return numerator(q) / denominator(q); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline std::string to_string(const Int& x) { return x.str(); }

// Rationals print as "p/q", integers as plain decimals.
inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace meshmat
