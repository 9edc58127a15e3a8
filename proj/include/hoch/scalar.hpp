#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace hoch {

/// Exact rational scalar, GMP backed. Expression templates are disabled so
/// that `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Reduced form "n" or "n/d" with d > 0.
inline std::string to_string(const Rational &q) { return q.str(); }

} // namespace hoch
