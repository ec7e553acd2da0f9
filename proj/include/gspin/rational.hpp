#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gspin {

/// Exact rational scalar. Expression templates are off so the type behaves
/// like a plain value inside Eigen and standard containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Always "p/q", including integers ("18/1").
std::string to_string(const Rational& value);

/// Accepts "p/q" or a plain integer.
Rational parse_rational(std::string_view text);

}  // namespace gspin
