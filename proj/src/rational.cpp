#include "gspin/rational.hpp"

#include "gspin/error.hpp"

namespace gspin {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, "not a rational number: '" + std::string(text) + "'");
  }
}

}  // namespace gspin
