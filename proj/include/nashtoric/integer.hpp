#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace nashtoric {

/// Exact integer used throughout the library. No operation ever rounds.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Number of decimal digits of |v|; digit_count(0) == 1.
std::size_t digit_count(const Int& v);

/// Parses an optionally signed decimal literal. Throws error(errc::bad_input)
/// on anything else, including empty input and stray characters.
Int parse_int(std::string_view text);

std::string to_string(const Int& v);

}  // namespace nashtoric
