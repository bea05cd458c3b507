#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tuplerank {

/// Exact signed integer of unbounded width. Coordinates and ranks are kept
/// nonnegative by the types that hold them.
using Integer = boost::multiprecision::cpp_int;

/// Parses a canonical nonnegative decimal: digits only, no sign, no leading
/// zeros except the literal "0". Throws std::invalid_argument otherwise.
Integer parse_natural(std::string_view text);

/// Canonical decimal rendering.
std::string to_decimal(const Integer& value);

}  // namespace tuplerank
