#include "tuplerank/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace tuplerank {

Integer parse_natural(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not a nonnegative decimal: '" + std::string(text) + "'");
    }
    if (text.size() > 1 && text.front() == '0') {
        throw std::invalid_argument("leading zeros are not canonical: '" + std::string(text) + "'");
    }
    return Integer(std::string(text));
}

std::string to_decimal(const Integer& value) { return value.str(); }

}  // namespace tuplerank
