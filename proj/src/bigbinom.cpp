#include "tuplerank/bigbinom.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tuplerank {

namespace {

constexpr auto kWordMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t loop_count(const Integer& y) {
    if (y > kWordMax) {
        throw std::length_error("binomial coefficient too large to represent");
    }
    return static_cast<std::uint64_t>(y);
}

}  // namespace

namespace detail {

Integer binom_natural(const Integer& n, std::size_t d) {
    if (n < d) {
        return 0;
    }
    // binom(n, d) == binom(n, n-d); loop over the shorter side.
    Integer other = n - d;
    if (other < d) {
        d = static_cast<std::size_t>(loop_count(other));
    }
    Integer result = 1;
    if (n <= kWordMax) {
        const auto top = static_cast<std::uint64_t>(n);
        for (std::uint64_t i = 1; i <= d; ++i) {
            result *= top - d + i;
            result /= i;
        }
        return result;
    }
    Integer factor = n - d;
    for (std::uint64_t i = 1; i <= d; ++i) {
        ++factor;
        result *= factor;
        result /= i;
    }
    return result;
}

}  // namespace detail

Integer binom(const Integer& x, const Integer& y) {
    if (y < 0) {
        return 0;
    }
    if (x < 0) {
        // Upper negation; takes precedence over the x < y zero case.
        const Integer n = y - x - 1;
        const Integer shorter = (n - y < y) ? Integer(n - y) : y;
        Integer value = detail::binom_natural(n, static_cast<std::size_t>(loop_count(shorter)));
        return bit_test(y, 0) ? Integer(-value) : value;
    }
    if (x < y) {
        return 0;
    }
    const Integer shorter = (x - y < y) ? Integer(x - y) : y;
    return detail::binom_natural(x, static_cast<std::size_t>(loop_count(shorter)));
}

Integer parallel_sum(const Integer& x, const Integer& y) {
    if (y < 0) {
        throw std::invalid_argument("parallel_sum: upper index must be nonnegative");
    }
    Integer total = 0;
    for (Integer i = 0; i <= y; ++i) {
        total += binom(i + x - 1, i);
    }
    return total;
}

Integer compositions_count(const Integer& m, const Integer& j) {
    if (m < 1) {
        throw std::invalid_argument("compositions_count: tuple length must be positive");
    }
    if (j < 0) {
        return 0;
    }
    return binom(m - 1 + j, j);
}

}  // namespace tuplerank
