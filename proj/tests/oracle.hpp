#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's rank formulas and successor rule.

#include "tuplerank/integer.hpp"
#include "tuplerank/monotone_order.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using tuplerank::Integer;

// binom(x, y) as the falling factorial x(x-1)...(x-y+1) / y!, which is the
// standard extension to negative x. Zero for y < 0.
inline Integer falling_binom(long long x, long long y) {
    if (y < 0) {
        return 0;
    }
    Integer num = 1;
    Integer den = 1;
    for (long long i = 0; i < y; ++i) {
        num *= Integer(x - i);
        den *= Integer(i + 1);
    }
    return num / den;
}

// Every vector in [0, bound]^k, odometer order.
inline std::vector<std::vector<long long>> box(std::size_t k, long long bound) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> digits(k, 0);
    while (true) {
        out.push_back(digits);
        std::size_t pos = k;
        while (pos > 0 && digits[pos - 1] == bound) {
            digits[--pos] = 0;
        }
        if (pos == 0) {
            return out;
        }
        ++digits[pos - 1];
    }
}

inline bool nonincreasing(const std::vector<long long>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) {
            return false;
        }
    }
    return true;
}

// Monotone tuples of the box, sorted with std::vector's lexicographic <.
// Position in this list is the rank of every entry whose first coordinate
// is at most `bound`, since its whole down-set lies in the box.
inline std::vector<std::vector<long long>> sorted_monotone_box(std::size_t k, long long bound) {
    std::vector<std::vector<long long>> out;
    for (auto& v : box(k, bound)) {
        if (nonincreasing(v)) {
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Least monotone tuple of the box lexicographically above m (the defining
// recursion of the enumeration, evaluated literally). Requires bound > m[0].
inline std::vector<long long> brute_successor(const std::vector<long long>& m, long long bound) {
    std::vector<long long> best;
    for (auto& v : box(m.size(), bound)) {
        if (nonincreasing(v) && m < v && (best.empty() || v < best)) {
            best = v;
        }
    }
    return best;
}

inline tuplerank::Tuple to_tuple(const std::vector<long long>& v) {
    return tuplerank::Tuple(std::vector<Integer>(v.begin(), v.end()));
}

inline tuplerank::MonotoneTuple to_monotone(const std::vector<long long>& v) {
    return tuplerank::MonotoneTuple(to_tuple(v));
}

// Uniform Integer in [0, 10^digits).
inline Integer random_natural(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> digit(0, 9);
    Integer value = 0;
    for (int i = 0; i < digits; ++i) {
        value = value * 10 + digit(rng);
    }
    return value;
}

inline Integer random_below(std::mt19937_64& rng, std::uint64_t bound) {
    return Integer(std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng));
}

}  // namespace oracle
