#pragma once

#include "tuplerank/integer.hpp"

#include <cstddef>

namespace tuplerank {

/// Binomial coefficient extended to all of Z x Z:
///   0                        if y < 0, or 0 <= x < y
///   x! / (y! (x-y)!)         if x >= y >= 0
///   (-1)^y binom(y-x-1, y)   if x < 0 <= y
/// Exact for every argument pair; evaluated by the multiplicative formula
/// with an exact division after each factor.
Integer binom(const Integer& x, const Integer& y);

/// Sum of binom(i+x-1, i) for i = 0..y. Equal to binom(x+y, y).
/// Throws std::invalid_argument when y < 0.
Integer parallel_sum(const Integer& x, const Integer& y);

/// Number of m-tuples of naturals whose coordinates sum to j, i.e.
/// binom(m-1+j, j). Zero for negative j.
/// Throws std::invalid_argument when m < 1.
Integer compositions_count(const Integer& m, const Integer& j);

namespace detail {

// binom(n, d) for n >= 0; the hot path of ranking and unranking.
Integer binom_natural(const Integer& n, std::size_t d);

}  // namespace detail

}  // namespace tuplerank
