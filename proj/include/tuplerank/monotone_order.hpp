#pragma once

#include "tuplerank/integer.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace tuplerank {

/// Arity k of an encoding. Always at least 1.
class Dimension {
public:
    /// Throws std::invalid_argument for k == 0.
    explicit Dimension(std::size_t k);

    std::size_t value() const noexcept { return k_; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    std::size_t k_;
};

/// An element (n_1, ..., n_k) of N^k.
///
/// Coordinates are named 1-based in documentation; `coords()` stores them
/// 0-based, so n_i is `coords()[i - 1]`.
class Tuple {
public:
    /// Throws std::invalid_argument if `coords` is empty or has a negative
    /// entry.
    explicit Tuple(std::vector<Integer> coords);
    Tuple(std::initializer_list<Integer> coords);

    Dimension dimension() const { return Dimension(coords_.size()); }
    std::size_t size() const noexcept { return coords_.size(); }
    const std::vector<Integer>& coords() const noexcept { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    friend class MonotoneTuple;

    std::vector<Integer> coords_;
};

/// A tuple with n_1 >= n_2 >= ... >= n_k: an element of the monotone cone.
class MonotoneTuple {
public:
    /// Throws std::invalid_argument unless `t` is nonincreasing.
    explicit MonotoneTuple(Tuple t);
    MonotoneTuple(std::initializer_list<Integer> coords);

    const Tuple& tuple() const noexcept { return tuple_; }
    Dimension dimension() const { return tuple_.dimension(); }
    std::size_t size() const noexcept { return tuple_.size(); }
    const std::vector<Integer>& coords() const noexcept { return tuple_.coords(); }
    const Integer& operator[](std::size_t i) const { return tuple_[i]; }

    friend bool operator==(const MonotoneTuple&, const MonotoneTuple&) = default;

private:
    struct Trusted {};
    MonotoneTuple(Tuple t, Trusted) : tuple_(std::move(t)) {}
    std::vector<Integer>& raw() noexcept { return tuple_.coords_; }

    friend MonotoneTuple minimum(Dimension k);
    friend MonotoneTuple successor(const MonotoneTuple& m);
    friend MonotoneTuple unfold(const Tuple& n);
    friend void advance(MonotoneTuple& m);
    friend MonotoneTuple unrank_phi(const Integer& x, Dimension k);

    Tuple tuple_;
};

/// Lexicographic order on N^k: the first differing coordinate decides.
/// Throws std::invalid_argument on a dimension mismatch.
std::strong_ordering lex_cmp(const Tuple& m, const Tuple& n);
inline std::strong_ordering lex_cmp(const MonotoneTuple& m, const MonotoneTuple& n) {
    return lex_cmp(m.tuple(), n.tuple());
}

bool is_monotone(const Tuple& n) noexcept;

/// The all-zero tuple, least element of the monotone cone.
MonotoneTuple minimum(Dimension k);

/// Immediate lexicographic successor within the monotone cone. With r the
/// start of the trailing block of equal coordinates,
///   (m_1, ..., m_{r-1}, m_r, ..., m_r) -> (m_1, ..., m_{r-1}, m_r + 1, 0, ..., 0).
MonotoneTuple successor(const MonotoneTuple& m);

/// In-place form of `successor`, used by the enumerators.
void advance(MonotoneTuple& m);

/// (n_1, ..., n_k) -> (n_k, n_{k-1} - n_k, ..., n_1 - n_2).
Tuple fold(const MonotoneTuple& n);

/// Inverse of `fold`: coordinate i is the prefix sum n_1 + ... + n_{k-i+1}.
MonotoneTuple unfold(const Tuple& n);

}  // namespace tuplerank
