#pragma once

#include "tuplerank/integer.hpp"
#include "tuplerank/monotone_order.hpp"

#include <iterator>
#include <string>
#include <string_view>

namespace tuplerank {

/// Position of a tuple in its enumeration. Never negative.
using Rank = Integer;

/// Rank of a monotone tuple: sum over i of binom(k-i+m_i, k-i+1).
/// Equals the number of monotone tuples lexicographically below `m`.
Rank phi(const MonotoneTuple& m);

/// Inverse of `phi`. Throws std::invalid_argument when x < 0.
///
/// Substituting c_i = k-i+m_i turns the rank into a combinadic
/// sum binom(c_1, k) + binom(c_2, k-1) + ... + binom(c_k, 1) with
/// c_1 > c_2 > ... > c_k >= 0, so each c_i is recovered greedily as the
/// largest value whose binomial still fits in the remainder.
MonotoneTuple unrank_phi(const Rank& x, Dimension k);

/// Rank of an arbitrary tuple: sum over i of binom(i-1+n_1+...+n_i, i).
/// Equals phi(unfold(n)).
Rank psi(const Tuple& n);

/// Inverse of `psi`: fold(unrank_phi(x, k)).
Tuple unrank_psi(const Rank& x, Dimension k);

enum class Space {
    monotone_cone,  ///< yields the monotone tuples in lexicographic order
    full_space,     ///< yields the fold of each, covering all of N^k
};

/// Serializable position of an Enumerator.
struct StreamSnapshot {
    Space space;
    Rank index;
    MonotoneTuple state;

    /// Text form "<cone|full>;<index>;<c1>,<c2>,...".
    std::string serialize() const;
    /// Throws std::invalid_argument on malformed input or when `state` is
    /// not the element at `index`.
    static StreamSnapshot parse(std::string_view text);
};

/// Unbounded stream of tuples in rank order: the element at position x has
/// rank x. Single owner; copy to fork an independent stream.
class Enumerator {
public:
    explicit Enumerator(Dimension k, Space space = Space::full_space, const Rank& start = 0);
    explicit Enumerator(const StreamSnapshot& snapshot);

    const Tuple& current() const noexcept {
        return space_ == Space::monotone_cone ? state_.tuple() : folded_;
    }
    const Rank& index() const noexcept { return index_; }
    Space space() const noexcept { return space_; }
    Dimension dimension() const { return state_.dimension(); }

    void advance();

    StreamSnapshot snapshot() const { return StreamSnapshot{space_, index_, state_}; }

    /// Input iterator over the stream; the range never ends.
    class iterator {
    public:
        using iterator_concept = std::input_iterator_tag;
        using value_type = Tuple;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Enumerator* owner) : owner_(owner) {}

        const Tuple& operator*() const { return owner_->current(); }
        iterator& operator++() {
            owner_->advance();
            return *this;
        }
        void operator++(int) { owner_->advance(); }

    private:
        Enumerator* owner_ = nullptr;
    };

    iterator begin() { return iterator(this); }
    std::unreachable_sentinel_t end() const noexcept { return std::unreachable_sentinel; }

private:
    Space space_;
    Rank index_;
    MonotoneTuple state_;
    Tuple folded_;
};

}  // namespace tuplerank
