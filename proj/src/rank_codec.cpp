#include "tuplerank/rank_codec.hpp"

#include "tuplerank/bigbinom.hpp"

#include <stdexcept>
#include <utility>

namespace tuplerank {

using detail::binom_natural;

Rank phi(const MonotoneTuple& m) {
    const auto& c = m.coords();
    const std::size_t k = c.size();
    Rank total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t degree = k - i;
        total += binom_natural(c[i] + (degree - 1), degree);
    }
    return total;
}

Rank psi(const Tuple& n) {
    Rank total = 0;
    Integer prefix = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        prefix += n[i];
        total += binom_natural(prefix + i, i + 1);
    }
    return total;
}

namespace {

// Largest c in [lo, hi) with binom(c, degree) <= remainder, given
// binom(lo, degree) <= remainder < binom(hi, degree).
Integer bisect_digit(Integer lo, Integer hi, std::size_t degree, const Integer& remainder) {
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (binom_natural(mid, degree) <= remainder) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return lo;
}

}  // namespace

MonotoneTuple unrank_phi(const Rank& x, Dimension k) {
    if (x < 0) {
        throw std::invalid_argument("rank must be nonnegative");
    }
    const std::size_t dim = k.value();
    std::vector<Integer> coords(dim);
    Integer remainder = x;
    Integer previous;  // digit chosen at the previous degree
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t degree = dim - i;
        // binom(degree-1, degree) == 0 always fits.
        Integer lo = degree - 1;
        Integer hi;
        if (i == 0) {
            hi = degree;
            while (binom_natural(hi, degree) <= remainder) {
                lo = hi;
                hi <<= 1;
            }
        } else {
            // The combinadic digits strictly decrease, and
            // remainder < binom(previous, degree) holds after each step.
            hi = previous;
        }
        Integer digit = bisect_digit(std::move(lo), std::move(hi), degree, remainder);
        remainder -= binom_natural(digit, degree);
        coords[i] = digit - (degree - 1);
        previous = std::move(digit);
    }
    return MonotoneTuple(Tuple(std::move(coords)), MonotoneTuple::Trusted{});
}

Tuple unrank_psi(const Rank& x, Dimension k) { return fold(unrank_phi(x, k)); }

Enumerator::Enumerator(Dimension k, Space space, const Rank& start)
    : space_(space), index_(start), state_(unrank_phi(start, k)), folded_(fold(state_)) {}

Enumerator::Enumerator(const StreamSnapshot& snapshot)
    : space_(snapshot.space), index_(snapshot.index), state_(snapshot.state), folded_(fold(state_)) {
    if (phi(state_) != index_) {
        throw std::invalid_argument("snapshot state does not match its index");
    }
}

void Enumerator::advance() {
    tuplerank::advance(state_);
    ++index_;
    if (space_ == Space::full_space) {
        folded_ = fold(state_);
    }
}

std::string StreamSnapshot::serialize() const {
    std::string out = space == Space::monotone_cone ? "cone;" : "full;";
    out += to_decimal(index);
    out += ';';
    const auto& c = state.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += to_decimal(c[i]);
    }
    return out;
}

StreamSnapshot StreamSnapshot::parse(std::string_view text) {
    const auto first = text.find(';');
    const auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
    if (second == std::string_view::npos) {
        throw std::invalid_argument("snapshot: expected '<space>;<index>;<coords>'");
    }
    const auto space_name = text.substr(0, first);
    Space space;
    if (space_name == "cone") {
        space = Space::monotone_cone;
    } else if (space_name == "full") {
        space = Space::full_space;
    } else {
        throw std::invalid_argument("snapshot: unknown space '" + std::string(space_name) + "'");
    }
    Rank index = parse_natural(text.substr(first + 1, second - first - 1));

    std::vector<Integer> coords;
    std::string_view rest = text.substr(second + 1);
    while (true) {
        const auto comma = rest.find(',');
        coords.push_back(parse_natural(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    MonotoneTuple state{Tuple(std::move(coords))};
    if (phi(state) != index) {
        throw std::invalid_argument("snapshot state does not match its index");
    }
    return StreamSnapshot{space, std::move(index), std::move(state)};
}

}  // namespace tuplerank
