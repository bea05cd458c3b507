#include "tuplerank/monotone_order.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tuplerank {

Dimension::Dimension(std::size_t k) : k_(k) {
    if (k == 0) {
        throw std::invalid_argument("dimension must be at least 1");
    }
}

Tuple::Tuple(std::vector<Integer> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("tuple must have at least one coordinate");
    }
    if (std::any_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c < 0; })) {
        throw std::invalid_argument("tuple coordinates must be nonnegative");
    }
}

Tuple::Tuple(std::initializer_list<Integer> coords) : Tuple(std::vector<Integer>(coords)) {}

MonotoneTuple::MonotoneTuple(Tuple t) : tuple_(std::move(t)) {
    if (!is_monotone(tuple_)) {
        throw std::invalid_argument("tuple coordinates must be nonincreasing");
    }
}

MonotoneTuple::MonotoneTuple(std::initializer_list<Integer> coords) : MonotoneTuple(Tuple(coords)) {}

std::strong_ordering lex_cmp(const Tuple& m, const Tuple& n) {
    if (m.size() != n.size()) {
        throw std::invalid_argument("lex_cmp: dimension mismatch");
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != n[i]) {
            return m[i] < n[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

bool is_monotone(const Tuple& n) noexcept {
    return std::is_sorted(n.coords().begin(), n.coords().end(), std::greater<>{});
}

MonotoneTuple minimum(Dimension k) {
    return MonotoneTuple(Tuple(std::vector<Integer>(k.value(), Integer(0))), MonotoneTuple::Trusted{});
}

void advance(MonotoneTuple& m) {
    auto& c = m.raw();
    std::size_t r = c.size() - 1;
    while (r > 0 && c[r - 1] == c[r]) {
        --r;
    }
    ++c[r];
    std::fill(c.begin() + static_cast<std::ptrdiff_t>(r) + 1, c.end(), Integer(0));
}

MonotoneTuple successor(const MonotoneTuple& m) {
    MonotoneTuple next = m;
    advance(next);
    return next;
}

Tuple fold(const MonotoneTuple& n) {
    const auto& c = n.coords();
    const std::size_t k = c.size();
    std::vector<Integer> out(k);
    out[0] = c[k - 1];
    for (std::size_t j = 1; j < k; ++j) {
        out[j] = c[k - 1 - j] - c[k - j];
    }
    return Tuple(std::move(out));
}

MonotoneTuple unfold(const Tuple& n) {
    const std::size_t k = n.size();
    std::vector<Integer> out(k);
    out[k - 1] = n[0];
    for (std::size_t i = k - 1; i-- > 0;) {
        out[i] = out[i + 1] + n[k - 1 - i];
    }
    return MonotoneTuple(Tuple(std::move(out)), MonotoneTuple::Trusted{});
}

}  // namespace tuplerank
