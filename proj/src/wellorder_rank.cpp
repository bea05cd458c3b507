#include "tuplerank/wellorder_rank.hpp"

#include <utility>

namespace tuplerank {

OrderSpec<Integer> naturals_spec(std::size_t probe_count) {
    OrderSpec<Integer> spec{
        [](const Integer& a, const Integer& b) {
            const int c = a.compare(b);
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        },
        Integer(0),
        [](const Integer& x) { return Integer(x + 1); },
    };
    spec.probes.reserve(probe_count);
    for (std::size_t i = 0; i < probe_count; ++i) {
        spec.probes.emplace_back(i);
    }
    return spec;
}

OrderSpec<MonotoneTuple> monotone_cone_spec(Dimension k, std::optional<std::size_t> probe_bound) {
    OrderSpec<MonotoneTuple> spec{
        [](const MonotoneTuple& a, const MonotoneTuple& b) { return lex_cmp(a, b); },
        minimum(k),
        [](const MonotoneTuple& m) { return successor(m); },
    };
    if (probe_bound) {
        spec.probes = monotone_box(k, *probe_bound);
    }
    return spec;
}

namespace {

void extend(std::vector<Integer>& prefix, std::size_t k, std::size_t cap, std::vector<MonotoneTuple>& out) {
    if (prefix.size() == k) {
        out.emplace_back(Tuple(prefix));
        return;
    }
    for (std::size_t v = 0; v <= cap; ++v) {
        prefix.emplace_back(v);
        extend(prefix, k, v, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MonotoneTuple> monotone_box(Dimension k, std::size_t bound) {
    std::vector<MonotoneTuple> out;
    std::vector<Integer> prefix;
    prefix.reserve(k.value());
    extend(prefix, k.value(), bound, out);
    return out;
}

}  // namespace tuplerank
