#include "tuplerank/selftest.hpp"

#include "tuplerank/rank_codec.hpp"
#include "tuplerank/wellorder_rank.hpp"


namespace tuplerank {

namespace {

std::string show(const Tuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i ? "," : "") + to_decimal(t[i]);
    }
    return out + ")";
}

PropertyResult fail(PropertyResult r, const std::string& what) {
    r.passed = false;
    r.counterexample = what;
    return r;
}

PropertyResult oracle_equivalence(Dimension k, std::size_t count, bool inject_fault) {
    PropertyResult r{"oracle-equivalence k=" + std::to_string(k.value()), true, {}};
    MonotoneTuple m = minimum(k);
    for (std::size_t x = 0; x < count; ++x) {
        Rank rank = phi(m);
        if (inject_fault && x == count / 2) {
            ++rank;
        }
        if (rank != x) {
            return fail(r, "phi" + show(m.tuple()) + " = " + to_decimal(rank) + ", expected " + std::to_string(x));
        }
        MonotoneTuple decoded = unrank_phi(x, k);
        if (decoded != m) {
            return fail(r, "unrank_phi(" + std::to_string(x) + ") = " + show(decoded.tuple()) + ", expected " +
                               show(m.tuple()));
        }
        advance(m);
    }
    return r;
}

PropertyResult round_trip(Dimension k, std::size_t count) {
    PropertyResult r{"round-trip k=" + std::to_string(k.value()), true, {}};
    Enumerator stream(k, Space::full_space);
    for (std::size_t x = 0; x < count; ++x, stream.advance()) {
        const Tuple& n = stream.current();
        if (psi(n) != x) {
            return fail(r, "psi" + show(n) + " = " + to_decimal(psi(n)) + ", expected " + std::to_string(x));
        }
        if (unrank_psi(x, k) != n) {
            return fail(r, "unrank_psi(" + std::to_string(x) + ") != " + show(n));
        }
        if (fold(unfold(n)) != n) {
            return fail(r, "fold(unfold" + show(n) + ") differs");
        }
    }
    return r;
}

PropertyResult successor_coherence(Dimension k, std::size_t count) {
    PropertyResult r{"successor-coherence k=" + std::to_string(k.value()), true, {}};
    MonotoneTuple m = minimum(k);
    Rank rank = 0;
    for (std::size_t x = 0; x < count; ++x) {
        MonotoneTuple next = successor(m);
        Rank next_rank = phi(next);
        if (next_rank != rank + 1 || lex_cmp(m, next) != std::strong_ordering::less) {
            return fail(r, "successor" + show(m.tuple()) + " = " + show(next.tuple()) + " has rank " +
                               to_decimal(next_rank) + ", expected " + to_decimal(rank + 1));
        }
        m = std::move(next);
        rank = std::move(next_rank);
    }
    return r;
}

PropertyResult prefix_bijection(Dimension k, std::size_t count) {
    PropertyResult r{"counting-rank-prefix k=" + std::to_string(k.value()), true, {}};
    // Probes must cover the down-set of the last walked element, which is
    // bounded coordinate-wise by its first coordinate.
    const auto last = unrank_phi(count - 1, k);
    const auto bound = static_cast<std::size_t>(last[0]);
    const auto report = verify_prefix_bijection(monotone_cone_spec(k, bound), count);
    if (!report.passed()) {
        return fail(r, report.detail);
    }
    return r;
}

}  // namespace

std::vector<PropertyResult> run_selftest(const SelftestOptions& options) {
    std::vector<PropertyResult> results;
    for (std::size_t kv = 1; kv <= options.k_max.value(); ++kv) {
        const Dimension k(kv);
        results.push_back(oracle_equivalence(k, options.count, options.inject_fault));
        results.push_back(round_trip(k, options.count));
        results.push_back(successor_coherence(k, options.count));
        results.push_back(prefix_bijection(k, options.count));
    }
    return results;
}

}  // namespace tuplerank
