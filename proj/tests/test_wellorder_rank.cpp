#include "tuplerank/wellorder_rank.hpp"

#include "tuplerank/rank_codec.hpp"

#include <doctest.h>

using namespace tuplerank;

namespace {

std::strong_ordering natural_order(const Integer& a, const Integer& b) {
    return a < b ? std::strong_ordering::less : (b < a ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// (N, <) whose next jumps from 5 straight to 7.
OrderSpec<Integer> skipping_spec() {
    auto spec = naturals_spec(200);
    spec.next = [](const Integer& x) { return x == 5 ? Integer(7) : Integer(x + 1); };
    return spec;
}

// 0 < 1 < 2 < 3 < 4 as usual, except that 4 compares below 0.
OrderSpec<Integer> cyclic_spec(std::size_t probes = 0) {
    auto spec = naturals_spec(probes);
    spec.compare = [](const Integer& a, const Integer& b) {
        if (a == 4 && b == 0) {
            return std::strong_ordering::less;
        }
        if (a == 0 && b == 4) {
            return std::strong_ordering::greater;
        }
        return natural_order(a, b);
    };
    return spec;
}

// (N, <) walked from 1 instead of 0.
OrderSpec<Integer> late_start_spec() {
    auto spec = naturals_spec(200);
    spec.first = 1;
    return spec;
}

}  // namespace

TEST_CASE("rank_by_counting: examples") {
    const auto naturals = naturals_spec();
    CHECK(rank_by_counting(naturals, Integer(7), 100) == Integer(7));
    CHECK(rank_by_counting(naturals, Integer(0), 0) == Integer(0));

    const auto cone = monotone_cone_spec(Dimension(2));
    CHECK(rank_by_counting(cone, MonotoneTuple{2, 1}, 100) == phi(MonotoneTuple{2, 1}));
    CHECK(rank_by_counting(cone, MonotoneTuple{2, 1}, 100) == Integer(4));
    CHECK(rank_by_counting(cone, cone.first, 0) == Integer(0));
}

TEST_CASE("rank_by_counting: not reached") {
    const auto naturals = naturals_spec();
    CHECK(rank_by_counting(naturals, Integer(7), 6) == std::nullopt);
    CHECK(rank_by_counting(naturals, Integer(7), 7) == Integer(7));
    // 6 is never visited by the skipping chain.
    CHECK(rank_by_counting(skipping_spec(), Integer(6), 1000) == std::nullopt);
}

TEST_CASE("rank_by_counting agrees with phi on the monotone cone") {
    for (std::size_t kv = 1; kv <= 4; ++kv) {
        const auto spec = monotone_cone_spec(Dimension(kv));
        MonotoneTuple m = spec.first;
        std::optional<Integer> previous;
        for (int x = 0; x < 2000; ++x) {
            const auto rank = rank_by_counting(spec, m, 2000);
            REQUIRE(rank.has_value());
            REQUIRE(*rank == phi(m));
            if (previous) {
                REQUIRE(*previous < *rank);
            }
            previous = rank;
            m = spec.next(m);
        }
    }
}

TEST_CASE("verify_prefix_bijection: well-formed specs pass") {
    CHECK(verify_prefix_bijection(naturals_spec(), 100).passed());
    CHECK(verify_prefix_bijection(naturals_spec(100), 100).passed());
    const auto report = verify_prefix_bijection(monotone_cone_spec(Dimension(3), 21), 2000);
    CHECK(report.passed());
    CHECK(report.checked == 2000);
}

TEST_CASE("verify_prefix_bijection: broken specs fail at the first violation") {
    const auto skipping = verify_prefix_bijection(skipping_spec(), 100);
    CHECK(skipping.violation == Violation::rank_mismatch);
    CHECK(skipping.index == 6);
    CHECK(skipping.checked == 7);

    const auto cyclic = verify_prefix_bijection(cyclic_spec(), 100);
    CHECK(cyclic.violation == Violation::compare_inconsistent);
    CHECK(cyclic.index == 4);
    // With probes, 4 is already seen below the first element.
    const auto cyclic_probed = verify_prefix_bijection(cyclic_spec(200), 100);
    CHECK(cyclic_probed.violation == Violation::rank_mismatch);
    CHECK(cyclic_probed.index == 0);

    const auto late = verify_prefix_bijection(late_start_spec(), 100);
    CHECK(late.violation == Violation::rank_mismatch);
    CHECK(late.index == 0);

    auto reflexive = naturals_spec();
    reflexive.compare = [](const Integer& a, const Integer& b) {
        return a == 3 && b == 3 ? std::strong_ordering::less : natural_order(a, b);
    };
    const auto bad = verify_prefix_bijection(reflexive, 10);
    CHECK(bad.violation == Violation::compare_not_irreflexive);
    CHECK(bad.index == 3);
    CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("monotone_box lists exactly the bounded monotone tuples") {
    const auto box = monotone_box(Dimension(3), 4);
    CHECK(box.size() == 35);  // binom(4 + 3, 3)
    for (std::size_t i = 1; i < box.size(); ++i) {
        CHECK(lex_cmp(box[i - 1], box[i]) == std::strong_ordering::less);
    }
    CHECK(monotone_box(Dimension(1), 0).size() == 1);
}
