#pragma once

// Ranking by counting predecessors in a linear order with finite down-sets.
//
// Such an order is accessed through its least element, a successor
// function, and a comparator. The rank of an element is the number of
// elements strictly below it; walking the successor chain from the least
// element enumerates those predecessors, so counting along the walk yields
// the rank. Whether the supplied successor really is gap-free is not
// something the walk can prove. verify_prefix_bijection checks it against
// an optional set of independently known elements (probes).
//
// All functions are pure given a pure spec. A spec whose callables share
// mutable state must be synchronized by its owner.

#include "tuplerank/integer.hpp"
#include "tuplerank/monotone_order.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tuplerank {

template <class T>
struct OrderSpec {
    std::function<std::strong_ordering(const T&, const T&)> compare;
    T first;
    std::function<T(const T&)> next;
    /// Elements of the ordered set obtained without `next`. Optional; when
    /// present they must include the whole down-set of every element the
    /// verifier walks.
    std::vector<T> probes{};
};

/// Number of elements strictly below `a`, counted along the successor chain
/// from `spec.first`. Returns std::nullopt ("not reached") when `a` is not
/// met within `budget` applications of `next`, or the walk passes it.
template <class T>
std::optional<Integer> rank_by_counting(const OrderSpec<T>& spec, const T& a, std::size_t budget) {
    Integer below = 0;
    T x = spec.first;
    for (std::size_t steps = 0;; ++steps) {
        const auto c = spec.compare(x, a);
        if (c == std::strong_ordering::equal) {
            return below;
        }
        if (c == std::strong_ordering::greater || steps == budget) {
            return std::nullopt;
        }
        ++below;
        x = spec.next(x);
    }
}

enum class Violation {
    none,
    compare_not_irreflexive,  ///< compare(x, x) != equal
    compare_inconsistent,     ///< chain element not above an earlier one, or compare not antisymmetric
    rank_mismatch,            ///< a probe below the chain element was skipped, or first is not least
};

struct PrefixReport {
    std::size_t checked = 0;  ///< number of chain elements examined
    Violation violation = Violation::none;
    std::size_t index = 0;    ///< chain position of the first violation
    std::string detail;

    bool passed() const noexcept { return violation == Violation::none; }
};

/// Walks the first `n` elements e_0, e_1, ... of the successor chain and
/// checks, in chain order, that
///   - compare is irreflexive on e_j and orders e_i < e_j (and e_j > e_i)
///     for every i < j, so the sampled order matches chain positions;
///   - the number of probes strictly below e_j is exactly j, i.e. the
///     chain skips nothing and starts at the least element.
/// The report names the first chain position where a check fails.
template <class T>
PrefixReport verify_prefix_bijection(const OrderSpec<T>& spec, std::size_t n) {
    PrefixReport report;
    std::vector<T> chain;
    chain.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        chain.push_back(j == 0 ? spec.first : spec.next(chain.back()));
        const T& e = chain.back();
        report.checked = j + 1;

        if (spec.compare(e, e) != std::strong_ordering::equal) {
            report.violation = Violation::compare_not_irreflexive;
            report.index = j;
            report.detail = "element at position " + std::to_string(j) + " does not compare equal to itself";
            return report;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (spec.compare(chain[i], e) != std::strong_ordering::less ||
                spec.compare(e, chain[i]) != std::strong_ordering::greater) {
                report.violation = Violation::compare_inconsistent;
                report.index = j;
                report.detail = "element at position " + std::to_string(j) +
                                " is not strictly above the element at position " + std::to_string(i);
                return report;
            }
        }
        if (!spec.probes.empty()) {
            std::size_t below = 0;
            for (const T& p : spec.probes) {
                if (spec.compare(p, e) == std::strong_ordering::less) {
                    ++below;
                }
            }
            if (below != j) {
                report.violation = Violation::rank_mismatch;
                report.index = j;
                report.detail = "element at position " + std::to_string(j) + " has " + std::to_string(below) +
                                " probes below it";
                return report;
            }
        }
    }
    return report;
}

/// (N, <) with first 0 and next x+1; probes 0..probe_count-1.
OrderSpec<Integer> naturals_spec(std::size_t probe_count = 0);

/// The monotone cone of dimension k under lexicographic order, walked with
/// `successor`. Probes are all monotone tuples with coordinates at most
/// `probe_bound`; none when probe_bound is empty.
OrderSpec<MonotoneTuple> monotone_cone_spec(Dimension k, std::optional<std::size_t> probe_bound = std::nullopt);

/// All monotone tuples of dimension k with coordinates <= bound, built
/// coordinate by coordinate without reference to `successor`.
std::vector<MonotoneTuple> monotone_box(Dimension k, std::size_t bound);

}  // namespace tuplerank
