#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "netconv/directed_set.hpp"
#include "netconv/element.hpp"

namespace netconv {

// Finite truncation used by every estimator.  `horizon` bounds the elements
// considered at all; `frontier` bounds the base points of sup/inf passes.
// `refinement` is an ordered ladder of (frontier, horizon) pairs used for
// convergence diagnostics; the last pair always equals (frontier, horizon).
//
// Estimators never enumerate more than the sampling caps allow: when a
// frontier or a truncated up-set is larger than its cap, a deterministic
// evenly spaced subsample (always keeping the first and last element in
// lexicographic order) is used instead.
struct TruncationPolicy {
    i64 horizon = 0;
    i64 frontier = 0;
    std::vector<std::pair<i64, i64>> refinement; // (frontier, horizon) pairs
    i64 element_cap = 5'000'000;
    i64 frontier_sample_cap = 4096;
    i64 upset_sample_cap = 2048;
    // When set, the estimators use exactly these base points.
    std::optional<std::vector<Element>> frontier_override;

    // Desk-scale default: frontier = horizon/2 and a two-step refinement
    // ladder at half and full scale.
    static TruncationPolicy desk(i64 horizon) {
        TruncationPolicy p;
        p.horizon = horizon;
        p.frontier = std::max<i64>(1, horizon / 2);
        i64 h1 = std::max<i64>(1, horizon / 2);
        i64 f1 = std::max<i64>(1, h1 / 2);
        if (h1 < horizon) p.refinement.push_back({f1, h1});
        p.refinement.push_back({p.frontier, p.horizon});
        return p;
    }

    // Single-step policy with explicit frontier bound.
    static TruncationPolicy single(i64 frontier, i64 horizon) {
        TruncationPolicy p;
        p.horizon = horizon;
        p.frontier = frontier;
        p.refinement.push_back({frontier, horizon});
        return p;
    }

    void validate() const {
        if (horizon < 1) throw std::invalid_argument("policy: horizon must be >= 1");
        if (frontier < 1 || frontier > horizon)
            throw std::invalid_argument("policy: frontier must satisfy 1 <= F <= H");
        if (refinement.empty())
            throw std::invalid_argument("policy: refinement ladder must not be empty");
        for (std::size_t i = 0; i < refinement.size(); ++i) {
            auto [f, h] = refinement[i];
            if (f < 1 || f > h) throw std::invalid_argument("policy: refinement pair out of range");
            if (i + 1 < refinement.size() && h >= refinement[i + 1].second)
                throw std::invalid_argument("policy: refinement horizons must increase");
        }
        if (refinement.back() != std::make_pair(frontier, horizon))
            throw std::invalid_argument("policy: last refinement pair must be (frontier, horizon)");
    }
};

// Deterministic index subsample: all indices when count <= cap, otherwise cap
// evenly spaced indices that always include 0 and count-1 (just 0 when the
// cap is 1).  The visitor form exists for hot loops that must not allocate.
template <typename Fn>
void for_each_sample_index(i64 count, i64 cap, Fn&& fn) {
    if (count <= 0) return;
    if (cap < 1) cap = 1;
    if (count <= cap) {
        for (i64 i = 0; i < count; ++i) fn(i);
        return;
    }
    if (cap == 1) {
        fn(i64{0});
        return;
    }
    i64 prev = -1;
    for (i64 j = 0; j < cap; ++j) {
        i64 idx = static_cast<i64>(static_cast<__int128>(j) * (count - 1) / (cap - 1));
        if (idx != prev) fn(idx);
        prev = idx;
    }
}

std::vector<i64> sample_indices(i64 count, i64 cap);

// Base points of the estimator at frontier bound F (family-aware; divisor
// leaves contribute only their minimal element).  Sampled to `cap` points.
std::vector<Element> frontier_sample(const DirectedSet& ds, i64 frontier_bound, i64 cap);

} // namespace netconv
