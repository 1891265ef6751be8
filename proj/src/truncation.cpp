#include "netconv/truncation.hpp"

#include <algorithm>

namespace netconv {

std::vector<i64> sample_indices(i64 count, i64 cap) {
    std::vector<i64> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(std::min(count, std::max<i64>(cap, 1))));
    for_each_sample_index(count, cap, [&](i64 idx) { out.push_back(idx); });
    return out;
}

std::vector<Element> frontier_sample(const DirectedSet& ds, i64 frontier_bound, i64 cap) {
    std::vector<Axis> axes = ds.frontier_axes(frontier_bound);
    i64 count = axes_count(axes);
    std::vector<Element> out;
    for (i64 idx : sample_indices(count, cap)) out.push_back(axes_unrank(axes, idx));
    return out;
}

} // namespace netconv
