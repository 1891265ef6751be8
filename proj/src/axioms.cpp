#include "netconv/axioms.hpp"

#include <algorithm>
#include <sstream>

namespace netconv {

std::string AxiomReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.passed ? "pass" : "FAIL") << "  " << c.name
           << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    return os.str();
}

namespace {

std::vector<Element> sample_of(const std::vector<Element>& all, i64 cap) {
    std::vector<Element> out;
    for (i64 idx : sample_indices(static_cast<i64>(all.size()), cap))
        out.push_back(all[static_cast<std::size_t>(idx)]);
    return out;
}

} // namespace

AxiomReport check_axioms(const OrderView& view, const std::vector<std::pair<i64, i64>>& ladder,
                         i64 extended_bound, i64 sample_cap) {
    AxiomReport report;
    if (ladder.empty()) throw std::invalid_argument("check_axioms: empty refinement ladder");
    const i64 h_first = ladder.front().second;
    const i64 h_last = ladder.back().second;

    std::vector<Element> base = view.enumerate(h_first);
    std::vector<Element> pts = sample_of(base, sample_cap);

    { // reflexivity
        AxiomCheck c{"reflexivity", true, ""};
        for (const Element& a : pts)
            if (!view.leq(a, a)) {
                c.passed = false;
                c.detail = "a = " + a.to_string();
                break;
            }
        report.checks.push_back(std::move(c));
    }
    { // antisymmetry
        AxiomCheck c{"antisymmetry", true, ""};
        for (const Element& a : pts) {
            for (const Element& b : pts)
                if (!(a == b) && view.leq(a, b) && view.leq(b, a)) {
                    c.passed = false;
                    c.detail = a.to_string() + " <> " + b.to_string();
                    break;
                }
            if (!c.passed) break;
        }
        report.checks.push_back(std::move(c));
    }
    { // transitivity
        AxiomCheck c{"transitivity", true, ""};
        std::vector<Element> tri = sample_of(base, std::min<i64>(sample_cap, 16));
        for (const Element& a : tri) {
            for (const Element& b : tri) {
                if (!view.leq(a, b)) continue;
                for (const Element& d : tri)
                    if (view.leq(b, d) && !view.leq(a, d)) {
                        c.passed = false;
                        c.detail = a.to_string() + " <= " + b.to_string() + " <= " +
                                   d.to_string() + " but not a <= d";
                        break;
                    }
                if (!c.passed) break;
            }
            if (!c.passed) break;
        }
        report.checks.push_back(std::move(c));
    }
    { // directedness: upper bound within the extended bound for sampled pairs
        AxiomCheck c{"directedness", true, ""};
        std::vector<Element> extended;
        bool have_extended = false;
        for (std::size_t i = 0; i < pts.size() && c.passed; ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const Element &a = pts[i], &b = pts[j];
                std::optional<Element> ub;
                if (view.join) ub = view.join(a, b);
                if (ub && !(view.leq(a, *ub) && view.leq(b, *ub))) ub.reset();
                if (!ub) {
                    if (!have_extended) {
                        extended = view.enumerate(extended_bound);
                        have_extended = true;
                    }
                    for (const Element& u : extended)
                        if (view.leq(a, u) && view.leq(b, u)) { ub = u; break; }
                }
                if (!ub) {
                    c.passed = false;
                    c.detail = "no upper bound of " + a.to_string() + ", " + b.to_string() +
                               " within bound " + std::to_string(extended_bound);
                    break;
                }
                if (c.detail.empty())
                    c.detail = "upper bound of " + a.to_string() + ", " + b.to_string() +
                               " found at " + ub->to_string();
            }
        }
        report.checks.push_back(std::move(c));
    }

    // Growth checks along the refinement ladder.
    std::vector<Element> probes = sample_of(base, std::min<i64>(sample_cap, 12));
    std::vector<std::vector<Element>> stages;
    stages.reserve(ladder.size());
    for (auto [f, h] : ladder) stages.push_back(view.enumerate(h));

    { // down-set stability: |{a <= b}| must not change once b is inside the horizon
        AxiomCheck c{"down-set stability", true, ""};
        for (const Element& b : probes) {
            i64 prev = -1;
            for (std::size_t s = 0; s < stages.size(); ++s) {
                i64 n = 0;
                for (const Element& a : stages[s])
                    if (view.leq(a, b)) ++n;
                if (prev >= 0 && n != prev) {
                    c.passed = false;
                    c.detail = "down-set of " + b.to_string() + " grew from " +
                               std::to_string(prev) + " to " + std::to_string(n) +
                               " under refinement";
                    break;
                }
                prev = n;
            }
            if (!c.passed) break;
        }
        report.checks.push_back(std::move(c));
    }
    { // up-set growth: |{a >= b}| within H must grow strictly with H
        AxiomCheck c{"up-set growth", true, ""};
        if (h_last > h_first) {
            for (const Element& b : probes) {
                i64 prev = -1;
                for (std::size_t s = 0; s < stages.size(); ++s) {
                    i64 n = 0;
                    for (const Element& a : stages[s])
                        if (view.leq(b, a)) ++n;
                    if (prev >= 0 && n <= prev) {
                        c.passed = false;
                        c.detail = "up-set of " + b.to_string() + " stalled at " +
                                   std::to_string(n) + " under refinement";
                        break;
                    }
                    prev = n;
                }
                if (!c.passed) break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

AxiomReport validate_axioms(const DirectedSet& ds, const TruncationPolicy& policy) {
    policy.validate();
    OrderView view;
    view.leq = [ds](const Element& a, const Element& b) { return ds.leq(a, b); };
    view.enumerate = [ds, &policy](i64 bound) {
        return ds.enumerate_within(bound, policy.element_cap);
    };
    view.join = [ds](const Element& a, const Element& b) -> std::optional<Element> {
        return ds.join(a, b);
    };

    // Divisor joins are lcms, which need multiplicative room; box joins fit in
    // a doubled horizon trivially.
    bool has_divisor_leaf = !ds.grid_like();
    i64 extended = has_divisor_leaf ? policy.horizon * policy.horizon : policy.horizon * 2;

    std::vector<std::pair<i64, i64>> ladder = policy.refinement;
    if (ladder.size() < 2) {
        i64 h = policy.horizon;
        ladder = {{std::max<i64>(1, h / 2), std::max<i64>(1, h / 2)}, {policy.frontier, h}};
    }
    return check_axioms(view, ladder, extended);
}

} // namespace netconv
