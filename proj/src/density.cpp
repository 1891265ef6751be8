#include "netconv/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace netconv {

namespace {

constexpr i64 kDefaultRatioCap = 5'000'000;

// --- Exact counting back-ends -------------------------------------------------
//
// density() evaluates the counting ratio at many points of one horizon, so it
// pays to precompute memberships once per refinement rung:
//   * box orders (all leaves naturals/grid): d-dimensional prefix sums, O(1)
//     per ratio afterwards;
//   * divisor leaves: membership bits plus a smallest-prime-factor sieve, then
//     one divisor walk per ratio;
//   * mixed products: no precompute, count the down-set directly (these only
//     occur in small fixtures).
// The public ratio() below stays on the direct path by design.

class RatioOracle {
public:
    RatioOracle(const DirectedSet& ds, const std::function<bool(const Element&)>& member,
                i64 horizon, i64 element_cap)
        : ds_(ds), member_(member), horizon_(horizon) {
        if (ds.grid_like()) {
            build_box(element_cap);
            kind_ = Kind::box;
        } else if (ds.family() == DirectedSet::Family::divisibility ||
                   ds.family() == DirectedSet::Family::divisibility_excluding_one) {
            build_divisor(element_cap);
            kind_ = Kind::divisor;
        } else {
            kind_ = Kind::direct;
        }
    }

    Ratio at(const Element& b) const {
        auto [num, den] = counts_at(b);
        return Ratio(num, den);
    }

    // Same ratio as a double.  Counts stay far below 2^53, so dividing the raw
    // pair rounds to the very same value as converting the reduced fraction.
    double at_double(const Element& b) const {
        auto [num, den] = counts_at(b);
        return static_cast<double>(num) / static_cast<double>(den);
    }

    // Number of members within the horizon, when cheap to know.
    std::optional<i64> total_members() const { return total_members_; }

private:
    enum class Kind { box, divisor, direct };

    std::pair<i64, i64> counts_at(const Element& b) const {
        switch (kind_) {
        case Kind::box: return at_box(b);
        case Kind::divisor: return at_divisor(b);
        case Kind::direct: return at_direct(b);
        }
        return {0, 1};
    }

    void build_box(i64 element_cap) {
        i64 total = ds_.count_within(horizon_);
        if (total > element_cap)
            throw resource_limit_error("density horizon of " + std::to_string(total) +
                                       " elements exceeds cap " + std::to_string(element_cap));
        dims_ = ds_.arity();
        prefix_.assign(static_cast<std::size_t>(total), 0);
        i64 idx = 0;
        ds_.for_each_within(horizon_, [&](const Element& e) {
            prefix_[static_cast<std::size_t>(idx++)] = member_(e) ? 1 : 0;
        });
        // Axis-wise accumulation turns the indicator into inclusive prefix sums.
        i64 stride = 1;
        for (int axis = dims_ - 1; axis >= 0; --axis) {
            for (i64 i = 0; i < total; ++i)
                if ((i / stride) % horizon_ > 0)
                    prefix_[static_cast<std::size_t>(i)] +=
                        prefix_[static_cast<std::size_t>(i - stride)];
            stride *= horizon_;
        }
        total_members_ = prefix_.back();
    }

    std::pair<i64, i64> at_box(const Element& b) const {
        i64 idx = 0, den = 1;
        for (i64 c : b.coords) {
            idx = idx * horizon_ + (c - 1);
            den *= c;
        }
        return {prefix_[static_cast<std::size_t>(idx)], den};
    }

    void build_divisor(i64 element_cap) {
        if (horizon_ > element_cap)
            throw resource_limit_error("density horizon of " + std::to_string(horizon_) +
                                       " elements exceeds cap " + std::to_string(element_cap));
        exclude_one_ = ds_.family() == DirectedSet::Family::divisibility_excluding_one;
        bits_.assign(static_cast<std::size_t>(horizon_) + 1, 0);
        i64 members = 0;
        Element scratch(std::vector<i64>{0});
        for (i64 v = exclude_one_ ? 2 : 1; v <= horizon_; ++v) {
            scratch.coords[0] = v;
            if (member_(scratch)) {
                bits_[static_cast<std::size_t>(v)] = 1;
                ++members;
            }
        }
        total_members_ = members;
        spf_.assign(static_cast<std::size_t>(horizon_) + 1, 0);
        for (i64 i = 2; i <= horizon_; ++i) {
            if (spf_[static_cast<std::size_t>(i)] == 0)
                for (i64 j = i; j <= horizon_; j += i)
                    if (spf_[static_cast<std::size_t>(j)] == 0)
                        spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
    }

    std::pair<i64, i64> at_divisor(const Element& b) const {
        i64 m = b.scalar();
        // Divisors from the smallest-prime-factor decomposition.
        divisor_buf_.clear();
        divisor_buf_.push_back(1);
        while (m > 1) {
            i64 p = spf_[static_cast<std::size_t>(m)];
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            std::size_t n = divisor_buf_.size();
            i64 pk = 1;
            for (int k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < n; ++i) divisor_buf_.push_back(divisor_buf_[i] * pk);
            }
        }
        i64 total = 0, members = 0;
        for (i64 d : divisor_buf_) {
            if (exclude_one_ && d == 1) continue;
            ++total;
            members += bits_[static_cast<std::size_t>(d)];
        }
        return {members, total};
    }

    std::pair<i64, i64> at_direct(const Element& b) const {
        std::vector<Axis> axes = ds_.down_axes(b);
        i64 members = 0;
        axes_for_each(axes, [&](const Element& e) { members += member_(e) ? 1 : 0; });
        return {members, axes_count(axes)};
    }

    DirectedSet ds_;
    std::function<bool(const Element&)> member_;
    i64 horizon_;
    Kind kind_ = Kind::direct;
    int dims_ = 1;
    std::vector<i64> prefix_;
    std::vector<std::uint8_t> bits_;
    std::vector<std::int32_t> spf_;
    bool exclude_one_ = false;
    std::optional<i64> total_members_;
    mutable std::vector<i64> divisor_buf_;
};

// --- Shared extremum pass -----------------------------------------------------

struct RungExtrema {
    double lower = 0.0, upper = 0.0;
    Element min_at, max_at;
    double min_val = 0.0, max_val = 0.0;
};

std::vector<Element> resolve_bases(const DirectedSet& ds, i64 frontier_bound, i64 horizon,
                                   const TruncationPolicy& policy) {
    std::vector<Element> bases;
    if (policy.frontier_override) {
        for (const Element& g : *policy.frontier_override) {
            ds.require_element(g);
            if (ds.up_set_count(g, horizon) > 0) bases.push_back(g);
        }
    } else {
        bases = frontier_sample(ds, std::min(frontier_bound, horizon), policy.frontier_sample_cap);
    }
    if (bases.empty())
        throw std::invalid_argument("no usable base points within horizon " +
                                    std::to_string(horizon));
    return bases;
}

RungExtrema rung_extrema(const DirectedSet& ds, const std::vector<Element>& bases, i64 horizon,
                         i64 upset_cap, const std::function<double(const Element&)>& f) {
    RungExtrema out;
    out.lower = -std::numeric_limits<double>::infinity();
    out.upper = std::numeric_limits<double>::infinity();
    out.min_val = std::numeric_limits<double>::infinity();
    out.max_val = -std::numeric_limits<double>::infinity();
    Element a;
    for (const Element& g : bases) {
        std::vector<Axis> axes = ds.up_axes(g, horizon);
        i64 count = axes_count(axes);
        if (count == 0)
            throw std::logic_error("empty truncated up-set at " + g.to_string());
        double tail_min = std::numeric_limits<double>::infinity();
        double tail_max = -std::numeric_limits<double>::infinity();
        for_each_sample_index(count, upset_cap, [&](i64 idx) {
            axes_unrank_into(axes, idx, a);
            double v = f(a);
            if (v < tail_min) tail_min = v;
            if (v > tail_max) tail_max = v;
            if (v < out.min_val) { out.min_val = v; out.min_at = a; }
            if (v > out.max_val) { out.max_val = v; out.max_at = a; }
        });
        out.lower = std::max(out.lower, tail_min);
        out.upper = std::min(out.upper, tail_max);
    }
    return out;
}

struct LadderOutcome {
    std::vector<RefinementValue> steps;
    RungExtrema last;
};

LadderOutcome run_ladder(const DirectedSet& ds, const TruncationPolicy& policy,
                         const std::function<std::function<double(const Element&)>(i64)>& make_f) {
    policy.validate();
    LadderOutcome out;
    for (auto [f_bound, h_bound] : policy.refinement) {
        auto f = make_f(h_bound);
        std::vector<Element> bases = resolve_bases(ds, f_bound, h_bound, policy);
        RungExtrema ext = rung_extrema(ds, bases, h_bound, policy.upset_sample_cap, f);
        out.steps.push_back({f_bound, h_bound, ext.lower, ext.upper});
        out.last = ext;
    }
    return out;
}

} // namespace

EstimationResult liminf_estimate(const std::function<double(const Element&)>& f,
                                 const DirectedSet& ds, const TruncationPolicy& policy) {
    LadderOutcome out = run_ladder(ds, policy, [&](i64) { return f; });
    return EstimationResult{out.steps.back().lower, out.steps};
}

EstimationResult limsup_estimate(const std::function<double(const Element&)>& f,
                                 const DirectedSet& ds, const TruncationPolicy& policy) {
    LadderOutcome out = run_ladder(ds, policy, [&](i64) { return f; });
    return EstimationResult{out.steps.back().upper, out.steps};
}

Ratio ratio(const SetPredicate& A, const Element& b, const DirectedSet& ds) {
    ds.require_element(b);
    i64 size = ds.down_set_size(b);
    if (size > kDefaultRatioCap)
        throw resource_limit_error("down-set of " + b.to_string() + " has " +
                                   std::to_string(size) + " elements, cap " +
                                   std::to_string(kDefaultRatioCap));
    std::vector<Axis> axes = ds.down_axes(b);
    i64 members = 0;
    axes_for_each(axes, [&](const Element& e) { members += A.member(e) ? 1 : 0; });
    return Ratio(members, size);
}

std::string to_string(ExistsFlag f) {
    switch (f) {
    case ExistsFlag::exists: return "exists";
    case ExistsFlag::does_not_exist: return "does-not-exist";
    case ExistsFlag::inconclusive: return "inconclusive";
    }
    return "?";
}

DensityReport density(const SetPredicate& A, const DirectedSet& ds,
                      const TruncationPolicy& policy, const DensityThresholds& thresholds) {
    policy.validate();
    DensityReport rep;
    rep.policy_used = policy;

    std::shared_ptr<RatioOracle> oracle;
    auto make_f = [&](i64 horizon) -> std::function<double(const Element&)> {
        oracle = std::make_shared<RatioOracle>(ds, A.member, horizon, policy.element_cap);
        auto o = oracle;
        return [o](const Element& e) { return o->at_double(e); };
    };
    LadderOutcome out = run_ladder(ds, policy, make_f);

    // Normalise each rung so lower <= upper; crossing means the truncated
    // tails were too shallow to order the two passes and the verdict cannot
    // be trusted.
    for (RefinementValue& rv : out.steps)
        if (rv.lower > rv.upper) {
            std::swap(rv.lower, rv.upper);
            rep.truncation_crossed = true;
        }
    rep.steps = out.steps;
    rep.lower_est = out.steps.back().lower;
    rep.upper_est = out.steps.back().upper;

    // Series and witnesses from the final rung, as exact rationals.
    std::vector<Element> bases =
        resolve_bases(ds, policy.refinement.back().first, policy.horizon, policy);
    for (const Element& g : bases) rep.series.push_back({g, oracle->at(g)});
    rep.min_witness = {out.last.min_at, oracle->at(out.last.min_at)};
    rep.max_witness = {out.last.max_at, oracle->at(out.last.max_at)};

    if (oracle->total_members() && *oracle->total_members() == 0) {
        // Empty within the horizon: density zero by convention.
        rep.empty_within_horizon = true;
        rep.lower_est = 0.0;
        rep.upper_est = 0.0;
        rep.exists_flag = ExistsFlag::exists;
        return rep;
    }

    const RefinementValue& s2 = rep.steps.back();
    const RefinementValue& s1 = rep.steps.size() >= 2 ? rep.steps[rep.steps.size() - 2] : s2;
    double g1 = s1.upper - s1.lower;
    double g2 = s2.upper - s2.lower;
    if (rep.truncation_crossed)
        rep.exists_flag = ExistsFlag::inconclusive;
    else if (g1 <= thresholds.gap_tolerance && g2 <= thresholds.gap_tolerance)
        rep.exists_flag = ExistsFlag::exists;
    else if (g1 > thresholds.separation && g2 > thresholds.separation)
        rep.exists_flag = ExistsFlag::does_not_exist;
    else
        rep.exists_flag = ExistsFlag::inconclusive;
    return rep;
}

std::string DensityReport::summary_text() const {
    std::ostringstream os;
    os << "lower-estimate: " << format_double(lower_est) << "\n"
       << "upper-estimate: " << format_double(upper_est) << "\n"
       << "existence: " << to_string(exists_flag) << "\n";
    for (const RefinementValue& rv : steps)
        os << "rung F=" << rv.frontier_bound << " H=" << rv.horizon_bound
           << ": lower=" << format_double(rv.lower) << " upper=" << format_double(rv.upper)
           << "\n";
    os << "min-ratio: " << min_witness.value.to_string() << " at " << min_witness.at.to_string()
       << "\n"
       << "max-ratio: " << max_witness.value.to_string() << " at " << max_witness.at.to_string()
       << "\n";
    if (empty_within_horizon) os << "note: no members within horizon\n";
    if (truncation_crossed) os << "note: truncated estimates crossed; tails too shallow\n";
    return os.str();
}

void DensityReport::write_csv(std::ostream& os) const {
    os << "element,numerator,denominator,ratio\n";
    for (const SeriesPoint& p : series)
        os << p.at.csv_coords() << "," << p.value.num << "," << p.value.den << ","
           << format_double(p.value.to_double()) << "\n";
    os << "summary," << format_double(lower_est) << "," << format_double(upper_est) << ","
       << to_string(exists_flag) << "\n";
}

std::string DensityReport::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

UnionComplementRatios union_complement_ratios(const SetPredicate& A, const SetPredicate& B,
                                              const Element& b, const DirectedSet& ds) {
    ds.require_element(b);
    std::vector<Axis> axes = ds.down_axes(b);
    i64 den = axes_count(axes);
    if (den > kDefaultRatioCap)
        throw resource_limit_error("down-set of " + b.to_string() + " exceeds counting cap");
    i64 na = 0, nb = 0, nu = 0, ni = 0;
    axes_for_each(axes, [&](const Element& e) {
        bool ia = A.member(e), ib = B.member(e);
        na += ia;
        nb += ib;
        nu += (ia || ib);
        ni += (ia && ib);
    });
    UnionComplementRatios out;
    out.r_a = Ratio(na, den);
    out.r_b = Ratio(nb, den);
    out.r_union = Ratio(nu, den);
    out.r_intersection = Ratio(ni, den);
    out.r_complement_a = Ratio(den - na, den);
    out.subadditive = out.r_union <= out.r_a + out.r_b;
    out.complement_exact = out.r_complement_a == out.r_a.complement();
    return out;
}

ProductDensityReport product_density_check(const SetPredicate& A,
                                           const std::optional<SetPredicate>& B,
                                           const DirectedSet& ds1, const DirectedSet& ds2,
                                           const TruncationPolicy& policy,
                                           const DensityThresholds& thresholds) {
    DirectedSet prod = DirectedSet::product(ds1, ds2);
    const int la = ds1.arity();
    auto a_member = A.member;
    SetPredicate cylinder = SetPredicate::from_fn([a_member, la](const Element& e) {
        Element left(std::vector<i64>(e.coords.begin(), e.coords.begin() + la));
        return a_member(left);
    });
    ProductDensityReport out;
    out.product_report = density(cylinder, prod, policy, thresholds);
    out.factor_report = density(A, ds1, policy, thresholds);
    out.discrepancy =
        std::max(std::abs(out.product_report.lower_est - out.factor_report.lower_est),
                 std::abs(out.product_report.upper_est - out.factor_report.upper_est));
    if (B) {
        auto b_member = B->member;
        SetPredicate both = SetPredicate::from_fn([a_member, b_member, la](const Element& e) {
            Element left(std::vector<i64>(e.coords.begin(), e.coords.begin() + la));
            Element right(std::vector<i64>(e.coords.begin() + la, e.coords.end()));
            return a_member(left) && b_member(right);
        });
        out.ab_report = density(both, prod, policy, thresholds);
    }
    return out;
}

ConditionStarReport condition_star(const Element& g, const DirectedSet& ds,
                                   const TruncationPolicy& policy, double positivity_threshold) {
    ds.require_element(g);
    ConditionStarReport out;
    out.base = g;
    out.report = density(SetPredicate::up_set_of(ds, g), ds, policy);
    out.limsup_est = out.report.upper_est;
    out.holds = out.limsup_est > positivity_threshold;
    return out;
}

} // namespace netconv
