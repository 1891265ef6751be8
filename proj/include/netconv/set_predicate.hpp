#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "netconv/directed_set.hpp"
#include "netconv/element.hpp"

namespace netconv {

// Known exact density attached to a fixture, used as a test oracle.
struct AnalyticDensity {
    double lower = 0.0;
    double upper = 0.0;
    bool exists = false;

    static AnalyticDensity value(double v) { return {v, v, true}; }
    static AnalyticDensity oscillating(double lo, double hi) { return {lo, hi, false}; }
};

// A subset of a directed set, given by a membership test.  Membership must be
// a pure function of the element.
struct SetPredicate {
    std::function<bool(const Element&)> member;
    std::optional<AnalyticDensity> analytic;

    static SetPredicate from_fn(std::function<bool(const Element&)> fn,
                                std::optional<AnalyticDensity> known = std::nullopt) {
        return SetPredicate{std::move(fn), known};
    }

    static SetPredicate empty_set() {
        return from_fn([](const Element&) { return false; }, AnalyticDensity::value(0.0));
    }

    static SetPredicate whole_set() {
        return from_fn([](const Element&) { return true; }, AnalyticDensity::value(1.0));
    }

    // The up-set {a : g <= a} of a fixed element.
    static SetPredicate up_set_of(const DirectedSet& ds, Element g) {
        ds.require_element(g);
        return from_fn([ds, g = std::move(g)](const Element& a) { return ds.leq(g, a); });
    }

    SetPredicate complement() const {
        auto fn = member;
        std::optional<AnalyticDensity> known;
        if (analytic && analytic->exists) known = AnalyticDensity::value(1.0 - analytic->upper);
        return from_fn([fn](const Element& e) { return !fn(e); }, known);
    }

    SetPredicate union_with(const SetPredicate& other) const {
        auto f = member, g = other.member;
        return from_fn([f, g](const Element& e) { return f(e) || g(e); });
    }

    SetPredicate intersect_with(const SetPredicate& other) const {
        auto f = member, g = other.member;
        return from_fn([f, g](const Element& e) { return f(e) && g(e); });
    }
};

} // namespace netconv
