#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netconv/directed_set.hpp"
#include "netconv/truncation.hpp"

namespace netconv {

// Minimal order interface the axiom checker works against.  Tests inject
// deliberately broken orders through this view.
struct OrderView {
    std::function<bool(const Element&, const Element&)> leq;
    std::function<std::vector<Element>(i64 bound)> enumerate; // all elements within bound
    std::function<std::optional<Element>(const Element&, const Element&)> join; // may be null
};

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::string detail; // witness or counterexample description
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::string to_text() const;
};

// Finite-sample validation of the order axioms plus the growth conditions
// that make density well defined:
//   reflexivity, antisymmetry, transitivity   (sampled singles/pairs/triples)
//   directedness       (an upper bound for every sampled pair, found within an
//                       extended bound: doubled horizon on box leaves, squared
//                       on divisor leaves to make room for lcm)
//   down-set stability (|{a <= b}| is constant as the horizon grows: the
//                       finite-down-set condition)
//   up-set growth      (|{a >= b}| within H grows with H: the infinite-up-set
//                       condition)
AxiomReport check_axioms(const OrderView& view, const std::vector<std::pair<i64, i64>>& ladder,
                         i64 extended_bound, i64 sample_cap = 24);

AxiomReport validate_axioms(const DirectedSet& ds, const TruncationPolicy& policy);

} // namespace netconv
