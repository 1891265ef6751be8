#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netconv/format.hpp"
#include "netconv/ratio.hpp"
#include "netconv/set_predicate.hpp"
#include "netconv/truncation.hpp"

namespace netconv {

// --- Truncated net extrema ---------------------------------------------------
//
// For a net of reals f over a directed set, the limit inferior is
// sup over base points g of (inf over the tail {a : g <= a}) and the limit
// superior swaps sup and inf.  The estimators truncate both passes: base
// points range over the policy frontier, tails over up-sets within the
// horizon, both subsampled deterministically per the policy caps.
//
// Truncated extrema carry no a-priori error bound; they are heuristics and
// are validated against analytic values and refinement stability.  Base
// points whose truncated tails are shallow (divisor leaves away from the
// root) are excluded by the frontier semantics in DirectedSet::frontier_axes:
// a two-element tail turns the inner extremum into truncation noise, which
// shows up as lower/upper estimates crossing.

struct RefinementValue {
    i64 frontier_bound = 0;
    i64 horizon_bound = 0;
    double lower = 0.0;
    double upper = 0.0;
};

struct EstimationResult {
    double value = 0.0;
    std::vector<RefinementValue> steps; // one per refinement rung; value is from the last
};

EstimationResult liminf_estimate(const std::function<double(const Element&)>& f,
                                 const DirectedSet& ds, const TruncationPolicy& policy);
EstimationResult limsup_estimate(const std::function<double(const Element&)>& f,
                                 const DirectedSet& ds, const TruncationPolicy& policy);

// --- Density -----------------------------------------------------------------

// Exact counting ratio |A n D_b| / |D_b| at a single element.
Ratio ratio(const SetPredicate& A, const Element& b, const DirectedSet& ds);

enum class ExistsFlag { exists, does_not_exist, inconclusive };
std::string to_string(ExistsFlag f);

struct DensityThresholds {
    double gap_tolerance = 0.05; // |upper-lower| <= this on the last two rungs => exists
    double separation = 0.5;     // gap > this on the last two rungs => does_not_exist
};

struct SeriesPoint {
    Element at;
    Ratio value;
};

struct DensityReport {
    double lower_est = 0.0;
    double upper_est = 0.0;
    ExistsFlag exists_flag = ExistsFlag::inconclusive;
    std::vector<SeriesPoint> series;      // ratios at the final frontier sample
    std::vector<RefinementValue> steps;   // estimates per refinement rung
    SeriesPoint min_witness, max_witness; // extreme tail ratios seen at the last rung
    bool empty_within_horizon = false;
    bool truncation_crossed = false;      // raw lower > raw upper somewhere: shallow tails
    TruncationPolicy policy_used;

    std::string summary_text() const;
    // CSV: header, one row per series point (element,numerator,denominator,
    // ratio), then a summary footer row.  LF line endings, '.' decimals.
    void write_csv(std::ostream& os) const;
    std::string to_csv() const;
};

// Truncated upper/lower density of A with existence verdict.  The empty set
// short-circuits to (0, 0, exists): the empty set has density zero by
// convention, checked over the horizon.
DensityReport density(const SetPredicate& A, const DirectedSet& ds,
                      const TruncationPolicy& policy, const DensityThresholds& thresholds = {});

// Exact finite counting identities at one element: union subadditivity and
// the complement identity hold exactly, not within tolerance.
struct UnionComplementRatios {
    Ratio r_a, r_b, r_union, r_intersection, r_complement_a;
    bool subadditive = false;      // r_union <= r_a + r_b
    bool complement_exact = false; // r_complement_a == 1 - r_a
};

UnionComplementRatios union_complement_ratios(const SetPredicate& A, const SetPredicate& B,
                                              const Element& b, const DirectedSet& ds);

// Density of A x D2 over the product order versus the density of A over the
// first factor (they agree when the factor density exists), plus the density
// of A x B when B is given.
struct ProductDensityReport {
    DensityReport product_report;  // A x D2 over prod(ds1, ds2)
    DensityReport factor_report;   // A over ds1
    double discrepancy = 0.0;      // |product upper - factor upper|
    std::optional<DensityReport> ab_report; // A x B over the product, when B given
};

ProductDensityReport product_density_check(const SetPredicate& A,
                                           const std::optional<SetPredicate>& B,
                                           const DirectedSet& ds1, const DirectedSet& ds2,
                                           const TruncationPolicy& policy,
                                           const DensityThresholds& thresholds = {});

// Tail positivity at a base point g: the truncated upper density of the
// up-set of g.  `holds` means the estimate is strictly positive.
struct ConditionStarReport {
    Element base;
    DensityReport report;
    double limsup_est = 0.0;
    bool holds = false;
};

ConditionStarReport condition_star(const Element& g, const DirectedSet& ds,
                                   const TruncationPolicy& policy,
                                   double positivity_threshold = 0.0);

} // namespace netconv
