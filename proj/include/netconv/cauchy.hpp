#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netconv/convergence.hpp"
#include "netconv/density.hpp"
#include "netconv/net.hpp"

namespace netconv {

// Witness search scans this many frontier elements, ranked by how central
// their net values are (distance to the coordinatewise median of frontier
// values).
constexpr int kWitnessCandidateCap = 32;

struct CauchyVerdict {
    std::optional<Element> witness; // present whenever cauchy is true
    std::vector<std::pair<double, DensityReport>> per_eps;
    bool cauchy = false;

    std::string to_text() const;
};

// Density of {a : a >= gamma and d(x_a, x_gamma) >= eps} for one fixed base.
DensityReport cauchy_density_at(const Net& net, const Element& gamma, double eps,
                                const TruncationPolicy& policy);

// Searches for a base gamma past which the net stays eps-close to its value
// there, up to a negligible set of indices.
CauchyVerdict stat_cauchy(const Net& net, double eps, const TruncationPolicy& policy,
                          double tol = kDefaultDensityTol,
                          int candidate_cap = kWitnessCandidateCap);

// Runs stat_cauchy for each radius; cauchy iff all pass.  The recorded
// witness is the one found for the smallest radius (witnesses may differ per
// radius; the verdict keeps one representative).
CauchyVerdict stat_cauchy_all(const Net& net, const std::vector<double>& eps_list,
                              const TruncationPolicy& policy,
                              double tol = kDefaultDensityTol);

// A net close to a limit is close to itself: pick a witness gamma whose value
// lies within eps/2 of the limit, then every index within eps/2 of the limit
// is within eps of the witness.  `violations` counts sampled indices that
// break that containment (always 0; reported for transparency).
struct CauchyImplicationReport {
    bool applicable = false; // convergence premise at eps/2 holds
    ConvergenceVerdict premise;
    std::optional<Element> witness;
    double witness_distance = 0.0; // d(x_gamma, x), < eps/2 by choice
    DensityReport at_witness;
    bool passes = false; // at_witness.upper_est <= tol
    i64 checked = 0;     // indices scanned for the containment count
    i64 violations = 0;  // d(x_a, x_gamma) >= eps but d(x_a, x) < eps/2
};

CauchyImplicationReport convergent_implies_cauchy(const Net& net, const Vec& x,
                                                  double eps,
                                                  const TruncationPolicy& policy,
                                                  double tol = kDefaultDensityTol);

// Density over D x D of {(a,b): d(x_a, x_b) >= eps, a >= gamma, b >= gamma}.
DensityReport pairwise_cauchy_density(const Net& net, const Element& gamma, double eps,
                                      const TruncationPolicy& policy);

enum class PairMode { pair, zip };

// Runs stat_cauchy on both factors and on the combined net and reports which
// implications between them hold.  In pair mode the combined-implies-factors
// direction is only meaningful over index families whose up-sets keep
// positive density, so it is attempted only when both factors pass that
// check at the relevant witnesses; in zip mode the two sides must agree
// outright.
struct CauchyProductReport {
    PairMode mode = PairMode::pair;
    CauchyVerdict x_verdict, y_verdict, combined;
    bool forward_holds = false; // factors cauchy => combined cauchy
    bool converse_attempted = false;
    bool converse_holds = false; // combined cauchy => factors cauchy
    std::optional<ConditionStarReport> star_x, star_y;
    bool iff_holds = false; // zip mode: combined <=> both factors

    std::string to_text() const;
};

CauchyProductReport cauchy_product_checks(const Net& net_x, const Net& net_y,
                                          PairMode mode, double eps,
                                          const TruncationPolicy& policy,
                                          double tol = kDefaultDensityTol);

// Image of a Cauchy net under a map with an explicit uniform-continuity
// modulus: if the source is Cauchy at delta(eps), the image is Cauchy at eps
// with the same witness.
struct UcMapReport {
    bool applicable = false; // source verdict at delta(eps) holds
    double eps = 0.0;
    double delta = 0.0;
    CauchyVerdict source;
    DensityReport image_at_witness;
    bool passes = false;
};

UcMapReport uc_map_cauchy(const std::function<Vec(const Vec&)>& f, int out_dim,
                          const std::function<double(double)>& modulus, const Net& net,
                          double eps, const TruncationPolicy& policy,
                          double tol = kDefaultDensityTol);

} // namespace netconv
