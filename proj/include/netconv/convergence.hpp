#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netconv/density.hpp"
#include "netconv/net.hpp"

namespace netconv {

// Default probe radii and the density tolerance below which an exceptional
// set counts as negligible.
inline const std::vector<double> kDefaultEps = {0.5, 0.1, 0.02};
constexpr double kDefaultDensityTol = 0.05;

// {a : d(x_a, x) >= eps}, the set of indices where the net strays from x.
SetPredicate exceptional_set(const Net& net, const Vec& x, double eps);

// Statistical convergence: for every probe radius the exceptional set has
// negligible truncated density (upper estimate <= tol).
struct ConvergenceVerdict {
    Vec limit;
    double tol = kDefaultDensityTol;
    std::vector<std::pair<double, DensityReport>> per_eps;
    bool converges = false;

    std::string to_text() const;
    std::string to_csv() const; // eps,lower,upper,flag rows
};

ConvergenceVerdict stat_converges_to(const Net& net, const Vec& x,
                                     const std::vector<double>& eps_list,
                                     const TruncationPolicy& policy,
                                     double tol = kDefaultDensityTol);

// When the net statistically converges to both x and y, the two limits must
// coincide up to the resolution of the smallest probe radius.
struct UniquenessReport {
    bool applicable = false; // both verdicts passed
    double distance = 0.0;
    double bound = 0.0; // 2 * min eps
    bool within_bound = false;
    ConvergenceVerdict for_x, for_y;
};

UniquenessReport uniqueness_check(const Net& net, const Vec& x, const Vec& y,
                                  const std::vector<double>& eps_list,
                                  const TruncationPolicy& policy,
                                  double tol = kDefaultDensityTol);

// Component verdicts of a combined net, computed by slicing the cylinder
// exceptional sets back onto the factors.
struct ComponentVerdicts {
    ConvergenceVerdict first;
    ConvergenceVerdict second;
};

// Splits a verdict computed on the combined net back into per-factor
// verdicts.  The limit, probe radii, and tolerance are taken from the
// combined verdict; factor evaluations come from the stored component nets,
// so the result agrees with a direct per-component run.
ComponentVerdicts project_verdict(const PairNet& pn, const ConvergenceVerdict& combined,
                                  const TruncationPolicy& policy);

// Frontier-median guess of the statistical limit, confirmed (or not) by a
// full verdict.  A heuristic: reported as such.
struct LimitDetection {
    Vec candidate;
    bool confirmed = false;
    ConvergenceVerdict verdict;
};

LimitDetection detect_stat_limit(const Net& net, const std::vector<double>& eps_list,
                                 const TruncationPolicy& policy,
                                 double tol = kDefaultDensityTol);

} // namespace netconv
