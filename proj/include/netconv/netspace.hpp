#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netconv/cauchy.hpp"
#include "netconv/convergence.hpp"
#include "netconv/net.hpp"

namespace netconv {

// Open norm ball of radius r about 0 (balanced by symmetry of the norm).
struct BalancedNeighborhood {
    double radius = 1.0;

    explicit BalancedNeighborhood(double r);
};

// sup {lambda >= 0 : lambda * x_a inside the ball for every a}.  For a net
// with sup-norm s over the horizon this is r/s, and every lambda qualifies
// when s = 0, hence the infinity sentinel.
struct GaugeValue {
    double value = 0.0;
    bool infinite = false;

    std::string to_string() const; // "inf" for the sentinel
};

GaugeValue gauge(const Net& net, const BalancedNeighborhood& U, const TruncationPolicy& policy);

// Membership in the gauge-unit neighborhood: gauge < 1, i.e. the net's
// sup-norm exceeds the ball radius.
bool in_N_U(const Net& net, const BalancedNeighborhood& U, const TruncationPolicy& policy);

// gauge(c * net) must equal gauge(net) / |c|; checked to a fixed floating
// tolerance, with the infinite cases required to match exactly.
struct GaugeScalingReport {
    GaugeValue base;
    GaugeValue scaled;
    double c = 1.0;
    double error = 0.0; // |scaled * |c| - base| when both finite
    bool holds = false;
};

GaugeScalingReport gauge_scaling_property(const Net& net, const BalancedNeighborhood& U,
                                          double c, const TruncationPolicy& policy);

// Nets with norms beyond this cap over the horizon are flagged as unbounded.
// Finite truncations always have finite sup-norm, so boundedness of the full
// net is not decidable here; the cap marks obvious blow-ups.
constexpr double kBoundednessCap = 1e9;

// Nested classes of truncated nets: bounded, statistically Cauchy,
// statistically convergent, statistically null.  Reported flags are chained
// so the inclusions hold by construction; the raw evidence is attached.
struct ClassificationRecord {
    bool in_m = false;
    bool in_m_cy = false;
    bool in_m_ct = false;
    bool in_m_0 = false;
    double sup_norm = 0.0;
    double bound_cap = kBoundednessCap;
    Vec detected_limit;          // median-of-frontier guess (heuristic)
    bool limit_confirmed = false;
    CauchyVerdict cauchy_evidence;
    ConvergenceVerdict limit_evidence;
    ConvergenceVerdict zero_evidence;

    bool chain_ok() const {
        return (!in_m_0 || in_m_ct) && (!in_m_ct || in_m_cy) && (!in_m_cy || in_m);
    }
    std::string to_text() const;
    static std::string csv_header();
    std::string csv_row(const std::string& label) const;
};

ClassificationRecord classify(const Net& net, const TruncationPolicy& policy,
                              const std::vector<double>& eps_list = kDefaultEps,
                              double tol = kDefaultDensityTol,
                              double bound_cap = kBoundednessCap);

} // namespace netconv
