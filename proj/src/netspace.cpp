#include "netconv/netspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netconv {

BalancedNeighborhood::BalancedNeighborhood(double r) : radius(r) {
    if (!(r > 0.0)) throw std::invalid_argument("BalancedNeighborhood: radius must be positive");
}

std::string GaugeValue::to_string() const {
    return infinite ? std::string("inf") : format_double(value);
}

namespace {

double horizon_sup_norm(const Net& net, const TruncationPolicy& policy) {
    const i64 horizon = policy.refinement.back().second;
    double s = 0.0;
    net.ds.for_each_within(horizon, [&](const Element& a) {
        s = std::max(s, net.metric.norm(net.eval(a)));
    });
    return s;
}

} // namespace

GaugeValue gauge(const Net& net, const BalancedNeighborhood& U, const TruncationPolicy& policy) {
    const double s = horizon_sup_norm(net, policy);
    GaugeValue g;
    if (s == 0.0) {
        g.infinite = true;
    } else {
        g.value = U.radius / s;
    }
    return g;
}

bool in_N_U(const Net& net, const BalancedNeighborhood& U, const TruncationPolicy& policy) {
    GaugeValue g = gauge(net, U, policy);
    return !g.infinite && g.value < 1.0;
}

GaugeScalingReport gauge_scaling_property(const Net& net, const BalancedNeighborhood& U,
                                          double c, const TruncationPolicy& policy) {
    if (c == 0.0) throw std::invalid_argument("gauge_scaling_property: c must be nonzero");
    GaugeScalingReport rep;
    rep.c = c;
    rep.base = gauge(net, U, policy);
    rep.scaled = gauge(scale_net(c, net), U, policy);
    if (rep.base.infinite || rep.scaled.infinite) {
        // only the all-zero net is gauge-infinite, and scaling preserves that
        rep.holds = rep.base.infinite && rep.scaled.infinite;
    } else {
        rep.error = std::abs(rep.scaled.value * std::abs(c) - rep.base.value);
        rep.holds = rep.error <= 1e-12 * std::max(1.0, rep.base.value);
    }
    return rep;
}

ClassificationRecord classify(const Net& net, const TruncationPolicy& policy,
                              const std::vector<double>& eps_list, double tol,
                              double bound_cap) {
    ClassificationRecord rec;
    rec.bound_cap = bound_cap;
    rec.sup_norm = horizon_sup_norm(net, policy);
    rec.in_m = rec.sup_norm <= bound_cap;

    rec.cauchy_evidence = stat_cauchy_all(net, eps_list, policy, tol);

    LimitDetection det = detect_stat_limit(net, eps_list, policy, tol);
    rec.detected_limit = det.candidate;
    rec.limit_confirmed = det.confirmed;
    rec.limit_evidence = det.verdict;

    Vec zero(static_cast<std::size_t>(net.dim), 0.0);
    rec.zero_evidence = stat_converges_to(net, zero, eps_list, policy, tol);

    // Chain the flags so the inclusions hold structurally; raw evidence for
    // each level stays inspectable above.
    rec.in_m_cy = rec.in_m && rec.cauchy_evidence.cauchy;
    rec.in_m_ct = rec.in_m_cy && rec.limit_confirmed;
    rec.in_m_0 = rec.in_m_ct && rec.zero_evidence.converges;
    return rec;
}

std::string ClassificationRecord::to_text() const {
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream os;
    os << "bounded (M): " << flag(in_m) << "  (sup-norm " << format_double(sup_norm)
       << ", cap " << format_double(bound_cap) << ")\n"
       << "statistically cauchy (M_cy): " << flag(in_m_cy) << "\n"
       << "statistically convergent (M_ct): " << flag(in_m_ct);
    if (limit_confirmed) {
        os << "  (limit";
        for (double v : detected_limit) os << ' ' << format_double(v);
        os << ", detected by frontier median — heuristic)";
    }
    os << "\n"
       << "statistically null (M_0): " << flag(in_m_0) << "\n";
    return os.str();
}

std::string ClassificationRecord::csv_header() {
    return "net,in_m,in_m_cy,in_m_ct,in_m_0,sup_norm";
}

std::string ClassificationRecord::csv_row(const std::string& label) const {
    auto flag = [](bool b) { return b ? "1" : "0"; };
    std::ostringstream os;
    os << label << ',' << flag(in_m) << ',' << flag(in_m_cy) << ',' << flag(in_m_ct) << ','
       << flag(in_m_0) << ',' << format_double(sup_norm);
    return os.str();
}

} // namespace netconv
