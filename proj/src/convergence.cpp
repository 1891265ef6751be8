#include "netconv/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netconv/truncation.hpp"

namespace netconv {

SetPredicate exceptional_set(const Net& net, const Vec& x, double eps) {
    if (x.size() != static_cast<std::size_t>(net.dim))
        throw std::invalid_argument("exceptional_set: point dimension mismatch");
    auto eval = net.eval;
    auto metric = net.metric;
    return SetPredicate::from_fn([eval, metric, x, eps](const Element& a) {
        return metric.distance(eval(a), x) >= eps;
    });
}

ConvergenceVerdict stat_converges_to(const Net& net, const Vec& x,
                                     const std::vector<double>& eps_list,
                                     const TruncationPolicy& policy, double tol) {
    if (eps_list.empty())
        throw std::invalid_argument("stat_converges_to: need at least one eps");
    for (double eps : eps_list)
        if (!(eps > 0.0))
            throw std::invalid_argument("stat_converges_to: eps must be positive");
    ConvergenceVerdict v;
    v.limit = x;
    v.tol = tol;
    v.converges = true;
    for (double eps : eps_list) {
        DensityReport r = density(exceptional_set(net, x, eps), net.ds, policy);
        if (r.upper_est > tol) v.converges = false;
        v.per_eps.emplace_back(eps, std::move(r));
    }
    return v;
}

std::string ConvergenceVerdict::to_text() const {
    std::ostringstream os;
    os << (converges ? "statistically convergent" : "not statistically convergent")
       << " (tol " << format_double(tol) << ")\n";
    for (const auto& [eps, r] : per_eps) {
        os << "  eps=" << format_double(eps) << "  exceptional density in ["
           << format_double(r.lower_est) << ", " << format_double(r.upper_est)
           << "]  " << to_string(r.exists_flag) << "\n";
    }
    return os.str();
}

std::string ConvergenceVerdict::to_csv() const {
    std::ostringstream os;
    os << "eps,lower,upper,flag\n";
    for (const auto& [eps, r] : per_eps) {
        os << format_double(eps) << ',' << format_double(r.lower_est) << ','
           << format_double(r.upper_est) << ',' << to_string(r.exists_flag) << "\n";
    }
    os << "converges," << (converges ? "yes" : "no") << ",tol," << format_double(tol)
       << "\n";
    return os.str();
}

UniquenessReport uniqueness_check(const Net& net, const Vec& x, const Vec& y,
                                  const std::vector<double>& eps_list,
                                  const TruncationPolicy& policy, double tol) {
    UniquenessReport rep;
    rep.for_x = stat_converges_to(net, x, eps_list, policy, tol);
    rep.for_y = stat_converges_to(net, y, eps_list, policy, tol);
    rep.applicable = rep.for_x.converges && rep.for_y.converges;
    rep.distance = net.metric.distance(x, y);
    double min_eps = *std::min_element(eps_list.begin(), eps_list.end());
    rep.bound = 2.0 * min_eps;
    rep.within_bound = rep.distance <= rep.bound;
    return rep;
}

ComponentVerdicts project_verdict(const PairNet& pn, const ConvergenceVerdict& combined,
                                  const TruncationPolicy& policy) {
    const int d1 = pn.first.dim;
    const int d2 = pn.second.dim;
    const Vec& limit = combined.limit;
    if (limit.size() != static_cast<std::size_t>(d1 + d2))
        throw std::invalid_argument("project_verdict: limit dimension mismatch");
    Vec x1(limit.begin(), limit.begin() + d1);
    Vec x2(limit.begin() + d1, limit.end());
    std::vector<double> eps_list;
    eps_list.reserve(combined.per_eps.size());
    for (const auto& [eps, r] : combined.per_eps) {
        (void)r;
        eps_list.push_back(eps);
    }
    ComponentVerdicts cv;
    cv.first = stat_converges_to(pn.first, x1, eps_list, policy, combined.tol);
    cv.second = stat_converges_to(pn.second, x2, eps_list, policy, combined.tol);
    return cv;
}

LimitDetection detect_stat_limit(const Net& net, const std::vector<double>& eps_list,
                                 const TruncationPolicy& policy, double tol) {
    // Guess: coordinatewise median of the net's values on the frontier
    // sample.  Cheap, robust to a sparse exceptional set, and confirmed or
    // refuted by a full verdict afterwards.
    const auto [frontier, horizon] = policy.refinement.back();
    (void)horizon;
    std::vector<Element> bases = frontier_sample(net.ds, frontier, policy.frontier_sample_cap);
    if (bases.empty()) throw std::invalid_argument("detect_stat_limit: empty frontier");

    std::vector<Vec> samples;
    samples.reserve(bases.size());
    for (const auto& b : bases) samples.push_back(net.eval(b));

    Vec candidate(static_cast<std::size_t>(net.dim), 0.0);
    std::vector<double> column(samples.size());
    for (int k = 0; k < net.dim; ++k) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            column[i] = samples[i][static_cast<std::size_t>(k)];
        std::nth_element(column.begin(), column.begin() + static_cast<long>(column.size() / 2),
                         column.end());
        candidate[static_cast<std::size_t>(k)] = column[column.size() / 2];
    }

    LimitDetection det;
    det.candidate = candidate;
    det.verdict = stat_converges_to(net, candidate, eps_list, policy, tol);
    det.confirmed = det.verdict.converges;
    return det;
}

} // namespace netconv
