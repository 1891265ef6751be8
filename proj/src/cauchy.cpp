#include "netconv/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "netconv/truncation.hpp"

namespace netconv {

namespace {

// Frontier elements ordered by how central their net values are: distance to
// the coordinatewise median of the sampled frontier values, ascending.  An
// eventual-closeness witness, if one exists, has a value near where the bulk
// of the net sits, so central candidates are tried first.
std::vector<Element> witness_candidates(const Net& net, const TruncationPolicy& policy,
                                        int cap) {
    const auto [frontier, horizon] = policy.refinement.back();
    (void)horizon;
    std::vector<Element> bases = frontier_sample(net.ds, frontier, policy.frontier_sample_cap);
    if (bases.empty()) return bases;

    std::vector<Vec> values;
    values.reserve(bases.size());
    for (const auto& b : bases) values.push_back(net.eval(b));

    Vec median(static_cast<std::size_t>(net.dim), 0.0);
    std::vector<double> column(values.size());
    for (int k = 0; k < net.dim; ++k) {
        for (std::size_t i = 0; i < values.size(); ++i)
            column[i] = values[i][static_cast<std::size_t>(k)];
        std::nth_element(column.begin(), column.begin() + static_cast<long>(column.size() / 2),
                         column.end());
        median[static_cast<std::size_t>(k)] = column[column.size() / 2];
    }

    std::vector<std::size_t> order(bases.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<double> centrality(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i)
        centrality[i] = net.metric.distance(values[i], median);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return centrality[a] < centrality[b];
    });

    std::vector<Element> out;
    const std::size_t take = std::min<std::size_t>(order.size(), static_cast<std::size_t>(cap));
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) out.push_back(bases[order[i]]);
    return out;
}

} // namespace

DensityReport cauchy_density_at(const Net& net, const Element& gamma, double eps,
                                const TruncationPolicy& policy) {
    net.ds.require_element(gamma);
    const Vec at_gamma = net.eval(gamma);
    auto eval = net.eval;
    auto metric = net.metric;
    auto ds = net.ds;
    SetPredicate bad = SetPredicate::from_fn([ds, eval, metric, at_gamma, gamma, eps](const Element& a) {
        return ds.leq(gamma, a) && metric.distance(eval(a), at_gamma) >= eps;
    });
    return density(bad, net.ds, policy);
}

CauchyVerdict stat_cauchy(const Net& net, double eps, const TruncationPolicy& policy,
                          double tol, int candidate_cap) {
    if (!(eps > 0.0)) throw std::invalid_argument("stat_cauchy: eps must be positive");
    CauchyVerdict v;
    std::vector<Element> candidates = witness_candidates(net, policy, candidate_cap);

    std::optional<DensityReport> best;
    for (const auto& gamma : candidates) {
        DensityReport r = cauchy_density_at(net, gamma, eps, policy);
        if (r.upper_est <= tol) {
            v.cauchy = true;
            v.witness = gamma;
            v.per_eps.emplace_back(eps, std::move(r));
            return v;
        }
        if (!best || r.upper_est < best->upper_est) best = std::move(r);
    }
    v.cauchy = false;
    if (best) v.per_eps.emplace_back(eps, std::move(*best)); // best failing attempt
    return v;
}

CauchyVerdict stat_cauchy_all(const Net& net, const std::vector<double>& eps_list,
                              const TruncationPolicy& policy, double tol) {
    if (eps_list.empty())
        throw std::invalid_argument("stat_cauchy_all: need at least one eps");
    CauchyVerdict all;
    all.cauchy = true;
    double witness_eps = std::numeric_limits<double>::infinity();
    for (double eps : eps_list) {
        CauchyVerdict one = stat_cauchy(net, eps, policy, tol);
        if (!one.cauchy) all.cauchy = false;
        if (one.cauchy && eps < witness_eps) {
            witness_eps = eps;
            all.witness = one.witness;
        }
        for (auto& pe : one.per_eps) all.per_eps.push_back(std::move(pe));
    }
    if (!all.cauchy) all.witness.reset();
    return all;
}

std::string CauchyVerdict::to_text() const {
    std::ostringstream os;
    os << (cauchy ? "statistically cauchy" : "not statistically cauchy");
    if (witness) os << "  witness " << witness->to_string();
    os << "\n";
    for (const auto& [eps, r] : per_eps) {
        os << "  eps=" << format_double(eps) << "  stray density in ["
           << format_double(r.lower_est) << ", " << format_double(r.upper_est) << "]\n";
    }
    return os.str();
}

CauchyImplicationReport convergent_implies_cauchy(const Net& net, const Vec& x, double eps,
                                                  const TruncationPolicy& policy,
                                                  double tol) {
    CauchyImplicationReport rep;
    rep.premise = stat_converges_to(net, x, {eps / 2.0}, policy, tol);
    if (!rep.premise.converges) return rep; // not applicable
    rep.applicable = true;

    // Witness: frontier element whose value is nearest the limit; the
    // premise guarantees most frontier values are within eps/2 of x.
    const auto [frontier, horizon] = policy.refinement.back();
    std::vector<Element> bases = frontier_sample(net.ds, frontier, policy.frontier_sample_cap);
    double best_dist = std::numeric_limits<double>::infinity();
    std::optional<Element> gamma;
    for (const auto& b : bases) {
        double d = net.metric.distance(net.eval(b), x);
        if (d < best_dist) {
            best_dist = d;
            gamma = b;
        }
    }
    if (!gamma) return rep;
    rep.witness = gamma;
    rep.witness_distance = best_dist;

    rep.at_witness = cauchy_density_at(net, *gamma, eps, policy);
    rep.passes = rep.at_witness.upper_est <= tol;

    // Containment count: with d(x_g, x) < eps/2, the triangle inequality
    // forces {a: d(x_a, x_g) >= eps} inside {a: d(x_a, x) >= eps/2}.  Scan
    // the horizon and count violations (zero unless the witness itself is
    // farther than eps/2 from the limit).
    const Vec at_gamma = net.eval(*gamma);
    i64 checked = 0, violations = 0;
    net.ds.for_each_within(horizon, [&](const Element& a) {
        ++checked;
        Vec va = net.eval(a);
        if (net.metric.distance(va, at_gamma) >= eps && net.metric.distance(va, x) < eps / 2.0)
            ++violations;
    });
    rep.checked = checked;
    rep.violations = violations;
    return rep;
}

DensityReport pairwise_cauchy_density(const Net& net, const Element& gamma, double eps,
                                      const TruncationPolicy& policy) {
    net.ds.require_element(gamma);
    DirectedSet square = DirectedSet::product(net.ds, net.ds);
    const int d = net.ds.arity();
    auto eval = net.eval;
    auto metric = net.metric;
    auto ds = net.ds;
    SetPredicate bad = SetPredicate::from_fn([ds, eval, metric, gamma, eps, d](const Element& pair) {
        Element a{std::vector<i64>(pair.coords.begin(), pair.coords.begin() + d)};
        Element b{std::vector<i64>(pair.coords.begin() + d, pair.coords.end())};
        return ds.leq(gamma, a) && ds.leq(gamma, b) &&
               metric.distance(eval(a), eval(b)) >= eps;
    });
    return density(bad, square, policy);
}

CauchyProductReport cauchy_product_checks(const Net& net_x, const Net& net_y, PairMode mode,
                                          double eps, const TruncationPolicy& policy,
                                          double tol) {
    CauchyProductReport rep;
    rep.mode = mode;
    rep.x_verdict = stat_cauchy(net_x, eps, policy, tol);
    rep.y_verdict = stat_cauchy(net_y, eps, policy, tol);

    if (mode == PairMode::pair) {
        Net combined = pair_net(net_x, net_y).combined;
        rep.combined = stat_cauchy(combined, eps, policy, tol);
        const bool factors = rep.x_verdict.cauchy && rep.y_verdict.cauchy;
        rep.forward_holds = !factors || rep.combined.cauchy;

        // The combined-implies-factors direction needs tails of positive
        // density on both factor orders; check that at the factor witnesses
        // (or the minimal elements when no witness was found).
        auto star_base = [](const Net& n, const CauchyVerdict& v) {
            if (v.witness) return *v.witness;
            return Element{n.ds.min_coords()};
        };
        rep.star_x = condition_star(star_base(net_x, rep.x_verdict), net_x.ds, policy);
        rep.star_y = condition_star(star_base(net_y, rep.y_verdict), net_y.ds, policy);
        rep.converse_attempted = rep.star_x->holds && rep.star_y->holds;
        if (rep.converse_attempted)
            rep.converse_holds = !rep.combined.cauchy || factors;
    } else {
        Net combined = zip_net(net_x, net_y).combined;
        rep.combined = stat_cauchy(combined, eps, policy, tol);
        rep.iff_holds = rep.combined.cauchy == (rep.x_verdict.cauchy && rep.y_verdict.cauchy);
    }
    return rep;
}

std::string CauchyProductReport::to_text() const {
    std::ostringstream os;
    os << "mode: " << (mode == PairMode::pair ? "pair" : "zip") << "\n"
       << "x: " << (x_verdict.cauchy ? "cauchy" : "not cauchy") << "\n"
       << "y: " << (y_verdict.cauchy ? "cauchy" : "not cauchy") << "\n"
       << "combined: " << (combined.cauchy ? "cauchy" : "not cauchy") << "\n";
    if (mode == PairMode::pair) {
        os << "forward (factors => combined): " << (forward_holds ? "holds" : "violated") << "\n";
        os << "converse: "
           << (converse_attempted ? (converse_holds ? "holds" : "violated") : "not attempted")
           << "\n";
    } else {
        os << "iff: " << (iff_holds ? "holds" : "violated") << "\n";
    }
    return os.str();
}

UcMapReport uc_map_cauchy(const std::function<Vec(const Vec&)>& f, int out_dim,
                          const std::function<double(double)>& modulus, const Net& net,
                          double eps, const TruncationPolicy& policy, double tol) {
    UcMapReport rep;
    rep.eps = eps;
    rep.delta = modulus(eps);
    if (!(rep.delta > 0.0))
        throw std::invalid_argument("uc_map_cauchy: modulus must return a positive delta");
    rep.source = stat_cauchy(net, rep.delta, policy, tol);
    if (!rep.source.cauchy) return rep; // not applicable
    rep.applicable = true;

    Net image = map_net(f, out_dim, net);
    rep.image_at_witness = cauchy_density_at(image, *rep.source.witness, eps, policy);
    rep.passes = rep.image_at_witness.upper_est <= tol;
    return rep;
}

} // namespace netconv
