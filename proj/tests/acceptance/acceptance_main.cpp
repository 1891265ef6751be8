// Acceptance gate: one check per shipping criterion, each printed as a
// [PASS]/[FAIL] line with its runtime.  Exits 0 only when every criterion
// passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "netconv/axioms.hpp"
#include "netconv/cauchy.hpp"
#include "netconv/convergence.hpp"
#include "netconv/density.hpp"
#include "netconv/net.hpp"
#include "netconv/netspace.hpp"

namespace {

using namespace netconv;
namespace fs = std::filesystem;

// --- tiny deterministic RNG (splitmix64) -----------------------------------

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    i64 integer(i64 lo, i64 hi) { // inclusive
        return lo + static_cast<i64>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t hash_element(const Element& e, uint64_t seed) {
    uint64_t h = mix64(seed ^ 0x5bf0'3635'dc2c'34eaULL);
    for (i64 c : e.coords) h = mix64(h ^ static_cast<uint64_t>(c));
    return h;
}

double hash_unit(const Element& e, uint64_t seed) {
    return static_cast<double>(hash_element(e, seed) >> 11) * 0x1.0p-53;
}

bool is_square(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

// --- criterion runner --------------------------------------------------------

struct Outcome {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_seconds,
                   const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_seconds <= 0.0 || seconds < budget_seconds;
    bool passed = out.ok && in_budget;
    if (!passed) ++g_failures;

    std::ostringstream line;
    line << (passed ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << seconds << "s";
    if (budget_seconds > 0.0) line << " / budget " << budget_seconds << "s";
    line << ")";
    if (!out.detail.empty()) line << "  " << out.detail;
    if (out.ok && !in_budget) line << "  [over time budget]";
    std::cout << line.str() << "\n" << std::flush;
}

// --- shared fixtures ----------------------------------------------------------

const DirectedSet kNat = DirectedSet::naturals();

Net decaying_net(double c, double a) {
    return Net::scalar(kNat, [c, a](const Element& e) {
        return c + a / static_cast<double>(e.scalar());
    });
}

// --- criteria ------------------------------------------------------------------

Outcome diag_cube_density() {
    auto diag = SetPredicate::from_fn([](const Element& e) {
        return e.coords[0] == e.coords[1] && e.coords[1] == e.coords[2];
    });
    auto rep = density(diag, DirectedSet::grid(3), TruncationPolicy::desk(50));
    Outcome out;
    out.ok = rep.upper_est <= 0.03 && rep.lower_est <= rep.upper_est;
    out.detail = "upper " + format_double(rep.upper_est);
    return out;
}

Outcome evens_density() {
    auto evens = SetPredicate::from_fn([](const Element& e) { return e.scalar() % 2 == 0; });
    auto rep = density(evens, kNat, TruncationPolicy::desk(10'000));
    Outcome out;
    out.ok = std::abs(rep.lower_est - 0.5) <= 0.01 && std::abs(rep.upper_est - 0.5) <= 0.01 &&
             rep.exists_flag == ExistsFlag::exists;
    out.detail = "lower " + format_double(rep.lower_est) + ", upper " +
                 format_double(rep.upper_est);
    return out;
}

Outcome divisor_oscillation() {
    auto div = DirectedSet::divisibility();
    auto odds = SetPredicate::from_fn([](const Element& e) { return e.scalar() % 2 == 1; });
    Outcome out;

    const Ratio at_pow2 = ratio(odds, Element{1 << 20}, div);
    const Ratio at_pow3 = ratio(odds, Element{1'594'323}, div); // 3^13
    if (at_pow2 != Ratio(1, 21)) {
        out.detail = "ratio at 2^20 was " + at_pow2.to_string();
        return out;
    }
    if (at_pow3 != Ratio(1, 1)) {
        out.detail = "ratio at 3^13 was " + at_pow3.to_string();
        return out;
    }

    auto rep = density(odds, div, TruncationPolicy::desk(1 << 20));
    out.ok = rep.exists_flag == ExistsFlag::does_not_exist && rep.lower_est <= 0.05 &&
             rep.upper_est >= 0.95;
    out.detail = "lower " + format_double(rep.lower_est) + ", upper " +
                 format_double(rep.upper_est);
    return out;
}

Outcome grid_up_set_density() {
    auto g2 = DirectedSet::grid(2);
    auto up = SetPredicate::up_set_of(g2, Element{{2, 2}});
    Outcome out;

    const Ratio corner = ratio(up, Element{{200, 200}}, g2);
    if (corner != Ratio(199 * 199, 200 * 200)) {
        out.detail = "corner ratio was " + corner.to_string();
        return out;
    }

    auto rep = density(up, g2, TruncationPolicy::desk(200));
    out.ok = rep.lower_est >= 0.95;
    out.detail = "lower " + format_double(rep.lower_est);
    return out;
}

Outcome divisor_tail_positivity() {
    auto div1 = DirectedSet::divisibility_excluding_one();
    auto policy = TruncationPolicy::desk(10'000);
    Outcome out;
    out.ok = true;
    for (i64 g : {2, 3, 5}) {
        auto rep = condition_star(Element{g}, div1, policy);
        if (!rep.holds || rep.limsup_est < 0.5) {
            out.ok = false;
            out.detail = "failed at base " + std::to_string(g) + " (limsup " +
                         format_double(rep.limsup_est) + ")";
            return out;
        }
    }
    out.detail = "bases 2, 3, 5";
    return out;
}

Outcome convergence_implies_cauchy_suite() {
    Outcome out;
    int checked = 0;

    // Decaying nets on the naturals with a spike on the squares.
    for (int k = 0; k < 80; ++k) {
        SplitMix64 rng(0xCA0C'0000ULL + static_cast<uint64_t>(k));
        const double c = rng.range(-2.0, 2.0);
        const double a = rng.range(0.2, 1.0);
        const double p = rng.range(0.3, 3.0) * (rng.next() % 2 ? 1.0 : -1.0);
        auto net = Net::scalar(kNat, [c, a, p](const Element& e) {
            double v = c + a / static_cast<double>(e.scalar());
            if (is_square(e.scalar())) v += p;
            return v;
        });
        auto policy = TruncationPolicy::desk(k % 2 == 0 ? 2000 : 4000);
        // The one-dimensional tails are monotone between spikes, so the rung
        // extrema live at the sampled endpoints and lighter caps give the
        // same verdicts at a fraction of the cost.
        policy.frontier_sample_cap = 512;
        policy.upset_sample_cap = 512;
        auto rep = convergent_implies_cauchy(net, Vec{c}, 0.2, policy);
        ++checked;
        if (!rep.applicable || !rep.passes || rep.violations != 0) {
            out.detail = "naturals fixture " + std::to_string(k) + " failed";
            return out;
        }
    }

    // Plane-indexed nets with a spike on the diagonal.
    auto g2 = DirectedSet::grid(2);
    for (int k = 0; k < 20; ++k) {
        SplitMix64 rng(0xCA0C'1000ULL + static_cast<uint64_t>(k));
        const double c = rng.range(-2.0, 2.0);
        const double a = rng.range(0.5, 2.0);
        const double p = rng.range(0.3, 3.0);
        auto net = Net::scalar(g2, [c, a, p](const Element& e) {
            double v = c + a / static_cast<double>(e.coords[0] + e.coords[1]);
            if (e.coords[0] == e.coords[1]) v += p;
            return v;
        });
        auto policy = TruncationPolicy::desk(400);
        policy.frontier_sample_cap = 512;
        policy.upset_sample_cap = 512;
        auto rep = convergent_implies_cauchy(net, Vec{c}, 0.2, policy);
        ++checked;
        if (!rep.applicable || !rep.passes || rep.violations != 0) {
            out.detail = "plane fixture " + std::to_string(k) + " failed";
            return out;
        }
    }

    out.ok = true;
    out.detail = std::to_string(checked) + " fixtures";
    return out;
}

Outcome projected_pair_verdicts() {
    Outcome out;
    auto policy = TruncationPolicy::desk(400);
    policy.frontier_sample_cap = 1024;
    policy.upset_sample_cap = 512;
    const std::vector<double> eps = {0.5, 0.1};
    double worst = 0.0;

    for (int k = 0; k < 25; ++k) {
        SplitMix64 rng(0xBAB0'2000ULL + static_cast<uint64_t>(k));
        const double c1 = rng.range(-2.0, 2.0), a1 = rng.range(0.2, 1.5);
        const double c2 = rng.range(-2.0, 2.0), a2 = rng.range(0.2, 1.5);
        Net x = decaying_net(c1, a1);
        // Every fifth pair gets a swinging second factor that fails the probes.
        Net y = (k % 5 == 4)
                    ? Net::scalar(kNat, [c2](const Element& e) {
                          return c2 + (e.scalar() % 2 == 0 ? 1.0 : -1.0);
                      })
                    : decaying_net(c2, a2);

        PairNet pn = pair_net(x, y);
        auto combined = stat_converges_to(pn.combined, Vec{c1, c2}, eps, policy);
        auto projected = project_verdict(pn, combined, policy);
        auto direct_x = stat_converges_to(x, Vec{c1}, eps, policy);
        auto direct_y = stat_converges_to(y, Vec{c2}, eps, policy);

        if (projected.first.converges != direct_x.converges ||
            projected.second.converges != direct_y.converges) {
            out.detail = "verdict mismatch on pair " + std::to_string(k);
            return out;
        }
        for (std::size_t i = 0; i < eps.size(); ++i) {
            worst = std::max(worst, std::abs(projected.first.per_eps[i].second.upper_est -
                                             direct_x.per_eps[i].second.upper_est));
            worst = std::max(worst, std::abs(projected.second.per_eps[i].second.upper_est -
                                             direct_y.per_eps[i].second.upper_est));
        }
        if (worst > 1e-12) {
            out.detail = "per-eps upper drift " + format_double(worst) + " on pair " +
                         std::to_string(k);
            return out;
        }
    }
    out.ok = true;
    out.detail = "25 pairs, worst drift " + format_double(worst);
    return out;
}

Outcome linearity_of_limits() {
    Outcome out;
    auto policy = TruncationPolicy::desk(4000);

    // x -> 0, y -> 1; the shared-index sum must detect a limit near 1.  Gentle
    // slopes keep the tightest probe's exceptional set well under tolerance.
    Net x = decaying_net(0.0, 1.0);
    Net y = decaying_net(1.0, 0.5);
    auto sum = detect_stat_limit(add_nets(x, y, IndexMode::shared), kDefaultEps, policy);
    if (!sum.confirmed || std::abs(sum.candidate[0] - 1.0) > 0.02) {
        out.detail = "sum limit " + format_double(sum.candidate[0]);
        return out;
    }

    // a -> 2, y -> 3; the scalar product must detect a limit near 6.
    Net a = decaying_net(2.0, 0.5);
    Net z = decaying_net(3.0, -0.5);
    auto prod = detect_stat_limit(scale_nets(a, z, IndexMode::shared), kDefaultEps, policy);
    if (!prod.confirmed || std::abs(prod.candidate[0] - 6.0) > 0.02) {
        out.detail = "product limit " + format_double(prod.candidate[0]);
        return out;
    }

    out.ok = true;
    out.detail = "sum " + format_double(sum.candidate[0]) + ", product " +
                 format_double(prod.candidate[0]);
    return out;
}

Outcome exact_counting_identities() {
    Outcome out;
    const std::vector<DirectedSet> families = {
        kNat,
        DirectedSet::grid(2),
        DirectedSet::grid(3),
        DirectedSet::divisibility(),
        DirectedSet::divisibility_excluding_one(),
        DirectedSet::product(kNat, DirectedSet::divisibility()),
    };

    for (int k = 0; k < 1000; ++k) {
        const DirectedSet& ds = families[static_cast<std::size_t>(k) % families.size()];
        SplitMix64 rng(0x1DEA'3000ULL + static_cast<uint64_t>(k));

        const uint64_t seed_a = rng.next(), seed_b = rng.next();
        const double thresh_a = rng.range(0.1, 0.9), thresh_b = rng.range(0.1, 0.9);
        auto A = SetPredicate::from_fn([seed_a, thresh_a](const Element& e) {
            return hash_unit(e, seed_a) < thresh_a;
        });
        auto B = SetPredicate::from_fn([seed_b, thresh_b](const Element& e) {
            return hash_unit(e, seed_b) < thresh_b;
        });

        const i64 hi = ds.arity() == 1 ? 30 : (ds.arity() == 2 ? 14 : 9);
        std::vector<i64> coords(ds.min_coords());
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] = rng.integer(coords[i], hi);
        Element beta{coords};

        auto r = union_complement_ratios(A, B, beta, ds);
        const bool inclusion_exclusion = (r.r_union + r.r_intersection) == (r.r_a + r.r_b);
        if (!r.complement_exact || !r.subadditive || !inclusion_exclusion) {
            out.detail = "identity broke at triple " + std::to_string(k) + " on " +
                         ds.spec_string() + " at " + beta.to_string();
            return out;
        }
    }
    out.ok = true;
    out.detail = "1000 triples over 6 families";
    return out;
}

Outcome gauge_properties() {
    Outcome out;
    auto policy = TruncationPolicy::desk(500);
    const std::vector<double> scales = {2.0, -3.0, 0.5, 7.25};
    int classified = 0;

    for (int k = 0; k < 100; ++k) {
        SplitMix64 rng(0x6A06'4000ULL + static_cast<uint64_t>(k));
        Net net;
        if (k % 10 == 9) {
            net = Net::constant(kNat, Vec{0.0});
        } else if (k % 3 == 0) {
            const uint64_t seed = rng.next();
            const double amp = rng.range(0.5, 4.0);
            net = Net::scalar(kNat, [seed, amp](const Element& e) {
                return amp * (2.0 * hash_unit(e, seed) - 1.0);
            });
        } else if (k % 3 == 1) {
            const double amp = rng.range(0.5, 4.0), freq = rng.range(0.1, 3.0);
            net = Net::scalar(kNat, [amp, freq](const Element& e) {
                return amp * std::sin(freq * static_cast<double>(e.scalar()));
            });
        } else {
            net = decaying_net(rng.range(-2.0, 2.0), rng.range(0.2, 3.0));
        }

        auto g1 = gauge(net, BalancedNeighborhood(1.0), policy);
        auto g2 = gauge(net, BalancedNeighborhood(2.0), policy);
        if (k % 10 == 9) {
            if (!g1.infinite || !g2.infinite || g1.to_string() != "inf") {
                out.detail = "zero net missed the infinity sentinel";
                return out;
            }
        } else {
            if (g1.infinite ||
                std::abs(g2.value - 2.0 * g1.value) > 1e-12 * std::max(1.0, g1.value)) {
                out.detail = "radius linearity broke on net " + std::to_string(k);
                return out;
            }
        }
        for (double c : scales) {
            auto rep = gauge_scaling_property(net, BalancedNeighborhood(1.0), c, policy);
            if (!rep.holds) {
                out.detail = "homogeneity broke on net " + std::to_string(k) + " at c=" +
                             format_double(c);
                return out;
            }
        }
        if (k % 8 == 0) {
            auto rec = classify(net, policy, {0.5});
            ++classified;
            if (!rec.chain_ok()) {
                out.detail = "class chain broke on net " + std::to_string(k);
                return out;
            }
        }
    }
    out.ok = true;
    out.detail = "100 nets, " + std::to_string(classified) + " classified";
    return out;
}

Outcome estimator_matches_double_loop() {
    Outcome out;

    for (int k = 0; k < 50; ++k) {
        SplitMix64 rng(0x0ACE'5000ULL + static_cast<uint64_t>(k));
        const uint64_t seed = rng.next();
        auto f = [seed](const Element& e) { return 6.0 * hash_unit(e, seed) - 3.0; };

        const i64 horizon = 40 + 32 * (k % 6);
        TruncationPolicy policy = (k % 2 == 0)
                                      ? TruncationPolicy::desk(horizon)
                                      : TruncationPolicy::single(horizon / 3 + 1, horizon);

        auto lo = liminf_estimate(f, kNat, policy);
        auto hi = limsup_estimate(f, kNat, policy);

        for (std::size_t r = 0; r < policy.refinement.size(); ++r) {
            const auto& [fb, hb] = policy.refinement[r];
            double best_lo = -1e300, best_hi = 1e300;
            for (i64 b = 1; b <= fb; ++b) {
                double tail_min = 1e300, tail_max = -1e300;
                for (i64 a = b; a <= hb; ++a) {
                    double v = f(Element{a});
                    tail_min = std::min(tail_min, v);
                    tail_max = std::max(tail_max, v);
                }
                best_lo = std::max(best_lo, tail_min);
                best_hi = std::min(best_hi, tail_max);
            }
            if (lo.steps[r].lower != best_lo || hi.steps[r].upper != best_hi) {
                out.detail = "rung " + std::to_string(r) +
                             " diverged from the oracle on net " + std::to_string(k);
                return out;
            }
        }
        if (lo.value != lo.steps.back().lower || hi.value != hi.steps.back().upper) {
            out.detail = "final value is not the last rung on net " + std::to_string(k);
            return out;
        }
    }
    out.ok = true;
    out.detail = "50 nets, exact equality";
    return out;
}

// --- CLI golden run -----------------------------------------------------------

#ifndef NETCONV_CLI_PATH
#error "NETCONV_CLI_PATH must point at the built command-line binary"
#endif

int run_cli_to(const std::string& args, const fs::path& out_path) {
    std::string cmd = std::string("\"") + NETCONV_CLI_PATH + "\" " + args + " --out " +
                      out_path.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Outcome worked_examples_golden() {
    Outcome out;
    fs::path a = fs::temp_directory_path() / "netconv_accept_a.csv";
    fs::path b = fs::temp_directory_path() / "netconv_accept_b.csv";

    int rc1 = run_cli_to("paper-examples --format csv", a);
    int rc2 = run_cli_to("paper-examples --format csv", b);
    std::string csv_a = slurp(a), csv_b = slurp(b);
    std::error_code ec;
    fs::remove(a, ec);
    fs::remove(b, ec);

    if (rc1 != 0 || rc2 != 0) {
        out.detail = "exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2);
        return out;
    }
    if (csv_a.empty() || csv_a != csv_b) {
        out.detail = "csv outputs differ between runs";
        return out;
    }

    std::istringstream lines(csv_a);
    std::string line;
    int rows = 0;
    std::getline(lines, line); // header
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        std::string result = line.substr(c1 + 1, c2 - c1 - 1);
        if (line.rfind("summary,", 0) == 0) {
            if (result != "pass") {
                out.detail = "summary row reported " + result;
                return out;
            }
            continue;
        }
        ++rows;
        if (result != "pass") {
            out.detail = "row failed: " + line.substr(0, c1);
            return out;
        }
    }
    out.ok = rows > 0;
    out.detail = std::to_string(rows) + " rows, byte-identical reruns";
    return out;
}

} // namespace

int main() {
    run_criterion(1, "thin diagonal of the cube has density 0", 5.0, diag_cube_density);
    run_criterion(2, "evens have density one half", 1.0, evens_density);
    run_criterion(3, "parity density over divisibility does not settle", 10.0,
                  divisor_oscillation);
    run_criterion(4, "up-sets of the plane have full density", 0.0, grid_up_set_density);
    run_criterion(5, "tail positivity over divisibility-excluding-one", 0.0,
                  divisor_tail_positivity);
    run_criterion(6, "statistical convergence implies statistical cauchyness", 30.0,
                  convergence_implies_cauchy_suite);
    run_criterion(7, "projected pair verdicts match direct component runs", 0.0,
                  projected_pair_verdicts);
    run_criterion(8, "limits are additive and multiplicative", 0.0, linearity_of_limits);
    run_criterion(9, "exact union and complement counting identities", 0.0,
                  exact_counting_identities);
    run_criterion(10, "gauge homogeneity, radius linearity, class chain", 0.0,
                  gauge_properties);
    run_criterion(11, "estimator equals the literal double loop", 0.0,
                  estimator_matches_double_loop);
    run_criterion(12, "worked-example table passes with byte-identical csv", 0.0,
                  worked_examples_golden);

    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
