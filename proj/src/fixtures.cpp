#include "netconv/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "netconv/cauchy.hpp"
#include "netconv/convergence.hpp"
#include "netconv/density.hpp"
#include "netconv/expr.hpp"
#include "netconv/net.hpp"
#include "netconv/netspace.hpp"

namespace netconv {

namespace {

// --- Shared ingredients -----------------------------------------------------

bool is_square(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

SetPredicate evens() {
    return SetPredicate::from_fn([](const Element& e) { return e.scalar() % 2 == 0; },
                                 AnalyticDensity::value(0.5));
}

SetPredicate odds() {
    return SetPredicate::from_fn([](const Element& e) { return e.scalar() % 2 != 0; });
}

SetPredicate multiples_of(i64 k) {
    return SetPredicate::from_fn([k](const Element& e) { return e.scalar() % k == 0; });
}

SetPredicate diagonal3() {
    return SetPredicate::from_fn([](const Element& e) {
        return e.coords[0] == e.coords[1] && e.coords[1] == e.coords[2];
    });
}

Net harmonic() {
    return Net::scalar(DirectedSet::naturals(),
                       [](const Element& e) { return 1.0 / static_cast<double>(e.scalar()); });
}

Net alternating() {
    return Net::scalar(DirectedSet::naturals(),
                       [](const Element& e) { return e.scalar() % 2 == 0 ? 1.0 : -1.0; });
}

// 1 on perfect squares, 1/n elsewhere: ordinary convergence fails, but the
// spikes sit on a set of vanishing density.
Net square_perturbed() {
    return Net::scalar(DirectedSet::naturals(), [](const Element& e) {
        i64 n = e.scalar();
        return is_square(n) ? 1.0 : 1.0 / static_cast<double>(n);
    });
}

// 1 on the diagonal of the cube order, 1/(x1+x2+x3) elsewhere.
Net cube_spike() {
    return Net::scalar(DirectedSet::grid(3), [](const Element& e) {
        if (e.coords[0] == e.coords[1] && e.coords[1] == e.coords[2]) return 1.0;
        return 1.0 / static_cast<double>(e.coords[0] + e.coords[1] + e.coords[2]);
    });
}

// 2 on perfect squares, 1 elsewhere: statistically convergent to 1, not null.
Net shifted_square_spikes() {
    return Net::scalar(DirectedSet::naturals(), [](const Element& e) {
        return is_square(e.scalar()) ? 2.0 : 1.0;
    });
}

FixtureRow row(std::string name, bool passed, std::string detail) {
    return FixtureRow{std::move(name), passed, std::move(detail)};
}

std::string in_brackets(const DensityReport& r) {
    return "[" + format_double(r.lower_est) + "; " + format_double(r.upper_est) + "] " +
           to_string(r.exists_flag);
}

// --- Density fixtures ---------------------------------------------------------

FixtureRow fx_cube_diagonal_density() {
    auto ds = DirectedSet::grid(3);
    DensityReport r = density(diagonal3(), ds, TruncationPolicy::desk(50));
    bool ok = r.upper_est <= 0.03 && r.lower_est <= r.upper_est;
    return row("diagonal-in-cube-has-null-density", ok, in_brackets(r));
}

FixtureRow fx_evens_density() {
    auto ds = DirectedSet::naturals();
    DensityReport r = density(evens(), ds, TruncationPolicy::desk(10'000));
    bool ok = std::abs(r.lower_est - 0.5) <= 0.01 && std::abs(r.upper_est - 0.5) <= 0.01 &&
              r.exists_flag == ExistsFlag::exists;
    return row("even-numbers-have-density-half", ok, in_brackets(r));
}

FixtureRow fx_divisor_parity_oscillation() {
    auto ds = DirectedSet::divisibility();
    const Ratio at_pow2 = ratio(odds(), Element{{i64{1} << 20}}, ds);
    Ratio at_pow3 = ratio(odds(), Element{{1594323}}, ds); // 3^13
    DensityReport r = density(odds(), ds, TruncationPolicy::desk(i64{1} << 20));
    bool ok = at_pow2 == Ratio(1, 21) && at_pow3 == Ratio::one() &&
              r.exists_flag == ExistsFlag::does_not_exist && r.lower_est <= 0.05 &&
              r.upper_est >= 0.95;
    std::ostringstream d;
    d << "ratio(2^20)=" << at_pow2.to_string() << " ratio(3^13)=" << at_pow3.to_string()
      << " " << in_brackets(r);
    return row("odd-numbers-under-divisibility-oscillate", ok, d.str());
}

FixtureRow fx_upset_density_one() {
    auto ds = DirectedSet::grid(2);
    Element g{{2, 2}};
    Ratio corner = ratio(SetPredicate::up_set_of(ds, g), Element{{200, 200}}, ds);
    DensityReport r = density(SetPredicate::up_set_of(ds, g), ds, TruncationPolicy::desk(200));
    bool ok = corner == Ratio(39601, 40000) && r.lower_est >= 0.95;
    return row("upset-corner-has-density-one", ok,
               "corner ratio " + corner.to_string() + " " + in_brackets(r));
}

FixtureRow fx_star_on_strict_divisors() {
    auto ds = DirectedSet::divisibility_excluding_one();
    auto policy = TruncationPolicy::desk(10'000);
    bool ok = true;
    std::ostringstream d;
    for (i64 g : {i64{2}, i64{3}, i64{5}}) {
        ConditionStarReport rep = condition_star(Element{{g}}, ds, policy);
        ok = ok && rep.holds && rep.limsup_est >= 0.5;
        d << "base " << g << ": " << format_double(rep.limsup_est) << "  ";
    }
    return row("positive-tail-density-on-strict-divisors", ok, d.str());
}

FixtureRow fx_empty_set_density() {
    DensityReport r =
        density(SetPredicate::empty_set(), DirectedSet::naturals(), TruncationPolicy::desk(1000));
    bool ok = r.lower_est == 0.0 && r.upper_est == 0.0 &&
              r.exists_flag == ExistsFlag::exists && r.empty_within_horizon;
    return row("empty-set-has-zero-density", ok, in_brackets(r));
}

FixtureRow fx_complement_identity() {
    auto ds = DirectedSet::naturals();
    UnionComplementRatios u = union_complement_ratios(evens(), odds(), Element{{360}}, ds);
    bool ok = u.complement_exact && u.r_complement_a == u.r_b && u.r_a == Ratio(1, 2);
    return row("complement-identity-is-exact", ok,
               u.r_a.to_string() + " + " + u.r_complement_a.to_string() + " = 1");
}

FixtureRow fx_union_subadditive() {
    auto ds = DirectedSet::naturals();
    UnionComplementRatios u =
        union_complement_ratios(evens(), multiples_of(3), Element{{360}}, ds);
    bool ok = u.subadditive && u.r_union == Ratio(2, 3) && u.r_intersection == Ratio(1, 6);
    return row("union-bound-is-exact", ok,
               "union " + u.r_union.to_string() + " <= " + u.r_a.to_string() + " + " +
                   u.r_b.to_string());
}

// --- Convergence fixtures -------------------------------------------------------

FixtureRow fx_harmonic_converges() {
    ConvergenceVerdict v =
        stat_converges_to(harmonic(), {0.0}, kDefaultEps, TruncationPolicy::desk(10'000));
    return row("harmonic-net-converges-statistically", v.converges,
               v.converges ? "all probe radii negligible" : "failed");
}

FixtureRow fx_square_perturbed_converges() {
    ConvergenceVerdict v =
        stat_converges_to(square_perturbed(), {0.0}, kDefaultEps, TruncationPolicy::desk(10'000));
    double worst = 0.0;
    for (const auto& [eps, r] : v.per_eps) worst = std::max(worst, r.upper_est);
    return row("sparse-square-spikes-keep-convergence", v.converges,
               "worst stray density " + format_double(worst));
}

FixtureRow fx_cube_spike_converges() {
    ConvergenceVerdict v =
        stat_converges_to(cube_spike(), {0.0}, kDefaultEps, TruncationPolicy::desk(150));
    double worst = 0.0;
    for (const auto& [eps, r] : v.per_eps) worst = std::max(worst, r.upper_est);
    return row("cube-diagonal-spike-net-converges", v.converges,
               "worst stray density " + format_double(worst));
}

FixtureRow fx_alternating_no_unique_limit() {
    UniquenessReport rep = uniqueness_check(alternating(), {1.0}, {-1.0}, {1.0},
                                            TruncationPolicy::desk(2000));
    bool ok = !rep.applicable && !rep.for_x.converges && !rep.for_y.converges;
    return row("alternating-net-has-no-statistical-limit", ok,
               "both candidate limits fail at radius 1");
}

FixtureRow fx_pair_harmonic_converges() {
    Net x = harmonic(), y = harmonic();
    PairNet pn = pair_net(x, y);
    ConvergenceVerdict v =
        stat_converges_to(pn.combined, {0.0, 0.0}, {0.5, 0.1}, TruncationPolicy::desk(800));
    return row("independent-harmonic-pair-converges", v.converges,
               v.converges ? "limit (0; 0)" : "failed");
}

FixtureRow fx_zip_converges() {
    Net x = harmonic();
    Net y = Net::scalar(DirectedSet::naturals(), [](const Element& e) {
        i64 n = e.scalar();
        return (n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n);
    });
    PairNet pn = zip_net(x, y);
    ConvergenceVerdict v =
        stat_converges_to(pn.combined, {0.0, 0.0}, kDefaultEps, TruncationPolicy::desk(10'000));
    return row("zip-of-decaying-nets-converges", v.converges,
               v.converges ? "limit (0; 0)" : "failed");
}

FixtureRow fx_project_consistency() {
    auto policy = TruncationPolicy::desk(800);
    const std::vector<double> eps = {0.5, 0.1};
    PairNet pn = pair_net(harmonic(), harmonic());
    ConvergenceVerdict combined = stat_converges_to(pn.combined, {0.0, 0.0}, eps, policy);
    ComponentVerdicts cv = project_verdict(pn, combined, policy);
    ConvergenceVerdict dx = stat_converges_to(pn.first, {0.0}, eps, policy);
    ConvergenceVerdict dy = stat_converges_to(pn.second, {0.0}, eps, policy);
    bool ok = cv.first.converges == dx.converges && cv.second.converges == dy.converges;
    double worst = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        worst = std::max(worst, std::abs(cv.first.per_eps[i].second.upper_est -
                                         dx.per_eps[i].second.upper_est));
        worst = std::max(worst, std::abs(cv.second.per_eps[i].second.upper_est -
                                         dy.per_eps[i].second.upper_est));
    }
    ok = ok && worst <= 1e-12;
    return row("pair-verdict-splits-to-factor-verdicts", ok,
               "largest projection discrepancy " + format_double(worst));
}

FixtureRow fx_squared_image_converges() {
    Net image = map_net([](const Vec& v) { return Vec{v[0] * v[0]}; }, 1, harmonic());
    ConvergenceVerdict v =
        stat_converges_to(image, {0.0}, kDefaultEps, TruncationPolicy::desk(10'000));
    return row("squared-harmonic-image-converges", v.converges,
               v.converges ? "image limit 0" : "failed");
}

FixtureRow fx_linearity_limits() {
    auto ds = DirectedSet::naturals();
    auto policy = TruncationPolicy::desk(10'000);
    Net a = Net::scalar(ds, [](const Element& e) { return 2.0 + 1.0 / static_cast<double>(e.scalar()); });
    Net y = Net::scalar(ds, [](const Element& e) { return 3.0 + 1.0 / static_cast<double>(e.scalar()); });
    LimitDetection sum = detect_stat_limit(add_nets(a, y, IndexMode::shared), kDefaultEps, policy);
    LimitDetection prod = detect_stat_limit(scale_nets(a, y, IndexMode::shared), kDefaultEps, policy);
    bool ok = sum.confirmed && std::abs(sum.candidate[0] - 5.0) <= 0.02 && prod.confirmed &&
              std::abs(prod.candidate[0] - 6.0) <= 0.02;
    return row("shared-index-sum-and-product-limits", ok,
               "sum limit " + format_double(sum.candidate[0]) + "  product limit " +
                   format_double(prod.candidate[0]));
}

// --- Cauchy fixtures ------------------------------------------------------------

FixtureRow fx_harmonic_cauchy() {
    CauchyVerdict v = stat_cauchy(harmonic(), 0.1, TruncationPolicy::desk(10'000));
    return row("harmonic-net-is-statistically-cauchy", v.cauchy && v.witness.has_value(),
               v.witness ? "witness " + v.witness->to_string() : "no witness");
}

FixtureRow fx_alternating_not_cauchy() {
    CauchyVerdict v = stat_cauchy(alternating(), 1.0, TruncationPolicy::desk(2000));
    double best = v.per_eps.empty() ? 1.0 : v.per_eps[0].second.upper_est;
    return row("alternating-net-is-not-cauchy", !v.cauchy,
               "best candidate stray density " + format_double(best));
}

FixtureRow fx_convergent_implies_cauchy() {
    CauchyImplicationReport rep =
        convergent_implies_cauchy(square_perturbed(), {0.0}, 0.2, TruncationPolicy::desk(10'000));
    bool ok = rep.applicable && rep.passes && rep.violations == 0;
    std::ostringstream d;
    d << "witness distance " << format_double(rep.witness_distance) << "  containment "
      << rep.checked << " checked / " << rep.violations << " violations";
    return row("closeness-to-limit-gives-pairwise-closeness", ok, d.str());
}

FixtureRow fx_pairwise_density() {
    DensityReport r =
        pairwise_cauchy_density(harmonic(), Element{{10}}, 0.1, TruncationPolicy::desk(500));
    bool ok = r.upper_est <= 0.05;
    return row("pairwise-closeness-past-a-base", ok, in_brackets(r));
}

FixtureRow fx_pair_cauchy_product() {
    CauchyProductReport rep = cauchy_product_checks(harmonic(), harmonic(), PairMode::pair, 0.1,
                                                    TruncationPolicy::desk(500));
    bool ok = rep.combined.cauchy && rep.forward_holds && rep.converse_attempted &&
              rep.converse_holds;
    return row("cauchy-factors-combine-over-pairs", ok,
               rep.combined.cauchy ? "combined cauchy with both tails positive" : "failed");
}

FixtureRow fx_zip_cauchy_iff() {
    CauchyProductReport rep = cauchy_product_checks(harmonic(), alternating(), PairMode::zip, 1.0,
                                                    TruncationPolicy::desk(2000));
    bool ok = rep.iff_holds && rep.x_verdict.cauchy && !rep.y_verdict.cauchy &&
              !rep.combined.cauchy;
    return row("zip-cauchy-matches-componentwise", ok,
               "x cauchy; y not; combined not; equivalence respected");
}

FixtureRow fx_uc_map() {
    UcMapReport rep = uc_map_cauchy([](const Vec& v) { return Vec{2.0 * v[0]}; }, 1,
                                    [](double eps) { return eps / 2.0; }, harmonic(), 0.1,
                                    TruncationPolicy::desk(10'000));
    bool ok = rep.applicable && rep.passes;
    return row("modulus-carries-cauchyness-through-maps", ok,
               "image stray density " + format_double(rep.image_at_witness.upper_est));
}

// --- Gauge / classification fixtures ----------------------------------------------

FixtureRow fx_gauge_values() {
    auto policy = TruncationPolicy::desk(1000);
    BalancedNeighborhood unit(1.0);
    GaugeValue g1 = gauge(harmonic(), unit, policy);
    GaugeValue g0 = gauge(Net::constant(DirectedSet::naturals(), {0.0}), unit, policy);
    bool two_in = in_N_U(Net::constant(DirectedSet::naturals(), {2.0}), unit, policy);
    bool ok = !g1.infinite && g1.value == 1.0 && g0.infinite && g0.to_string() == "inf" && two_in;
    return row("gauge-of-harmonic-net-is-radius", ok,
               "harmonic " + g1.to_string() + "  zero net " + g0.to_string());
}

FixtureRow fx_gauge_scaling() {
    auto policy = TruncationPolicy::desk(1000);
    BalancedNeighborhood unit(1.0);
    GaugeScalingReport rep = gauge_scaling_property(harmonic(), unit, 2.0, policy);
    GaugeValue doubled = gauge(harmonic(), BalancedNeighborhood(2.0), policy);
    bool radius_linear = !doubled.infinite && doubled.value == 2.0 * rep.base.value;
    return row("gauge-scales-inversely-with-the-net", rep.holds && radius_linear,
               "scaling error " + format_double(rep.error));
}

FixtureRow fx_classify_harmonic() {
    ClassificationRecord rec = classify(harmonic(), TruncationPolicy::desk(10'000));
    bool ok = rec.in_m && rec.in_m_cy && rec.in_m_ct && rec.in_m_0 && rec.chain_ok();
    auto flag = [](bool b) { return b ? '1' : '0'; };
    std::string flags{flag(rec.in_m), flag(rec.in_m_cy), flag(rec.in_m_ct), flag(rec.in_m_0)};
    return row("harmonic-net-lands-in-every-class", ok, "flags " + flags);
}

FixtureRow fx_classify_shifted() {
    ClassificationRecord rec = classify(shifted_square_spikes(), TruncationPolicy::desk(10'000));
    bool ok = rec.in_m && rec.in_m_cy && rec.in_m_ct && !rec.in_m_0 && rec.chain_ok() &&
              std::abs(rec.detected_limit[0] - 1.0) <= 0.02;
    return row("shifted-spikes-converge-but-not-to-zero", ok,
               "detected limit " + format_double(rec.detected_limit[0]));
}

FixtureRow fx_classify_alternating() {
    ClassificationRecord rec = classify(alternating(), TruncationPolicy::desk(2000));
    bool ok = rec.in_m && !rec.in_m_cy && !rec.in_m_ct && !rec.in_m_0 && rec.chain_ok();
    return row("alternating-net-is-bounded-only", ok,
               "sup-norm " + format_double(rec.sup_norm));
}

// --- Expression round-trip spot check ---------------------------------------------

FixtureRow fx_expression_language() {
    ExprPtr diag = parse_expr("if x1==x2 && x2==x3 then 1 else 1/(x1+x2+x3)", 3);
    Value on = eval_expr(*diag, Element{{2, 2, 2}});
    Value off = eval_expr(*diag, Element{{3, 3, 4}});
    ExprPtr reparsed = parse_expr(pretty(*diag), 3);
    bool ok = on.kind == Value::Kind::integer && on.i == 1 &&
              std::abs(off.as_double() - 0.1) < 1e-15 && ast_equal(*diag, *reparsed);
    return row("expression-language-round-trips", ok, pretty(*diag));
}

} // namespace

std::vector<FixtureRow> run_fixture_table() {
    return {
        fx_cube_diagonal_density(),
        fx_evens_density(),
        fx_divisor_parity_oscillation(),
        fx_upset_density_one(),
        fx_star_on_strict_divisors(),
        fx_empty_set_density(),
        fx_complement_identity(),
        fx_union_subadditive(),
        fx_harmonic_converges(),
        fx_square_perturbed_converges(),
        fx_cube_spike_converges(),
        fx_alternating_no_unique_limit(),
        fx_pair_harmonic_converges(),
        fx_zip_converges(),
        fx_project_consistency(),
        fx_squared_image_converges(),
        fx_linearity_limits(),
        fx_harmonic_cauchy(),
        fx_alternating_not_cauchy(),
        fx_convergent_implies_cauchy(),
        fx_pairwise_density(),
        fx_pair_cauchy_product(),
        fx_zip_cauchy_iff(),
        fx_uc_map(),
        fx_gauge_values(),
        fx_gauge_scaling(),
        fx_classify_harmonic(),
        fx_classify_shifted(),
        fx_classify_alternating(),
        fx_expression_language(),
    };
}

bool all_fixtures_pass(const std::vector<FixtureRow>& rows) {
    for (const auto& r : rows)
        if (!r.passed) return false;
    return true;
}

std::string fixtures_text(const std::vector<FixtureRow>& rows) {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.passed ? "[pass] " : "[FAIL] ") << r.name;
        for (std::size_t i = r.name.size(); i < width + 2; ++i) os << ' ';
        os << r.detail << "\n";
    }
    os << (all_fixtures_pass(rows) ? "all fixtures pass" : "FIXTURE FAILURES PRESENT") << "\n";
    return os.str();
}

std::string fixtures_csv(const std::vector<FixtureRow>& rows) {
    std::ostringstream os;
    os << "fixture,result,detail\n";
    for (const auto& r : rows)
        os << r.name << ',' << (r.passed ? "pass" : "fail") << ',' << r.detail << "\n";
    os << "summary," << (all_fixtures_pass(rows) ? "pass" : "fail") << ','
       << rows.size() << " fixtures\n";
    return os.str();
}

} // namespace netconv
