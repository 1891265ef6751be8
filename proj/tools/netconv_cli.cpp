// Command-line workbench: truncated densities over directed index families,
// statistical convergence / Cauchy verdicts for nets given as expressions,
// gauge classification, order-axiom validation, and the built-in worked
// examples.
//
// Exit codes: 0 all assertions pass, 1 an assertion fails, 2 usage or parse
// error, 3 resource limit exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "netconv/axioms.hpp"
#include "netconv/cauchy.hpp"
#include "netconv/convergence.hpp"
#include "netconv/density.hpp"
#include "netconv/expr.hpp"
#include "netconv/fixtures.hpp"
#include "netconv/net.hpp"
#include "netconv/netspace.hpp"

namespace {

using namespace netconv;

struct Options {
    std::string family = "N";
    std::string set_expr;
    std::string net_expr;
    std::vector<double> limit;
    std::vector<double> eps = kDefaultEps;
    double tol = kDefaultDensityTol;
    std::vector<i64> gamma;
    i64 horizon = 10'000;
    i64 frontier = 0; // 0: use the desk default (horizon / 2)
    std::string format = "text";
    std::string out_path;
    i64 seed = 0; // reserved for generated-fixture subruns
};

TruncationPolicy make_policy(const Options& o) {
    TruncationPolicy p = o.frontier > 0 ? TruncationPolicy::single(o.frontier, o.horizon)
                                        : TruncationPolicy::desk(o.horizon);
    p.validate();
    return p;
}

// stdout gets the chosen format; --out always receives the CSV form.
int emit(const Options& o, const std::string& text, const std::string& csv) {
    std::cout << (o.format == "csv" ? csv : text);
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output path: " << o.out_path << "\n";
            return 2;
        }
        f << csv;
    }
    return 0;
}

Net net_from_expr(const Options& o, const DirectedSet& ds) {
    ExprPtr e = parse_expr(o.net_expr, ds.arity());
    return Net::scalar(ds, numeric_fn(e));
}

std::string estimate_csv(const EstimationResult& r, const char* which) {
    std::ostringstream os;
    os << "frontier,horizon,estimate\n";
    for (const auto& s : r.steps)
        os << s.frontier_bound << ',' << s.horizon_bound << ','
           << format_double(std::string(which) == "liminf" ? s.lower : s.upper) << "\n";
    os << "final," << which << ',' << format_double(r.value) << "\n";
    return os.str();
}

std::string estimate_text(const EstimationResult& r, const char* which) {
    std::ostringstream os;
    for (const auto& s : r.steps)
        os << "F=" << s.frontier_bound << " H=" << s.horizon_bound << "  "
           << format_double(std::string(which) == "liminf" ? s.lower : s.upper) << "\n";
    os << which << ": " << format_double(r.value) << "\n";
    return os.str();
}

int run_density(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    ExprPtr e = parse_expr(o.set_expr, ds.arity());
    DensityReport r = density(SetPredicate::from_fn(predicate_fn(e)), ds, make_policy(o));
    return emit(o, r.summary_text(), r.to_csv());
}

int run_estimate(const Options& o, const char* which) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    Net net = net_from_expr(o, ds);
    auto f = [&net](const Element& a) { return net.eval(a)[0]; };
    EstimationResult r = std::string(which) == "liminf"
                             ? liminf_estimate(f, ds, make_policy(o))
                             : limsup_estimate(f, ds, make_policy(o));
    return emit(o, estimate_text(r, which), estimate_csv(r, which));
}

int run_converge(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    Net net = net_from_expr(o, ds);
    Vec x = o.limit.empty() ? Vec{0.0} : Vec(o.limit.begin(), o.limit.end());
    ConvergenceVerdict v = stat_converges_to(net, x, o.eps, make_policy(o), o.tol);
    int rc = emit(o, v.to_text(), v.to_csv());
    return rc != 0 ? rc : (v.converges ? 0 : 1);
}

int run_cauchy(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    Net net = net_from_expr(o, ds);
    CauchyVerdict v = stat_cauchy_all(net, o.eps, make_policy(o), o.tol);
    std::ostringstream csv;
    csv << "eps,lower,upper,cauchy\n";
    for (const auto& [eps, r] : v.per_eps)
        csv << format_double(eps) << ',' << format_double(r.lower_est) << ','
            << format_double(r.upper_est) << ',' << (r.upper_est <= o.tol ? "yes" : "no") << "\n";
    csv << "verdict," << (v.cauchy ? "cauchy" : "not-cauchy") << ",witness,"
        << (v.witness ? v.witness->csv_coords() : std::string("none")) << "\n";
    int rc = emit(o, v.to_text(), csv.str());
    return rc != 0 ? rc : (v.cauchy ? 0 : 1);
}

int run_star(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    if (o.gamma.empty()) {
        std::cerr << "star: --gamma is required\n";
        return 2;
    }
    ConditionStarReport rep = condition_star(Element{o.gamma}, ds, make_policy(o));
    std::ostringstream text, csv;
    text << "base: " << rep.base.to_string() << "\n"
         << "tail upper density: " << format_double(rep.limsup_est) << "\n"
         << "positive: " << (rep.holds ? "yes" : "no") << "\n";
    csv << "base,limsup,holds\n"
        << rep.base.csv_coords() << ',' << format_double(rep.limsup_est) << ','
        << (rep.holds ? "yes" : "no") << "\n";
    int rc = emit(o, text.str(), csv.str());
    return rc != 0 ? rc : (rep.holds ? 0 : 1);
}

int run_classify(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    Net net = net_from_expr(o, ds);
    ClassificationRecord rec = classify(net, make_policy(o), o.eps, o.tol);
    std::string csv = ClassificationRecord::csv_header() + "\n" + rec.csv_row(o.net_expr) + "\n";
    return emit(o, rec.to_text(), csv);
}

int run_axioms(const Options& o) {
    DirectedSet ds = DirectedSet::parse_spec(o.family);
    AxiomReport rep = validate_axioms(ds, make_policy(o));
    std::ostringstream csv;
    csv << "check,result,detail\n";
    for (const auto& c : rep.checks)
        csv << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.detail << "\n";
    int rc = emit(o, rep.to_text(), csv.str());
    return rc != 0 ? rc : (rep.all_passed() ? 0 : 1);
}

int run_paper_examples(const Options& o) {
    std::vector<FixtureRow> rows = run_fixture_table();
    int rc = emit(o, fixtures_text(rows), fixtures_csv(rows));
    return rc != 0 ? rc : (all_fixtures_pass(rows) ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated-density and statistical-convergence workbench"};
    app.require_subcommand(1);

    Options o;

    auto add_common = [&o](CLI::App* sub, bool with_net, bool with_eps) {
        sub->add_option("--family", o.family,
                        "index family: N, N^2, N^3, div, div1, prod(a,b)")
            ->capture_default_str();
        sub->add_option("--horizon", o.horizon, "truncation horizon H")->capture_default_str();
        sub->add_option("--frontier", o.frontier,
                        "frontier bound F (default: H/2 with a two-step refinement)");
        sub->add_option("--format", o.format, "output format: text or csv")
            ->check(CLI::IsMember({"text", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", o.out_path, "write CSV to this path");
        sub->add_option("--seed", o.seed, "seed for generated subruns (reserved)");
        if (with_net) sub->add_option("--net", o.net_expr, "net expression, e.g. \"1/n\"");
        if (with_eps) {
            sub->add_option("--eps", o.eps, "probe radii")->capture_default_str();
            sub->add_option("--tol", o.tol, "density tolerance")->capture_default_str();
        }
    };

    auto* density_cmd = app.add_subcommand("density", "truncated density of a set expression");
    add_common(density_cmd, false, false);
    density_cmd->add_option("--set", o.set_expr, "membership predicate, e.g. \"n % 2 == 0\"")
        ->required();

    auto* liminf_cmd = app.add_subcommand("liminf", "truncated limit inferior of a net");
    add_common(liminf_cmd, true, false);
    auto* limsup_cmd = app.add_subcommand("limsup", "truncated limit superior of a net");
    add_common(limsup_cmd, true, false);

    auto* converge_cmd =
        app.add_subcommand("converge", "statistical-convergence verdict for a net");
    add_common(converge_cmd, true, true);
    converge_cmd->add_option("--limit", o.limit, "candidate limit (default 0)");

    auto* cauchy_cmd = app.add_subcommand("cauchy", "statistical-Cauchy verdict for a net");
    add_common(cauchy_cmd, true, true);

    auto* star_cmd = app.add_subcommand("star", "positive-tail-density check at a base point");
    add_common(star_cmd, false, false);
    star_cmd->add_option("--gamma", o.gamma, "base element coordinates")->expected(-1);

    auto* classify_cmd = app.add_subcommand("classify", "bounded/cauchy/convergent/null classes");
    add_common(classify_cmd, true, true);

    auto* axioms_cmd = app.add_subcommand("axioms", "validate the order axioms of a family");
    add_common(axioms_cmd, false, false);

    auto* paper_cmd = app.add_subcommand("paper-examples", "run the built-in worked examples");
    add_common(paper_cmd, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(density_cmd)) return run_density(o);
        if (app.got_subcommand(liminf_cmd)) return run_estimate(o, "liminf");
        if (app.got_subcommand(limsup_cmd)) return run_estimate(o, "limsup");
        if (app.got_subcommand(converge_cmd)) return run_converge(o);
        if (app.got_subcommand(cauchy_cmd)) return run_cauchy(o);
        if (app.got_subcommand(star_cmd)) return run_star(o);
        if (app.got_subcommand(classify_cmd)) return run_classify(o);
        if (app.got_subcommand(axioms_cmd)) return run_axioms(o);
        if (app.got_subcommand(paper_cmd)) return run_paper_examples(o);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const eval_error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2; // no subcommand dispatched
}
