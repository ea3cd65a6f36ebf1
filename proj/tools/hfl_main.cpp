// hfl: exact-arithmetic computations for singular Hitchin fibres.
//
// Subcommands: strata, canon, heck-atlas, higgs, realpoints, oracle.
// Exit codes: 0 success, 1 property failure, 2 usage error.

#include "hfl/io.hpp"
#include "hfl/oracle.hpp"
#include "hfl/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<long> parse_zero_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw hfl::domain_error("bad zero order '" + tok + "'");
        }
    }
    if (out.empty()) throw hfl::domain_error("empty zero list");
    return out;
}

struct Options {
    std::string format = "json";
    // strata / realpoints
    long genus = 2;
    std::string zeros;
    bool unknown_sqrt = false;
    bool dot = false;
    // canon / higgs
    long d = 0;
    long m = 0;
    bool even = false;
    std::string a_text, b_text, matrix_text;
    long lambda = 0;
    // oracle
    std::string suite;
    std::uint64_t seed = 1;
    long cases = 0;
};

int run_strata(const Options& opt) {
    hfl::QDProfile p{opt.genus, parse_zero_list(opt.zeros), !opt.unknown_sqrt};
    p.validate();
    if (opt.dot || opt.format == "dot")
        std::cout << hfl::poset_dot(p);
    else if (opt.format == "text")
        std::cout << hfl::strata_report_text(p);
    else
        std::cout << hfl::strata_report_json(p) << "\n";
    return 0;
}

int run_realpoints(const Options& opt) {
    hfl::QDProfile p{opt.genus, parse_zero_list(opt.zeros), !opt.unknown_sqrt};
    p.validate();
    if (opt.format == "text")
        std::cout << hfl::realpoints_report_text(p);
    else
        std::cout << hfl::realpoints_report_json(p) << "\n";
    return 0;
}

int run_canon(const Options& opt) {
    hfl::Germ a = hfl::parse_germ(opt.a_text);
    hfl::Germ b = hfl::parse_germ(opt.b_text);
    if (opt.even) {
        if (opt.m < 1) throw hfl::domain_error("--even needs --m <local order>");
        hfl::EvenHeckeParam p(opt.m, a, b);
        std::cout << (opt.format == "text" ? hfl::even_report_text(p)
                                           : hfl::even_report_json(p) + "\n");
        return 0;
    }
    if (opt.d < 1 || opt.d % 2 == 0)
        throw hfl::domain_error("d must be odd for this subcommand; even zeros use --even");
    hfl::HeckeParam p(opt.d, a, b);
    std::cout << (opt.format == "text" ? hfl::canon_report_text(p)
                                       : hfl::canon_report_json(p) + "\n");
    return 0;
}

int run_atlas(const Options& opt) {
    if (opt.format == "text")
        std::cout << hfl::atlas_report_text(opt.d);
    else
        std::cout << hfl::atlas_report_json(opt.d) << "\n";
    return 0;
}

int run_higgs(const Options& opt) {
    if (!opt.matrix_text.empty()) {
        hfl::GermMatrix2 mtx = hfl::parse_matrix(opt.matrix_text);
        long lambda = opt.lambda;
        if (lambda == 0) {
            hfl::Germ det = mtx.det();
            lambda = det.order_certified("det order") / 2;
        }
        std::cout << hfl::normal_form_report_json({mtx, lambda}) << "\n";
        return 0;
    }
    if (opt.d < 1) throw hfl::domain_error("higgs needs either --matrix or --d with --a/--b");
    hfl::Germ a = hfl::parse_germ(opt.a_text);
    hfl::Germ b = hfl::parse_germ(opt.b_text);
    std::cout << hfl::hecke_field_report_json(opt.d, a, b) << "\n";
    return 0;
}

int run_oracle(const Options& opt) {
    if (!hfl::is_oracle_suite(opt.suite)) throw hfl::domain_error("unknown suite: " + opt.suite);
    hfl::SuiteResult r = hfl::run_oracle_suite(opt.suite, opt.seed, opt.cases);
    nlohmann::json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.cases;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    std::cout << j.dump(2) << "\n";
    std::cerr << "elapsed: " << r.seconds << "s\n"; // timing kept off stdout
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local models, Hecke-parameter moduli and stratification "
                 "combinatorics of singular Hitchin fibres"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--format", opt.format, "json|text|dot")->default_str("json");

    CLI::App* strata = app.add_subcommand("strata", "stratification report for a zero profile");
    strata->add_option("--genus", opt.genus, "genus of the base surface")->required();
    strata->add_option("--zeros", opt.zeros, "comma-separated zero orders (sum 4g-4)")->required();
    strata->add_flag("--dot", opt.dot, "emit the degeneration poset in DOT form");
    strata->add_flag("--unknown-sqrt", opt.unknown_sqrt,
                     "do not assert the no-global-square-root hypothesis");

    CLI::App* realpoints =
        app.add_subcommand("realpoints", "split-real point counts per stratum");
    realpoints->add_option("--genus", opt.genus)->required();
    realpoints->add_option("--zeros", opt.zeros)->required();

    CLI::App* canon = app.add_subcommand(
        "canon", "canonical form, u coordinates and chart images of a Hecke parameter");
    canon->add_option("--d", opt.d, "odd zero order");
    canon->add_option("--a", opt.a_text, "sigma-odd direction germ")->required();
    canon->add_option("--b", opt.b_text, "sigma-even direction germ")->required();
    canon->add_flag("--even", opt.even, "even-zero parameter (use --m)");
    canon->add_option("--m", opt.m, "local order at one preimage of an even zero");

    CLI::App* atlas = app.add_subcommand("heck-atlas", "chart atlas with generator polynomials");
    atlas->add_option("--d", opt.d, "odd zero order")->required();

    CLI::App* higgs =
        app.add_subcommand("higgs", "local Higgs field computations (model or normal form)");
    higgs->add_option("--d", opt.d, "odd zero order for the induced model");
    higgs->add_option("--a", opt.a_text, "direction germ a");
    higgs->add_option("--b", opt.b_text, "direction germ b");
    higgs->add_option("--matrix", opt.matrix_text, "traceless germ matrix to gauge-reduce");
    higgs->add_option("--lambda", opt.lambda, "half the determinant vanishing order");

    CLI::App* oracle = app.add_subcommand("oracle", "randomized/exhaustive property suites");
    oracle->add_option("--suite", opt.suite, "suite name")->required();
    oracle->add_option("--seed", opt.seed, "PRNG seed (recorded in the output)");
    oracle->add_option("--cases", opt.cases, "override the suite's case volume");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*strata) return run_strata(opt);
        if (*realpoints) return run_realpoints(opt);
        if (*canon) return run_canon(opt);
        if (*atlas) return run_atlas(opt);
        if (*higgs) return run_higgs(opt);
        if (*oracle) return run_oracle(opt);
    } catch (const hfl::precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const hfl::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
