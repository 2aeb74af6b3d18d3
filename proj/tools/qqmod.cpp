// qqmod: command-line front end for the quasi-quadratic module calculus.
// Exit codes: 0 success, 1 domain error (machine-readable code in the
// output), 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qq/catalog.hpp"
#include "qq/error.hpp"
#include "qq/json_io.hpp"
#include "qq/oracle.hpp"
#include "qq/pan_axioms.hpp"
#include "qq/suites.hpp"

namespace {

struct Options {
    bool json = false;
    std::optional<unsigned> precision;
};

qq::Series read_series(const std::string& text, const Options& opt) {
    if (!text.empty() && text.front() == '{')
        return qq::series_from_json(qq::json::parse(text));
    return qq::parse_series(text, opt.precision);
}

void emit(const Options& opt, const qq::json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QQMOD_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw qq::error(qq::errc::parse, "QQMOD_SEED is not a number");
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of quasi-quadratic modules over R + X*C[[X]]"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    unsigned precision_arg = 0;
    auto* prec_opt = app.add_option("--precision", precision_arg,
                                    "override series precision (max 64)");

    std::string module_in, a_in, b_in, series_in, classifier_in, suite_name;
    std::vector<std::string> series_list, descriptor_list;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t count = 0;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed (default: QQMOD_SEED or 0)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    auto* member = app.add_subcommand("member", "decide membership of a series");
    member->add_option("--module", module_in, "module descriptor (JSON)")->required();
    member->add_option("--series", series_in, "series (text or JSON)")->required();

    auto* intersect = app.add_subcommand("intersect", "intersection of two modules");
    intersect->add_option("--a", a_in)->required();
    intersect->add_option("--b", b_in)->required();

    auto* sum = app.add_subcommand("sum", "sum of two modules");
    sum->add_option("--a", a_in)->required();
    sum->add_option("--b", b_in)->required();

    auto* fg = app.add_subcommand("fg", "decide finite generation");
    fg->add_option("--module", module_in)->required();

    auto* generators = app.add_subcommand("generators", "finite generating set");
    generators->add_option("--module", module_in)->required();

    auto* ideal = app.add_subcommand("ideal", "decide whether the module is an ideal");
    ideal->add_option("--module", module_in)->required();

    auto* decompose =
        app.add_subcommand("decompose", "square-scale decomposition of a series");
    decompose->add_option("--series", series_in)->required();

    auto* from_gens =
        app.add_subcommand("from-gens", "closure of finitely many generators");
    from_gens->add_option("--series", series_list, "generator (repeatable)")->required();

    auto* verify_axioms = app.add_subcommand(
        "verify-axioms", "check the leading-coefficient map axioms on random samples");
    add_seed(verify_axioms);
    verify_axioms->add_option("--count", count, "sample pairs (default 1000)");

    auto* char2 = app.add_subcommand("char2", "characteristic-two calculus");
    char2->require_subcommand(1);
    auto* c2member = char2->add_subcommand("member", "descriptor membership");
    c2member->add_option("--module", module_in)->required();
    c2member->add_option("--series", series_in, "series text, e.g. w*X^{3/2} + X^2");
    c2member->add_option("--descriptor", a_in, "descriptor JSON, e.g. {\"v\":\"1\",\"p\":2}");
    auto* c2intersect = char2->add_subcommand("intersect", "intersection");
    c2intersect->add_option("--a", a_in)->required();
    c2intersect->add_option("--b", b_in)->required();
    auto* c2sum = char2->add_subcommand("sum", "sum");
    c2sum->add_option("--a", a_in)->required();
    c2sum->add_option("--b", b_in)->required();
    auto* c2phi = char2->add_subcommand("phi", "classifier of a module");
    c2phi->add_option("--module", module_in)->required();
    auto* c2psi = char2->add_subcommand("psi", "module of a classifier");
    c2psi->add_option("--classifier", classifier_in)->required();
    auto* c2gens = char2->add_subcommand("from-gens", "closure of descriptors");
    c2gens->add_option("--descriptor", descriptor_list, "descriptor JSON (repeatable)")
        ->required();

    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", suite_name, "axioms | decomp | lattice | fg | char2 | all")
        ->required();
    add_seed(suite);
    suite->add_option("--count", count, "per-check sample count override");

    // global flags are accepted after any subcommand
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (CLI::App* sc : a->get_subcommands([](const CLI::App*) { return true; }))
            self(sc, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*prec_opt) {
            if (precision_arg < 1 || precision_arg > qq::Series::max_precision)
                throw qq::error(qq::errc::limit, "precision must be between 1 and 64");
            opt.precision = precision_arg;
        }
        if (!seed_given) seed = default_seed();

        if (*member) {
            qq::QQModule M = qq::module_from_text_or_json(module_in);
            bool yes = qq::qq_member(M, read_series(series_in, opt));
            emit(opt, qq::json{{"member", yes}}, yes ? "true" : "false");
        } else if (*intersect) {
            qq::QQModule M = qq::qq_intersect(qq::module_from_text_or_json(a_in),
                                              qq::module_from_text_or_json(b_in));
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*sum) {
            qq::QQModule M = qq::qq_sum(qq::module_from_text_or_json(a_in),
                                        qq::module_from_text_or_json(b_in));
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*fg) {
            bool yes = qq::qq_is_fg(qq::module_from_text_or_json(module_in));
            emit(opt, qq::json{{"finitely_generated", yes}}, yes ? "true" : "false");
        } else if (*generators) {
            auto gens = qq::qq_fg_generators(qq::module_from_text_or_json(module_in));
            qq::json arr = qq::json::array();
            std::string text;
            for (const qq::Series& g : gens) {
                arr.push_back(qq::to_json(g));
                if (!text.empty()) text += "\n";
                text += qq::to_string(g);
            }
            emit(opt, arr, text);
        } else if (*ideal) {
            bool yes = qq::qq_is_ideal(qq::module_from_text_or_json(module_in));
            emit(opt, qq::json{{"ideal", yes}}, yes ? "true" : "false");
        } else if (*decompose) {
            qq::Series f = read_series(series_in, opt);
            qq::SquareScaleDecomposition d = qq::lemma43_decompose(f);
            qq::json j = {{"alpha", qq::to_string(d.alpha)},
                          {"beta", qq::to_string(d.beta)},
                          {"shift", d.shift},
                          {"base", qq::to_json(d.base)}};
            emit(opt, j,
                 "f = (" + qq::to_string(d.alpha) + ") * X^" + std::to_string(d.shift) +
                     " * s^2 + (" + qq::to_string(d.beta) + ") * i X^" +
                     std::to_string(d.shift) + " * s^2,  s = " + qq::to_string(d.base));
        } else if (*from_gens) {
            std::vector<qq::Series> gens;
            for (const std::string& s : series_list) gens.push_back(read_series(s, opt));
            qq::QQModule M = qq::qq_from_generators(gens);
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*verify_axioms) {
            auto res = qq::suites::run_axioms(seed, count ? count : 1000);
            qq::json j = qq::to_json(res);
            emit(opt, j, qq::suites::to_text(res));
            return res.pass() ? 0 : 1;
        } else if (*c2member) {
            qq::Char2Module M = qq::char2_from_text_or_json(module_in);
            qq::Descriptor d = qq::Descriptor::zero();
            if (!series_in.empty())
                d = qq::dy_val_pan(qq::parse_dyadic_series(series_in));
            else if (!a_in.empty())
                d = qq::descriptor_from_json(qq::json::parse(a_in));
            else
                throw qq::error(qq::errc::precondition,
                                "give either --series or --descriptor");
            bool yes = qq::c2_member(M, d);
            emit(opt, qq::json{{"member", yes}}, yes ? "true" : "false");
        } else if (*c2intersect) {
            qq::Char2Module M = qq::c2_intersect(qq::char2_from_text_or_json(a_in),
                                                 qq::char2_from_text_or_json(b_in));
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*c2sum) {
            qq::Char2Module M = qq::c2_sum(qq::char2_from_text_or_json(a_in),
                                           qq::char2_from_text_or_json(b_in));
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*c2phi) {
            qq::C2Classifier c = qq::c2_phi(qq::char2_from_text_or_json(module_in));
            emit(opt, qq::to_json(c),
                 "segment " + qq::to_string(c.segment) +
                     (c.level ? ", level " + qq::to_string(*c.level) : ""));
        } else if (*c2psi) {
            qq::Char2Module M =
                qq::c2_psi(qq::classifier_from_json(qq::json::parse(classifier_in)));
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*c2gens) {
            std::vector<qq::Descriptor> ds;
            for (const std::string& s : descriptor_list)
                ds.push_back(qq::descriptor_from_json(qq::json::parse(s)));
            qq::Char2Module M = qq::c2_from_generators(ds);
            emit(opt, qq::to_json(M), qq::to_string(M));
        } else if (*suite) {
            static const std::vector<std::string> known = {"axioms", "decomp", "lattice",
                                                           "fg",     "char2",  "all"};
            if (std::find(known.begin(), known.end(), suite_name) == known.end()) {
                std::cerr << "usage error: unknown suite: " << suite_name << "\n";
                return 2;
            }
            std::vector<qq::suites::SuiteResult> results =
                qq::suites::run_named(suite_name, seed, count);
            bool all_pass = true;
            qq::json arr = qq::json::array();
            std::string text;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass();
                arr.push_back(qq::to_json(r));
                text += qq::suites::to_text(r);
            }
            emit(opt, arr, text);
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const qq::json::exception& e) {
        qq::json err = {{"error", {{"code", "parse"}, {"message", e.what()}}}};
        if (opt.json)
            std::cerr << err.dump() << "\n";
        else
            std::cerr << "error [parse]: " << e.what() << "\n";
        return 1;
    } catch (const qq::error& e) {
        qq::json err = {{"error", {{"code", qq::errc_name(e.code())}, {"message", e.what()}}}};
        if (opt.json)
            std::cerr << err.dump() << "\n";
        else
            std::cerr << "error [" << qq::errc_name(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error [domain]: " << e.what() << "\n";
        return 1;
    }
}
