// mhpoly: exact mixed Hodge / Poincare / E-polynomial calculator for
// moduli of G-Higgs bundles and G-character varieties over abelian
// varieties, plus their Hilbert-scheme desingularizations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mhpoly/format.hpp"
#include "mhpoly/hilbert.hpp"
#include "mhpoly/json_io.hpp"
#include "mhpoly/selfcheck.hpp"

namespace {

using namespace mhpoly;

Family parse_family(const std::string& s) {
    if (s == "gl")
        return Family::GL;
    if (s == "sl")
        return Family::SL;
    if (s == "so-odd")
        return Family::SOodd;
    if (s == "so-even")
        return Family::SOeven;
    if (s == "sp")
        return Family::Sp;
    throw spec_error("unknown family: " + s);
}

Space parse_space(const std::string& s) {
    if (s == "higgs")
        return Space::Higgs;
    if (s == "char")
        return Space::Character;
    if (s == "bundle")
        return Space::Bundles;
    throw spec_error("unknown space: " + s);
}

void print_poly(const MultiPoly& p, const std::string& format, json metadata) {
    if (format == "json") {
        json j = to_json(p);
        for (auto& [k, v] : metadata.items())
            j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << format_poly(p, TextStyle::Latex) << "\n";
    } else {
        std::cout << format_poly(p, TextStyle::Plain) << "\n";
    }
}

YSeries read_series(const std::string& path, int order) {
    json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in)
            throw spec_error("cannot open input file: " + path);
        in >> j;
    }
    YSeries parsed = series_from_json(j);
    if (parsed.order() == order)
        return parsed;
    // re-truncate or zero-extend to the requested order
    YSeries s(order);
    for (int k = 0; k <= std::min(order, parsed.order()); ++k)
        s[k] = parsed[k];
    return s;
}

void print_series(const YSeries& s, const std::string& format) {
    if (format == "json")
        std::cout << to_json(s).dump(2) << "\n";
    else if (format == "latex")
        std::cout << format_series(s, TextStyle::Latex);
    else
        std::cout << format_series(s, TextStyle::Plain);
}

struct ModuliArgs {
    std::string family = "gl";
    int n = 1;
    int d = 1;
    std::string space = "char";
    int torus_exponent = 0;
    std::string format = "text";

    void add_to(CLI::App* cmd, bool with_space = true) {
        cmd->add_option("--family", family, "group family: gl|sl|so-odd|so-even|sp")->required();
        cmd->add_option("--n", n, "family parameter n (GL(n), SL(n), SO(2n+1), Sp(2n), SO(2n))")
            ->required();
        cmd->add_option("--abelian-dim", d, "dimension d of the abelian variety")->required();
        if (with_space)
            cmd->add_option("--space", space, "higgs|char|bundle");
        cmd->add_option("--torus-exponent", torus_exponent,
                        "replace the exponent 2d by r (character varieties of Z^r)");
        cmd->add_option("--format", format, "json|latex|text");
    }

    ModuliSpec spec() const {
        ModuliSpec s{{parse_family(family), n}, d, parse_space(space), {}};
        if (torus_exponent > 0)
            s.torus_exponent_override = torus_exponent;
        return s;
    }
};

int run_selfcheck_command() {
    auto results = run_selfcheck();
    bool all_pass = true;
    for (const CheckResult& r : results) {
        std::printf("%-40s %s  (%.2fs)%s%s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology calculator for moduli spaces over abelian varieties"};
    app.require_subcommand(1);

    ModuliArgs mhp_args, poincare_args, euler_args;
    auto* cmd_mhp = app.add_subcommand("mhp", "mixed Hodge polynomial of a moduli space");
    mhp_args.add_to(cmd_mhp);
    auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomial of a moduli space");
    poincare_args.add_to(cmd_poincare);
    auto* cmd_euler = app.add_subcommand("euler", "Euler characteristic of a moduli space");
    euler_args.add_to(cmd_euler);

    std::string wt_family = "gl";
    int wt_n = 1;
    auto* cmd_wt = app.add_subcommand("weyl-table", "conjugacy-class table of a Weyl group");
    cmd_wt->add_option("--family", wt_family, "gl|sl|so-odd|so-even|sp")->required();
    cmd_wt->add_option("--n", wt_n, "family parameter n")->required();

    std::string ple_input = "-", ple_format = "json";
    int ple_order = 12;
    bool ple_signed = false;
    auto* cmd_pexp = app.add_subcommand("pexp", "plethystic exponential of a series");
    auto* cmd_plog = app.add_subcommand("plog", "plethystic logarithm of a series");
    for (auto* cmd : {cmd_pexp, cmd_plog}) {
        cmd->add_option("--input", ple_input, "JSON series file, or - for stdin");
        cmd->add_option("--order", ple_order, "truncation order N");
        cmd->add_flag("--signed", ple_signed, "use the signed (Koszul) Adams operations");
        cmd->add_option("--format", ple_format, "json|latex|text");
    }

    int hp_n = 1;
    std::string hp_format = "text";
    auto* cmd_hp = app.add_subcommand(
        "hilb-poincare", "Poincare polynomial of the crepant resolution (elliptic case)");
    cmd_hp->add_option("--n", hp_n, "number of points")->required();
    cmd_hp->add_option("--format", hp_format, "json|latex|text");

    std::string hs_base = "higgs", hs_format = "json";
    int hs_d = 1, hs_order = 12;
    auto* cmd_hs = app.add_subcommand("hilb-series",
                                      "Hilbert E-series of the d=1 base surface");
    cmd_hs->add_option("--base", hs_base, "higgs|char")->required();
    cmd_hs->add_option("--abelian-dim", hs_d, "must be 1 (surface case)");
    cmd_hs->add_option("--order", hs_order, "truncation order N");
    cmd_hs->add_option("--format", hs_format, "json|latex|text");

    int hr_n = 2, hr_d = 1;
    std::string hr_space = "higgs", hr_format = "json";
    auto* cmd_hr = app.add_subcommand("hilb-resolution",
                                      "E and Poincare polynomials of Hilb^n desingularizations");
    cmd_hr->add_option("--n", hr_n, "number of points (<= 3 when d > 1)")->required();
    cmd_hr->add_option("--abelian-dim", hr_d, "dimension d of the abelian variety")->required();
    cmd_hr->add_option("--space", hr_space, "higgs|char");
    cmd_hr->add_option("--format", hr_format, "json|latex|text");

    auto* cmd_selfcheck =
        app.add_subcommand("selfcheck", "run the full oracle suite and report per-check results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_mhp->parsed()) {
            ModuliSpec spec = mhp_args.spec();
            json meta{{"command", "mhp"},
                      {"family", mhp_args.family},
                      {"n", mhp_args.n},
                      {"abelian_dim", mhp_args.d},
                      {"space", mhp_args.space}};
            if (spec.space == Space::Bundles)
                meta["note"] = "moduli of semistable G-bundles M_A(G); its mixed Hodge "
                               "structure coincides with the Higgs moduli space";
            print_poly(mhp(spec), mhp_args.format, meta);
        } else if (cmd_poincare->parsed()) {
            ModuliSpec spec = poincare_args.spec();
            print_poly(poincare_moduli(spec), poincare_args.format,
                       {{"command", "poincare"},
                        {"family", poincare_args.family},
                        {"n", poincare_args.n},
                        {"abelian_dim", poincare_args.d},
                        {"space", poincare_args.space}});
        } else if (cmd_euler->parsed()) {
            Integer chi = euler_moduli(euler_args.spec());
            if (euler_args.format == "json")
                std::cout << json{{"command", "euler"}, {"euler", chi.str()}}.dump(2) << "\n";
            else
                std::cout << chi.str() << "\n";
        } else if (cmd_wt->parsed()) {
            std::cout << to_json(class_table({parse_family(wt_family), wt_n})).dump(2) << "\n";
        } else if (cmd_pexp->parsed() || cmd_plog->parsed()) {
            YSeries in = read_series(ple_input, ple_order);
            YSeries out = cmd_pexp->parsed() ? pexp(in, ple_signed) : plog(in, ple_signed);
            out.assert_integral(cmd_pexp->parsed() ? "pexp" : "plog");
            print_series(out, ple_format);
        } else if (cmd_hp->parsed()) {
            print_poly(partition_poincare(hp_n), hp_format,
                       {{"command", "hilb-poincare"}, {"n", hp_n}});
        } else if (cmd_hs->parsed()) {
            if (hs_d != 1)
                throw spec_error("hilb-series: only the surface case --abelian-dim 1 is supported");
            MultiPoly e_s =
                hs_base == "higgs" ? base_inputs(1).e_higgs : base_inputs(1).e_char;
            if (hs_base != "higgs" && hs_base != "char")
                throw spec_error("hilb-series: base must be higgs or char");
            print_series(he_surface(e_s, hs_order), hs_format);
        } else if (cmd_hr->parsed()) {
            ResolutionResult r = resolution_outputs({hr_n, hr_d, parse_space(hr_space)});
            if (hr_format == "json") {
                json j{{"E", to_json(r.e)},
                       {"P", to_json(r.p)},
                       {"euler", r.euler.str()},
                       {"crepant", r.crepant},
                       {"routes_agree", r.routes_agree}};
                std::cout << j.dump(2) << "\n";
            } else {
                TextStyle style = hr_format == "latex" ? TextStyle::Latex : TextStyle::Plain;
                std::cout << "E = " << format_poly(r.e, style) << "\n"
                          << "P = " << format_poly(r.p, style) << "\n"
                          << "euler = " << r.euler.str() << "\n"
                          << "crepant = " << (r.crepant ? "yes" : "no") << "\n";
            }
        } else if (cmd_selfcheck->parsed()) {
            return run_selfcheck_command();
        }
    } catch (const spec_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
