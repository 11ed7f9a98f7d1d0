#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "purespin/cli.hpp"

namespace cli = purespin::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on the pure-spinor weight lattice and its Richardson algebras"};
    std::string command, lo, hi, window, format = "json", specialize, order = "grevlex";
    cli::JobConfig cfg;

    std::string names;
    for (auto const& c : cli::commands()) names += (names.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + names)->required();
    app.add_option("--lo", lo, "lower endpoint, e.g. (0)@0");
    app.add_option("--hi", hi, "upper endpoint, e.g. (1)@1");
    app.add_option("--window", window, "level window a..b");
    app.add_option("--format", format, "json, csv, dot or latex");
    app.add_option("--k-max", cfg.k_max, "series truncation / degree bound");
    app.add_option("--r-max", cfg.r_max, "Delannoy index bound");
    app.add_option("--specialize", specialize, "e.g. s=1,q=1 or s1=2,s2=1/2,...,q=3");
    app.add_option("--order", order, "monomial order for groebner-check: grevlex or deglex");
    app.add_option("--out", cfg.out, "output file (default $PURESPIN_OUT_DIR/<command>.<ext>)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return cli::kExitParse;
    }

    try {
        if (!lo.empty()) cfg.lo = cli::parse_endpoint(lo);
        if (!hi.empty()) cfg.hi = cli::parse_endpoint(hi);
        if (!window.empty()) cfg.window = cli::parse_window(window);
        if (!specialize.empty()) cfg.specialize = cli::parse_specialization(specialize);
        cfg.format = cli::parse_format(format);
        cfg.order = cli::parse_order(order);
    } catch (cli::ParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitParse;
    }

    auto res = cli::run(command, cfg);
    if (res.exit_code == cli::kExitParse)
        std::cerr << "error: " << res.message << "\n";
    else
        std::cerr << res.message << "\n";
    return res.exit_code;
}
