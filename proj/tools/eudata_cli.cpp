#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eudata/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler data of affine varieties over the rationals"};
    app.require_subcommand(1);

    eudata::RunConfig cfg;
    // The environment override (EUDATA_SPAIR_LIMIT) is folded into the
    // default here, so an explicit flag still wins over the environment.
    cfg.spair_limit = eudata::config().spair_limit.load();

    app.add_option("--seed", cfg.seed, "Master seed for all randomized choices")
        ->capture_default_str();
    app.add_option("--trials", cfg.trials, "Independent repetitions required to agree")
        ->capture_default_str();
    app.add_option("--coeff-bound", cfg.coeff_bound, "Coefficient range for random linear forms")
        ->capture_default_str();
    app.add_option("--milnor-cap", cfg.milnor_cap, "Truncation order cap for local algebras")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--spair-limit", cfg.spair_limit, "Basis-computation work budget")
        ->capture_default_str();
    std::string point;
    auto* point_opt =
        app.add_option("--point", point, "Comma-separated rational coordinates (milnor only)");

    std::map<std::string, std::vector<std::string>> paths;
    const std::pair<const char*, const char*> simple[] = {
        {"alpha", "Polar multiplicity series"},
        {"eu", "Global Euler obstruction"},
        {"chi", "Euler characteristic with cross-checks"},
        {"beta", "Lower-strata correction series"},
        {"milnor", "Singular points with local Milnor data"},
        {"degree", "Generic plane-section count"},
    };
    for (const auto& [name, desc] : simple) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("variety", paths[name], "variety file (JSON)")->required()->expected(1);
    }
    auto* dual = app.add_subcommand("duality", "Check a stratification fixture for consistency");
    dual->fallthrough();
    dual->add_option("files", paths["duality"],
                     "fixture file, or variety file followed by fixture file")
        ->required()
        ->expected(1, 2);

    CLI11_PARSE(app, argc, argv);

    if (point_opt->count() > 0) cfg.point = point;
    const std::string command = app.get_subcommands().front()->get_name();
    const auto result = eudata::run_command(command, paths[command], cfg);
    std::cout << eudata::render_report(result.report, cfg.format);
    return result.exit_code;
}
