// Command-line front end: parses flags, reads files, prints the JSON report.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tc3/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-sector tools for flux strings and charges in the 3d toric code"};
    app.require_subcommand(1);

    tc3::CliRequest req;
    std::string config, region, surface, checks;
    int string_index = -1, strings = 0, n = 0;
    bool strict = false, expect = false;

    auto with_config = [&](CLI::App* sub) {
        sub->add_option("config", config, "configuration JSON file, or - for stdin")->required();
        sub->add_flag("--strict-gss", strict, "only require the D-sets of all strings to have empty common intersection");
        sub->add_flag("--expect-ground", expect, "exit 1 when the verdict is NotGroundSector");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a configuration");
    with_config(validate);
    auto* classify = app.add_subcommand("classify", "ground-sector verdict and sector label");
    with_config(classify);
    auto* energy = app.add_subcommand("energy", "energy of a configuration inside a region");
    with_config(energy);
    energy->add_option("--region", region, "x0,y0,z0:x1,y1,z1")->required();
    auto* straighten = app.add_subcommand("straighten", "straighten strings inside a region");
    with_config(straighten);
    straighten->add_option("--region", region, "x0,y0,z0:x1,y1,z1")->required();
    straighten->add_option("--string", string_index, "index of the one string to straighten");
    auto* surgery = app.add_subcommand("surgery", "splice strings along the boundary of a dual surface");
    with_config(surgery);
    surgery->add_option("--surface", surface, "face list JSON file")->required();
    auto* enumerate = app.add_subcommand("enumerate", "inventory of direction assignments");
    enumerate->add_option("--strings", strings, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    auto* verify = app.add_subcommand("verify", "cross-checks against the stabilizer model");
    verify->add_option("--n", n, "block size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--checks", checks, "comma list of commutation,energy,gauge,nets,truncation,all")
        ->default_val("all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    auto* sub = app.get_subcommands().front();
    req.command = sub->get_name();
    req.strict_gss = strict;
    req.expect_ground = expect;
    try {
        if (!config.empty()) {
            req.config_path = config;
            req.config_text = slurp(config);
        }
        if (!surface.empty()) {
            req.surface_path = surface;
            req.surface_text = slurp(surface);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (!region.empty()) req.region = region;
    if (string_index >= 0) req.string_index = string_index;
    if (sub == enumerate) req.strings = strings;
    if (sub == verify) {
        req.n = n;
        req.checks = checks;
    }

    const auto result = tc3::run(req);
    std::cout << result.report;
    return result.exit_code;
}
