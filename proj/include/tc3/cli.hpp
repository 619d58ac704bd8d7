#pragma once

// Command dispatch behind the tc3 executable. Every command yields one JSON
// report; see README.md for the schema.

#include <optional>
#include <string>
#include <string_view>

#include "tc3/lattice.hpp"

namespace tc3 {

struct CliRequest {
    std::string command;
    std::optional<std::string> config_path;   // echoed only
    std::optional<std::string> config_text;
    std::optional<std::string> region;        // "x0,y0,z0:x1,y1,z1"
    std::optional<std::string> surface_path;  // echoed only
    std::optional<std::string> surface_text;
    std::optional<int> string_index;          // straighten: one string instead of all
    std::optional<int> strings;               // enumerate
    std::optional<int> n;                     // verify
    std::optional<std::string> checks;        // verify: comma list or "all"
    bool strict_gss = false;
    bool expect_ground = false;
};

struct CliResult {
    std::string report;  // JSON, newline terminated
    int exit_code = 0;   // 0 ok, 1 verdict or check failed as flagged, 2 error
};

CliResult run(const CliRequest& request);

// Inclusive corner pair; throws Error(InvalidArgument).
Region parse_region(std::string_view text);

}  // namespace tc3
