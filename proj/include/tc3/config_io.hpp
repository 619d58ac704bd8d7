#pragma once

// JSON documents for configurations and surfaces.
//
// Configuration:
//   {"schema_version": 1,
//    "strings": [{"neg_period": "Z+", "core": "X+Z+", "pos_period": "Z+", "base": [0,0,0]}],
//    "charges": [[x,y,z], ...],
//    "loops":   [{"start": [x,y,z], "steps": "X+Y+X-Y-"}]}
// Every key is optional; unknown keys are rejected.
//
// Surface: {"faces": [[x,y,z,"Z"], ...]} with the letter naming the face normal.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tc3/error.hpp"
#include "tc3/transforms.hpp"

namespace tc3 {

inline constexpr int kSchemaVersion = 1;

// SyntaxError carries a 1-based line/column; SemanticError carries the index of
// the offending string when one is to blame.
class ConfigError : public Error {
public:
    ConfigError(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0,
                std::optional<std::size_t> string_index = std::nullopt)
        : Error(kind, message), line_(line), column_(column), string_index_(string_index) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    std::optional<std::size_t> string_index() const { return string_index_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::optional<std::size_t> string_index_;
};

Configuration parse_config(std::string_view text);
nlohmann::ordered_json config_to_json(const Configuration& cfg);
std::string serialize_config(const Configuration& cfg);

nlohmann::ordered_json spec_to_json(const InfinitePathSpec& spec);
nlohmann::ordered_json vertex_to_json(Vertex v);

std::vector<Face> parse_surface(std::string_view text);
nlohmann::ordered_json faces_to_json(const std::vector<Face>& faces);

}  // namespace tc3
