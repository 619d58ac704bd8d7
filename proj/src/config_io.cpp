#include "tc3/config_io.hpp"

#include <cctype>
#include <set>

namespace tc3 {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
    Position p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

[[noreturn]] void semantic(const std::string& where, const std::string& what,
                           std::optional<std::size_t> string_index = std::nullopt) {
    throw ConfigError(ErrorKind::SemanticError, where + ": " + what, 0, 0, string_index);
}

// Earlier elements of arr that carry key; locates the key's textual occurrence.
std::size_t occurrences_before(const json& arr, std::size_t i, const char* key) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < i; ++k) n += arr[k].is_object() && arr[k].contains(key) ? 1 : 0;
    return n;
}

// Offset of the opening quote of the value of the occurrence-th `"key":` in text.
std::optional<std::size_t> value_offset(std::string_view text, std::string_view key, std::size_t occurrence) {
    const std::string needle = "\"" + std::string(key) + "\"";
    std::size_t from = 0, seen = 0;
    for (;;) {
        const std::size_t at = text.find(needle, from);
        if (at == std::string_view::npos) return std::nullopt;
        std::size_t i = at + needle.size();
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == ':') {
            ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (seen++ == occurrence) return i;
        }
        from = at + needle.size();
    }
}

StepWord word_field(std::string_view text, const json& obj, const char* key, std::size_t occurrence,
                    const std::string& where, std::optional<std::size_t> string_index, bool required) {
    if (!obj.contains(key)) {
        if (required) semantic(where, std::string("missing \"") + key + "\"", string_index);
        return {};
    }
    const auto& v = obj.at(key);
    if (!v.is_string()) semantic(where + "." + key, "expected a step string", string_index);
    const auto s = v.get<std::string>();
    if (auto bad = find_bad_atom(s)) {
        Position p;
        if (auto off = value_offset(text, key, occurrence)) p = position_at(text, *off + 1 + *bad);
        throw ConfigError(ErrorKind::SyntaxError,
                          "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) +
                              ": invalid step atom '" + s.substr(*bad, 2) + "' in " + where + "." + key,
                          p.line, p.column, string_index);
    }
    return parse_word(s);
}

Vertex vertex_field(const json& v, const std::string& where, std::optional<std::size_t> string_index = std::nullopt) {
    if (!v.is_array() || v.size() != 3) semantic(where, "expected [x, y, z]", string_index);
    Vertex out;
    for (Axis a : kAxes) {
        const auto& c = v[static_cast<std::size_t>(index_of(a))];
        if (!c.is_number_integer()) semantic(where, "coordinates must be integers", string_index);
        out[a] = c.get<int>();
    }
    return out;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where,
               std::optional<std::size_t> string_index = std::nullopt) {
    if (!obj.is_object()) semantic(where, "expected an object", string_index);
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) semantic(where, "unknown key \"" + k + "\"", string_index);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const Position p = position_at(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ConfigError(ErrorKind::SyntaxError,
                          "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + e.what(),
                          p.line, p.column);
    }
}

}  // namespace

Configuration parse_config(std::string_view text) {
    const json doc = parse_json(text);
    only_keys(doc, {"schema_version", "strings", "charges", "loops"}, "document");
    if (doc.contains("schema_version")) {
        const auto& v = doc.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
            semantic("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
    }

    Configuration cfg;
    if (doc.contains("strings")) {
        const auto& arr = doc.at("strings");
        if (!arr.is_array()) semantic("strings", "expected a list");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "strings[" + std::to_string(i) + "]";
            const auto& s = arr[i];
            only_keys(s, {"neg_period", "core", "pos_period", "base"}, where, i);
            InfinitePathSpec spec;
            auto word = [&](const char* key, bool required) {
                return word_field(text, s, key, occurrences_before(arr, i, key), where, i, required);
            };
            spec.neg_period = word("neg_period", true);
            spec.core = word("core", false);
            spec.pos_period = word("pos_period", true);
            if (!s.contains("base")) semantic(where, "missing \"base\"", i);
            spec.base = vertex_field(s.at("base"), where + ".base", i);
            try {
                validate_spec(spec);
            } catch (const Error& e) {
                semantic(where, std::string(to_string(e.kind())) + ": " + e.what(), i);
            }
            cfg.strings.push_back(std::move(spec));
        }
    }
    if (doc.contains("charges")) {
        const auto& arr = doc.at("charges");
        if (!arr.is_array()) semantic("charges", "expected a list");
        for (std::size_t i = 0; i < arr.size(); ++i)
            cfg.charges.push_back(vertex_field(arr[i], "charges[" + std::to_string(i) + "]"));
    }
    if (doc.contains("loops")) {
        const auto& arr = doc.at("loops");
        if (!arr.is_array()) semantic("loops", "expected a list");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "loops[" + std::to_string(i) + "]";
            only_keys(arr[i], {"start", "steps"}, where);
            if (!arr[i].contains("start")) semantic(where, "missing \"start\"");
            const Vertex start = vertex_field(arr[i].at("start"), where + ".start");
            const StepWord steps = word_field(text, arr[i], "steps", occurrences_before(arr, i, "steps"), where, std::nullopt, true);
            try {
                auto p = make_path(start, steps);
                if (!p.closed()) semantic(where, "loop does not close");
                cfg.loops.push_back(std::move(p));
            } catch (const ConfigError&) {
                throw;
            } catch (const Error& e) {
                semantic(where, std::string(to_string(e.kind())) + ": " + e.what());
            }
        }
    }
    return cfg;
}

ordered_json vertex_to_json(Vertex v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json spec_to_json(const InfinitePathSpec& s) {
    ordered_json j;
    j["neg_period"] = format_word(s.neg_period);
    j["core"] = format_word(s.core);
    j["pos_period"] = format_word(s.pos_period);
    j["base"] = vertex_to_json(s.base);
    return j;
}

ordered_json config_to_json(const Configuration& cfg) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["strings"] = ordered_json::array();
    for (const auto& s : cfg.strings) j["strings"].push_back(spec_to_json(s));
    j["charges"] = ordered_json::array();
    for (Vertex c : cfg.charges) j["charges"].push_back(vertex_to_json(c));
    j["loops"] = ordered_json::array();
    for (const auto& l : cfg.loops) {
        ordered_json o;
        o["start"] = vertex_to_json(l.start());
        o["steps"] = format_word(l.steps());
        j["loops"].push_back(o);
    }
    return j;
}

std::string serialize_config(const Configuration& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

std::vector<Face> parse_surface(std::string_view text) {
    const json doc = parse_json(text);
    only_keys(doc, {"schema_version", "faces"}, "surface");
    if (!doc.contains("faces") || !doc.at("faces").is_array()) semantic("surface", "expected \"faces\": [...]");
    std::vector<Face> out;
    const auto& arr = doc.at("faces");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "faces[" + std::to_string(i) + "]";
        const auto& f = arr[i];
        if (!f.is_array() || f.size() != 4 || !f[3].is_string()) semantic(where, "expected [x, y, z, \"X\"|\"Y\"|\"Z\"]");
        const Vertex base = vertex_field(json::array({f[0], f[1], f[2]}), where);
        const auto axis = f[3].get<std::string>();
        if (axis != "X" && axis != "Y" && axis != "Z") semantic(where, "normal must be X, Y or Z");
        out.push_back({base, axis_from_index(axis[0] - 'X')});
    }
    return out;
}

ordered_json faces_to_json(const std::vector<Face>& faces) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : faces)
        arr.push_back(ordered_json::array({f.base.x, f.base.y, f.base.z, std::string(1, axis_name(f.normal))}));
    return arr;
}

}  // namespace tc3
