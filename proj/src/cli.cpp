#include "tc3/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "tc3/config_io.hpp"
#include "tc3/sectors.hpp"
#include "tc3/verify.hpp"

namespace tc3 {

using nlohmann::ordered_json;

Region parse_region(std::string_view text) {
    auto fail = [&] {
        throw Error(ErrorKind::InvalidArgument, "region must look like x0,y0,z0:x1,y1,z1, got '" + std::string(text) + "'");
    };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) fail();
    auto corner = [&](std::string_view part) {
        std::array<int, 3> c{};
        std::size_t k = 0;
        while (true) {
            const auto comma = part.find(',');
            const auto tok = part.substr(0, comma);
            if (k >= 3) fail();
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), c[k]);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) fail();
            ++k;
            if (comma == std::string_view::npos) break;
            part.remove_prefix(comma + 1);
        }
        if (k != 3) fail();
        return Vertex{c[0], c[1], c[2]};
    };
    Region r{corner(text.substr(0, colon)), corner(text.substr(colon + 1))};
    for (Axis a : kAxes)
        if (r.min[a] > r.max[a]) throw Error(ErrorKind::InvalidArgument, "region corners must be ordered low:high");
    return r;
}

namespace {

ordered_json region_json(const Region& r) {
    ordered_json j;
    j["min"] = vertex_to_json(r.min);
    j["max"] = vertex_to_json(r.max);
    return j;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : edges)
        arr.push_back(ordered_json::array({e.base.x, e.base.y, e.base.z, std::string(1, axis_name(e.axis))}));
    return arr;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["kind"] = to_string(w.kind);
    if (w.kind == Witness::Kind::PairCollision) j["pair"] = ordered_json::array({w.i, w.j});
    else if (w.kind == Witness::Kind::TooManyStrings) j["strings"] = w.i;
    else if (w.kind != Witness::Kind::TotalCollision) j["index"] = w.i;
    if (w.direction) j["direction"] = to_string(*w.direction);
    if (w.axis) j["axis"] = std::string(1, axis_name(*w.axis));
    j["description"] = describe(w);
    return j;
}

ordered_json string_summary(std::size_t i, const InfinitePathSpec& s) {
    const auto id = infinity_directions(s);
    ordered_json j;
    j["index"] = i;
    j["d_plus"] = to_string(id.plus);
    j["d_minus"] = to_string(id.minus);
    j["monotonic"] = is_monotonic(s).monotonic;
    j["pathological"] = !(id.plus & id.minus).empty();
    return j;
}

ordered_json label_json(const SectorLabel& l) {
    ordered_json j;
    j["g"] = l.g;
    j["strings"] = ordered_json::array();
    for (const auto& c : l.strings) {
        ordered_json s;
        s["class"] = c.kind == StringClass::Kind::P ? "P" : c.kind == StringClass::Kind::Q ? "Q" : "R";
        s["directions"] = to_string(c.directions);
        s["pinned"] = ordered_json::array();
        for (const auto& t : c.pinned) {
            ordered_json p;
            p["direction"] = to_string(t.direction);
            p["transverse"] = ordered_json::array({t.transverse[0], t.transverse[1]});
            s["pinned"].push_back(p);
        }
        s["text"] = to_string(c);
        j["strings"].push_back(s);
    }
    j["case"] = l.case_name ? ordered_json(*l.case_name) : ordered_json(nullptr);
    return j;
}

struct Context {
    const CliRequest& req;
    int exit_code = 0;

    Configuration config() const {
        if (!req.config_text) throw Error(ErrorKind::InvalidArgument, "command '" + req.command + "' needs a configuration file");
        return parse_config(*req.config_text);
    }
    Region region() const {
        if (!req.region) throw Error(ErrorKind::InvalidArgument, "command '" + req.command + "' needs --region");
        return parse_region(*req.region);
    }
    GscMode mode() const { return req.strict_gss ? GscMode::Strict : GscMode::Pairwise; }
};

ordered_json cmd_validate(Context& ctx) {
    const auto cfg = ctx.config();
    ordered_json j;
    j["valid"] = true;
    j["strings"] = ordered_json::array();
    for (std::size_t i = 0; i < cfg.strings.size(); ++i) j["strings"].push_back(string_summary(i, cfg.strings[i]));
    j["charges"] = cfg.charges.size();
    j["loops"] = cfg.loops.size();
    j["charge_parity"] = charge_parity(cfg);
    return j;
}

ordered_json cmd_classify(Context& ctx) {
    const auto cfg = ctx.config();
    const auto v = is_ground_sector(cfg, ctx.mode());
    const auto gs = is_ground_state(cfg);
    ordered_json j;
    j["verdict"] = to_string(v.kind);
    j["mode"] = ctx.req.strict_gss ? "strict" : "pairwise";
    j["ground_state"] = gs.ground_state;
    j["frustration_free"] = gs.frustration_free;
    j["reasons"] = ordered_json::array();
    for (const auto& w : gs.reasons) j["reasons"].push_back(witness_json(w));
    j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
    j["strings"] = ordered_json::array();
    for (std::size_t i = 0; i < cfg.strings.size(); ++i) j["strings"].push_back(string_summary(i, cfg.strings[i]));
    if (v.kind != VerdictKind::NotGroundSector) {
        j["label"] = label_json(sector_label(cfg, ctx.mode()));
        j["script"] = ordered_json::array();
        for (const auto& e : v.script) {
            ordered_json s;
            s["action"] = e.action == ScriptEntry::Action::Straighten ? "straighten" : "remove_loop";
            s[e.action == ScriptEntry::Action::Straighten ? "string" : "loop"] = e.index;
            s["region"] = region_json(e.region);
            s["steps"] = e.steps;
            s["energy_drops"] = e.energy_drops;
            j["script"].push_back(s);
        }
        j["reaches_ground_state"] = v.reaches_ground_state;
        if (v.representative) j["representative"] = config_to_json(*v.representative);
    } else {
        j["label"] = nullptr;
        if (ctx.req.expect_ground) ctx.exit_code = 1;
    }
    return j;
}

ordered_json cmd_energy(Context& ctx) {
    const auto cfg = ctx.config();
    const Region r = ctx.region();
    const auto e = energy(cfg, r);
    ordered_json j;
    // one corner pair, read on both lattices
    j["region"]["dual"] = region_json(r);
    j["region"]["primal"] = region_json(r);
    j["flux_energy"] = e.flux_energy;
    j["charge_energy"] = e.charge_energy;
    j["total"] = e.total;
    j["flux_edges"] = edges_json(flux_edges_in_region(cfg, r));
    return j;
}

ordered_json cmd_straighten(Context& ctx) {
    auto cfg = ctx.config();
    const Region r = ctx.region();
    std::vector<std::size_t> which;
    if (ctx.req.string_index) {
        const int i = *ctx.req.string_index;
        if (i < 0 || static_cast<std::size_t>(i) >= cfg.strings.size())
            throw Error(ErrorKind::InvalidArgument, "--string " + std::to_string(i) + " is out of range");
        which.push_back(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < cfg.strings.size(); ++i) which.push_back(i);
    }
    ordered_json j;
    j["region"] = region_json(r);
    j["strings"] = ordered_json::array();
    for (std::size_t i : which) {
        ordered_json s;
        s["index"] = i;
        if (!single_crossing(cfg.strings[i], r)) {
            if (ctx.req.string_index) throw Error(ErrorKind::MultipleCrossings, "string " + std::to_string(i) + " does not cross the region exactly once");
            s["skipped"] = "does not cross the region exactly once";
            j["strings"].push_back(s);
            continue;
        }
        const auto fx = straighten_fixpoint(cfg.strings[i], r);
        s["steps"] = fx.steps;
        s["trace"] = ordered_json::array();
        for (const auto& st : fx.trace) {
            ordered_json t;
            t["case"] = to_string(st.kind);
            t["energy_before"] = st.energy_before;
            t["energy_after"] = st.energy_after;
            t["entry"] = vertex_to_json(st.entry);
            t["exit"] = vertex_to_json(st.exit);
            s["trace"].push_back(t);
        }
        s["monotonic"] = is_monotonic(fx.spec).monotonic;
        s["spec"] = spec_to_json(fx.spec);
        cfg.strings[i] = fx.spec;
        j["strings"].push_back(s);
    }
    j["configuration"] = config_to_json(cfg);
    return j;
}

ordered_json cmd_surgery(Context& ctx) {
    const auto cfg = ctx.config();
    if (!ctx.req.surface_text) throw Error(ErrorKind::InvalidArgument, "surgery needs --surface");
    auto faces = parse_surface(*ctx.req.surface_text);
    Surface surface;
    try {
        surface = validate_surface(faces);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidSurface, e.what());
    }
    const auto out = surgery(cfg, surface);
    ordered_json j;
    j["faces"] = faces_to_json(surface.faces);
    j["boundary"] = edges_json(surface.boundary);
    j["strings"] = ordered_json::array();
    for (std::size_t i = 0; i < out.strings.size(); ++i) j["strings"].push_back(string_summary(i, out.strings[i]));
    j["configuration"] = config_to_json(out);
    return j;
}

ordered_json cmd_enumerate(Context& ctx) {
    if (!ctx.req.strings) throw Error(ErrorKind::InvalidArgument, "enumerate needs --strings 2 or 3");
    const auto rep = enumerate_gsc_solutions(*ctx.req.strings);
    ordered_json j;
    j["strings"] = rep.strings;
    j["raw_count"] = rep.raw_count;
    j["raw_count_second"] = rep.raw_count_second;
    j["raw_count_formula"] = rep.raw_count_formula;
    j["counts_agree"] = rep.raw_count == rep.raw_count_second && rep.raw_count == rep.raw_count_formula;
    j["shapes_ok"] = rep.shapes_ok;
    j["cases"] = ordered_json::object();
    for (const auto& [name, c] : rep.cases) {
        ordered_json o;
        o["raw"] = c.raw;
        o["orbits"] = c.orbits;
        o["set_orbits"] = c.set_orbits;
        o["split_types"] = c.split_types;
        o["reduces_to"] = ordered_json::array();
        for (const auto& r : c.reduces_to) o["reduces_to"].push_back(r);
        j["cases"][name] = o;
    }
    return j;
}

ordered_json cmd_verify(Context& ctx) {
    if (!ctx.req.n) throw Error(ErrorKind::InvalidArgument, "verify needs --n");
    const int n = *ctx.req.n;
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be at least 1");
    const std::string list = ctx.req.checks.value_or("all");
    const std::vector<std::string> known{"commutation", "energy", "gauge", "nets", "truncation"};
    std::vector<std::string> chosen;
    bool all = false;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item == "all") {
            all = true;
            continue;
        }
        if (std::find(known.begin(), known.end(), item) == known.end())
            throw Error(ErrorKind::InvalidArgument, "unknown check '" + item + "'");
        if (std::find(chosen.begin(), chosen.end(), item) == chosen.end()) chosen.push_back(item);
    }
    if (all) chosen = known;
    if (chosen.empty()) throw Error(ErrorKind::InvalidArgument, "--checks is empty");

    ordered_json j;
    j["n"] = n;
    j["checks"] = ordered_json::array();
    bool passed = true;
    for (const auto& name : chosen) {
        ordered_json c;
        c["name"] = name;
        if (name == "nets" && all && n > 2) {
            c["skipped"] = "surface nets are enumerated only for n <= 2";
            j["checks"].push_back(c);
            continue;
        }
        CheckResult r;
        if (name == "commutation") r = check_commutation(n);
        else if (name == "energy") r = check_energy(n);
        else if (name == "gauge") r = check_gauge(n);
        else if (name == "nets") r = check_nets(n);
        else r = check_truncation();
        c["passed"] = r.passed;
        c["figures"] = ordered_json::object();
        for (const auto& [k, v] : r.figures) c["figures"][k] = v;
        passed = passed && r.passed;
        j["checks"].push_back(c);
    }
    j["passed"] = passed;
    if (!passed) ctx.exit_code = 1;
    return j;
}

ordered_json command_echo(const CliRequest& req) {
    ordered_json j;
    j["name"] = req.command;
    if (req.config_path) j["config"] = *req.config_path;
    if (req.region) j["region"] = *req.region;
    if (req.surface_path) j["surface"] = *req.surface_path;
    if (req.string_index) j["string"] = *req.string_index;
    if (req.strings) j["strings"] = *req.strings;
    if (req.n) j["n"] = *req.n;
    if (req.checks) j["checks"] = *req.checks;
    if (req.strict_gss) j["strict_gss"] = true;
    if (req.expect_ground) j["expect_ground"] = true;
    return j;
}

}  // namespace

CliResult run(const CliRequest& req) {
    static const std::map<std::string, std::function<ordered_json(Context&)>> commands{
        {"validate", cmd_validate}, {"classify", cmd_classify}, {"energy", cmd_energy},
        {"straighten", cmd_straighten}, {"surgery", cmd_surgery}, {"enumerate", cmd_enumerate},
        {"verify", cmd_verify}};

    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command_echo(req);
    Context ctx{req};
    try {
        auto it = commands.find(req.command);
        if (it == commands.end()) throw Error(ErrorKind::UnknownCommand, "unknown command '" + req.command + "'");
        report["result"] = it->second(ctx);
    } catch (const Error& e) {
        ordered_json err;
        err["kind"] = std::string(to_string(e.kind()));
        err["message"] = e.what();
        if (const auto* ce = dynamic_cast<const ConfigError*>(&e)) {
            if (ce->line()) {
                err["line"] = ce->line();
                err["column"] = ce->column();
            }
            if (ce->string_index()) err["string_index"] = *ce->string_index();
        }
        report.erase("result");
        report["error"] = err;
        ctx.exit_code = 2;
    }
    return {report.dump(2) + "\n", ctx.exit_code};
}

}  // namespace tc3
