#include "tc3/transforms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tc3/error.hpp"

namespace tc3 {

void validate_configuration(const Configuration& cfg) {
    for (const auto& s : cfg.strings) validate_spec(s);
    for (const auto& l : cfg.loops)
        if (!l.closed()) throw Error(ErrorKind::MalformedBoundary, "flux loop is not closed");
}

std::vector<Edge> string_edges_in_region(const std::vector<InfinitePathSpec>& strings, const Region& r) {
    std::map<Edge, int> tally;
    for (const auto& s : strings)
        for (const auto& e : edges_in_region(s, r)) ++tally[e.canonical()];
    std::vector<Edge> out;
    for (const auto& [e, k] : tally)
        if (k % 2) out.push_back(e);
    return out;
}

std::vector<Edge> flux_edges_in_region(const Configuration& cfg, const Region& r) {
    std::map<Edge, int> tally;
    for (const auto& s : cfg.strings)
        for (const auto& e : edges_in_region(s, r)) ++tally[e.canonical()];
    for (const auto& l : cfg.loops)
        for (const auto& e : l.edges()) {
            auto [a, b] = boundary_edge(e);
            if (r.contains(a) && r.contains(b)) ++tally[e.canonical()];
        }
    std::vector<Edge> out;
    for (const auto& [e, k] : tally)
        if (k % 2) out.push_back(e);
    return out;
}

EnergyReport energy(const Configuration& cfg, const Region& r) {
    EnergyReport rep;
    rep.region = r;
    rep.flux_energy = 2 * static_cast<long>(flux_edges_in_region(cfg, r).size());
    // two charges on one vertex annihilate
    std::map<Vertex, int> tally;
    for (Vertex v : cfg.charges)
        if (r.contains(v)) ++tally[v];
    for (const auto& [v, k] : tally) rep.charge_energy += 2 * (k % 2);
    rep.total = rep.flux_energy + rep.charge_energy;
    return rep;
}

Projection project(const FinitePath& path, Axis axis) {
    Projection p;
    p.start = path.start();
    p.axis = axis;
    for (std::size_t i = 0; i < path.steps().size(); ++i) {
        if (path.steps()[i].axis == axis) p.dropped.push_back(i);
        else p.steps.push_back(path.steps()[i]);
    }
    return p;
}

Vertex projection_end(const Projection& p) { return p.start + displacement(p.steps); }

FinitePath lift(const FinitePath& original, const FinitePath& rerouted, const Projection& proj) {
    if (rerouted.start() != proj.start || rerouted.end() != projection_end(proj))
        throw Error(ErrorKind::EndpointMismatch, "reroute does not join the projected endpoints");
    const auto& steps = original.steps();
    const std::size_t len = rerouted.size();
    StepWord out;
    std::size_t k = 0;
    for (std::size_t i = 0; i <= len; ++i) {
        // dropped step k sat in front of kept step (dropped[k] - k)
        while (k < proj.dropped.size() && std::min(proj.dropped[k] - k, len) == i) out.push_back(steps[proj.dropped[k++]]);
        if (i < len) out.push_back(rerouted.steps()[i]);
    }
    return make_path(original.start(), out);
}

StepWord staircase(Vertex a, Vertex b) {
    StepWord w;
    Vertex d = b - a;
    for (Axis ax : kAxes) {
        Sign s = d[ax] >= 0 ? Sign::Plus : Sign::Minus;
        for (int k = 0; k < std::abs(d[ax]); ++k) w.push_back({ax, s});
    }
    return w;
}

const char* to_string(StraightenCase c) {
    switch (c) {
        case StraightenCase::Planar: return "planar";
        case StraightenCase::ProjectLift: return "project_lift";
        case StraightenCase::SubRun: return "sub_run";
        case StraightenCase::FullSegment: return "full_segment";
    }
    return "?";
}

std::optional<Crossing> single_crossing(const InfinitePathSpec& spec, const Region& r) {
    // a vertex inside r starts an edge with both ends inside r inflated by one
    auto [lo, hi] = parameter_window(spec, r.inflated(1));
    std::optional<long> first, last;
    bool gap = false;
    Vertex v = vertex_at(spec, lo);
    for (long t = lo; t <= hi + 1; ++t) {
        if (r.contains(v)) {
            if (last && *last != t - 1) gap = true;
            if (!first) first = t;
            last = t;
        }
        if (t <= hi) v = v + step_at(spec, t).offset();
    }
    if (!first || gap) return std::nullopt;
    return Crossing{*first, *last};
}

namespace {

std::array<int, 6> tally(const StepWord& w, std::size_t i, std::size_t j) {
    std::array<int, 6> c{};
    for (std::size_t k = i; k < j; ++k) ++c[static_cast<std::size_t>(w[k].index())];
    return c;
}

int bad_axes(const std::array<int, 6>& c, Axis* which = nullptr) {
    int n = 0;
    for (Axis a : kAxes) {
        auto i = static_cast<std::size_t>(index_of(a) * 2);
        if (c[i] && c[i + 1]) {
            ++n;
            if (which) *which = a;
        }
    }
    return n;
}

// Monotone reroute of a segment that backtracks along exactly one axis.
std::pair<StepWord, StraightenCase> reroute_one_axis(Vertex start, const StepWord& w, Axis bad) {
    auto c = tally(w, 0, w.size());
    int used = 0;
    for (int i = 0; i < 6; i += 2) used += (c[static_cast<std::size_t>(i)] || c[static_cast<std::size_t>(i + 1)]);
    const Vertex end = start + displacement(w);
    if (used <= 2) return {staircase(start, end), StraightenCase::Planar};
    Axis drop = bad == Axis::X ? Axis::Y : Axis::X;
    auto path = make_path(start, w);
    auto proj = project(path, drop);
    auto planar = make_path(proj.start, staircase(proj.start, projection_end(proj)));
    return {lift(path, planar, proj).steps(), StraightenCase::ProjectLift};
}

std::vector<Vertex> walk(Vertex start, const StepWord& w) {
    std::vector<Vertex> out{start};
    for (auto d : w) out.push_back(out.back() + d.offset());
    return out;
}

// Several backtracking axes: reroute the longest stretch that backtracks in one
// axis only, if that can be done without hitting the rest of the segment.
std::optional<StepWord> reroute_sub_run(Vertex start, const StepWord& w) {
    struct Cand {
        std::size_t i, j;
        Axis bad;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::array<int, 6> c{};
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
            ++c[static_cast<std::size_t>(w[j - 1].index())];
            Axis bad = Axis::X;
            if (bad_axes(c, &bad) == 1) cands.push_back({i, j, bad});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.j - a.i != b.j - b.i) return a.j - a.i > b.j - b.i;
        return a.i < b.i;
    });
    const auto verts = walk(start, w);
    for (const auto& c : cands) {
        StepWord sub(w.begin() + static_cast<long>(c.i), w.begin() + static_cast<long>(c.j));
        auto [fresh, kind] = reroute_one_axis(verts[c.i], sub, c.bad);
        (void)kind;
        std::set<Vertex> others;
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (k < c.i || k > c.j) others.insert(verts[k]);
        auto fv = walk(verts[c.i], fresh);
        bool clash = false;
        for (std::size_t k = 1; k + 1 < fv.size() && !clash; ++k) clash = others.count(fv[k]) > 0;
        if (clash) continue;
        StepWord out(w.begin(), w.begin() + static_cast<long>(c.i));
        out.insert(out.end(), fresh.begin(), fresh.end());
        out.insert(out.end(), w.begin() + static_cast<long>(c.j), w.end());
        return out;
    }
    return std::nullopt;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Replace steps [t0, t1) of the realized path by `word`, absorbing tail periods
// into the core as needed.
InfinitePathSpec replace_steps(const InfinitePathSpec& spec, long t0, long t1, const StepWord& word) {
    const long n = static_cast<long>(spec.neg_period.size());
    const long p = static_cast<long>(spec.pos_period.size());
    const long c = static_cast<long>(spec.core.size());
    const int kn = t0 < 0 ? static_cast<int>(ceil_div(-t0, n)) : 0;
    const int kp = t1 > c ? static_cast<int>(ceil_div(t1 - c, p)) : 0;
    auto s = rewindow(spec, kn, kp);
    const long off = kn * n;
    StepWord core(s.core.begin(), s.core.begin() + (t0 + off));
    core.insert(core.end(), word.begin(), word.end());
    core.insert(core.end(), s.core.begin() + (t1 + off), s.core.end());
    s.core = std::move(core);
    return s;
}

}  // namespace

StraightenStep straighten_once(const InfinitePathSpec& spec, const Region& r) {
    validate_spec(spec);
    auto cr = single_crossing(spec, r);
    if (!cr) throw Error(ErrorKind::MultipleCrossings, "path does not cross " + to_string(r) + " exactly once");
    StepWord seg;
    for (long t = cr->t_entry; t < cr->t_exit; ++t) seg.push_back(step_at(spec, t));
    const Vertex entry = vertex_at(spec, cr->t_entry);
    const Vertex exit = vertex_at(spec, cr->t_exit);

    Axis bad = Axis::X;
    const int nbad = bad_axes(tally(seg, 0, seg.size()), &bad);
    if (nbad == 0) throw Error(ErrorKind::AlreadyMonotonicInRegion, "segment inside " + to_string(r) + " is monotone");

    StepWord fresh;
    StraightenCase kind;
    if (nbad == 1) {
        std::tie(fresh, kind) = reroute_one_axis(entry, seg, bad);
    } else if (auto sub = reroute_sub_run(entry, seg)) {
        fresh = *sub;
        kind = StraightenCase::SubRun;
    } else {
        fresh = staircase(entry, exit);
        kind = StraightenCase::FullSegment;
    }

    StraightenStep out;
    out.spec = replace_steps(spec, cr->t_entry, cr->t_exit, fresh);
    out.kind = kind;
    out.entry = entry;
    out.exit = exit;
    out.energy_before = 2 * static_cast<long>(count_edges_in_region(spec, r));
    out.energy_after = 2 * static_cast<long>(count_edges_in_region(out.spec, r));
    return out;
}

InfinitePathSpec straighten(const InfinitePathSpec& spec, const Region& r) { return straighten_once(spec, r).spec; }

FixpointResult straighten_fixpoint(const InfinitePathSpec& spec, const Region& r) {
    FixpointResult res{spec, 0, {}};
    for (;;) {
        try {
            res.trace.push_back(straighten_once(res.spec, r));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::AlreadyMonotonicInRegion) return res;
            throw;
        }
        res.spec = res.trace.back().spec;
        ++res.steps;
    }
}

namespace {

struct Run {
    std::size_t string;
    InfinitePathSpec spec;  // oriented against the loop
    long t0, t1;            // first and last shared step
    std::size_t exit_pos;   // loop index of vertex_at(t1 + 1)
    std::size_t entry_pos;  // loop index of vertex_at(t0)
};

std::optional<Run> find_run(std::size_t idx, const InfinitePathSpec& spec, const std::map<Edge, std::pair<std::size_t, Sign>>& loop_edges,
                            const std::map<Vertex, std::size_t>& loop_pos, const Region& box, bool& along) {
    auto [lo, hi] = parameter_window(spec, box);
    std::vector<long> ts;
    std::set<bool> dirs;
    Vertex v = vertex_at(spec, lo);
    for (long t = lo; t <= hi; ++t) {
        Edge e = edge_from(v, step_at(spec, t));
        auto it = loop_edges.find(e.canonical());
        if (it != loop_edges.end()) {
            ts.push_back(t);
            dirs.insert(it->second.second == e.traversal);
        }
        v = v + step_at(spec, t).offset();
    }
    if (ts.empty()) return std::nullopt;
    for (std::size_t k = 1; k < ts.size(); ++k)
        if (ts[k] != ts[k - 1] + 1)
            throw Error(ErrorKind::MultipleOverlapRuns, "string " + std::to_string(idx) + " meets the boundary more than once");
    if (dirs.size() != 1) throw Error(ErrorKind::InvalidSurface, "inconsistent overlap orientation");
    along = *dirs.begin();
    Run run{idx, spec, ts.front(), ts.back(), 0, 0};
    run.exit_pos = loop_pos.at(vertex_at(spec, run.t1 + 1));
    run.entry_pos = loop_pos.at(vertex_at(spec, run.t0));
    return run;
}

}  // namespace

Configuration surgery(const Configuration& cfg, const Surface& surface_in) {
    Surface surface;
    try {
        surface = validate_surface(surface_in.faces);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidSurface, e.what());
    }
    if (surface.closed || !surface.boundary_loop) throw Error(ErrorKind::InvalidSurface, "surface has no boundary");
    const FinitePath& loop = *surface.boundary_loop;
    const auto lv = loop.vertices();  // closed: last == first
    const std::size_t m = loop.size();

    std::map<Edge, std::pair<std::size_t, Sign>> loop_edges;
    std::map<Vertex, std::size_t> loop_pos;
    for (std::size_t i = 0; i < m; ++i) {
        Edge e = loop.edges()[i];
        loop_edges[e.canonical()] = {i, e.traversal};
        loop_pos[lv[i]] = i;
    }
    const Region box = Region::bounding(lv);

    std::vector<Run> runs;
    for (std::size_t i = 0; i < cfg.strings.size(); ++i) {
        bool along = false;
        auto run = find_run(i, cfg.strings[i], loop_edges, loop_pos, box, along);
        if (!run) continue;
        if (along) run = find_run(i, reversed(cfg.strings[i]), loop_edges, loop_pos, box, along);
        runs.push_back(*run);
    }
    if (runs.empty()) throw Error(ErrorKind::NoOverlap, "no string shares an edge with the surface boundary");
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.exit_pos < b.exit_pos; });

    Configuration out = cfg;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const Run& a = runs[k];
        const Run& b = runs[(k + 1) % runs.size()];
        // loop arc from a's entry forward to b's exit
        StepWord arc;
        for (std::size_t i = a.entry_pos; i != b.exit_pos; i = (i + 1) % m) arc.push_back(loop.steps()[i]);

        // head of a up to its entry, arc, tail of b after its exit
        const long na = static_cast<long>(a.spec.neg_period.size());
        const long ca = static_cast<long>(a.spec.core.size());
        const int akn = a.t0 < 0 ? static_cast<int>(ceil_div(-a.t0, na)) : 0;
        const int akp = a.t0 > ca ? static_cast<int>(ceil_div(a.t0 - ca, static_cast<long>(a.spec.pos_period.size()))) : 0;
        auto as = rewindow(a.spec, akn, akp);
        const long a_cut = a.t0 + akn * na;

        const long nb = static_cast<long>(b.spec.neg_period.size());
        const long cb = static_cast<long>(b.spec.core.size());
        const long from = b.t1 + 1;
        const int bkn = from < 0 ? static_cast<int>(ceil_div(-from, nb)) : 0;
        const int bkp = from > cb ? static_cast<int>(ceil_div(from - cb, static_cast<long>(b.spec.pos_period.size()))) : 0;
        auto bs = rewindow(b.spec, bkn, bkp);
        const long b_cut = from + bkn * nb;

        InfinitePathSpec spliced{as.neg_period, {}, bs.pos_period, as.base};
        spliced.core.assign(as.core.begin(), as.core.begin() + a_cut);
        spliced.core.insert(spliced.core.end(), arc.begin(), arc.end());
        spliced.core.insert(spliced.core.end(), bs.core.begin() + b_cut, bs.core.end());
        try {
            validate_spec(spliced);
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidSurface, std::string("spliced string is not a valid path: ") + e.what());
        }
        out.strings[a.string] = spliced;
    }
    return out;
}

namespace {

std::vector<Vertex> anchors(const InfinitePathSpec& s) { return {s.base, vertex_at(s, static_cast<long>(s.core.size()))}; }

// Shared canonical edges of two strings within k periods beyond each core.
std::vector<std::pair<long, Edge>> shared_edges(const InfinitePathSpec& keep, const InfinitePathSpec& move, long k) {
    std::unordered_set<Edge, EdgeSiteHash, EdgeSiteEq> sites;
    for (const auto& e : truncate(keep, -k * static_cast<long>(keep.neg_period.size()),
                                  static_cast<long>(keep.core.size()) + k * static_cast<long>(keep.pos_period.size()))
                             .edges())
        sites.insert(e.canonical());
    std::vector<std::pair<long, Edge>> out;
    const long lo = -k * static_cast<long>(move.neg_period.size());
    const long hi = static_cast<long>(move.core.size()) + k * static_cast<long>(move.pos_period.size());
    Vertex v = vertex_at(move, lo);
    for (long t = lo; t <= hi; ++t) {
        Edge e = edge_from(v, step_at(move, t));
        if (sites.count(e.canonical())) out.push_back({t, e});
        v = v + step_at(move, t).offset();
    }
    return out;
}

long net_l1(const StepWord& w) { return l1_norm(displacement(w)); }

// Periods past which two strings can share edges only if they share
// infinitely many (parallel tails repeating the same overlap).
long overlap_horizon(const InfinitePathSpec& a, const InfinitePathSpec& b) {
    long d = 0;
    for (Vertex p : anchors(a))
        for (Vertex q : anchors(b)) d = std::max<long>(d, l1_norm(p - q));
    d += static_cast<long>(a.core.size() + b.core.size() + a.neg_period.size() + a.pos_period.size() +
                           b.neg_period.size() + b.pos_period.size());
    long mx = std::max({net_l1(a.neg_period), net_l1(a.pos_period), net_l1(b.neg_period), net_l1(b.pos_period)});
    return d * mx + 2;
}

}  // namespace

Configuration separate_overlaps(const Configuration& cfg) {
    Configuration out = cfg;
    for (int round = 0; round < 256; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < out.strings.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < out.strings.size() && !changed; ++j) {
                const auto& a = out.strings[i];
                const auto& b = out.strings[j];
                const long k = overlap_horizon(a, b);
                auto near = shared_edges(a, b, k);
                if (near.empty()) continue;
                long lcm = 1;
                for (auto len : {a.neg_period.size(), a.pos_period.size(), b.neg_period.size(), b.pos_period.size()})
                    lcm = std::lcm(lcm, static_cast<long>(len));
                if (shared_edges(a, b, 2 * k + lcm).size() != near.size())
                    throw Error(ErrorKind::InvalidArgument, "strings " + std::to_string(i) + " and " + std::to_string(j) +
                                                                " share infinitely many edges");
                // first maximal run of shared steps in b
                long t0 = near.front().first, t1 = t0;
                for (std::size_t q = 1; q < near.size() && near[q].first == t1 + 1; ++q) t1 = near[q].first;
                StepWord run;
                std::array<bool, 3> used{};
                for (long t = t0; t <= t1; ++t) {
                    run.push_back(step_at(b, t));
                    used[static_cast<std::size_t>(index_of(run.back().axis))] = true;
                }
                std::vector<Direction> tries;
                for (bool pass : {false, true})
                    for (Axis ax : kAxes)
                        if (used[static_cast<std::size_t>(index_of(ax))] == pass)
                            for (Sign s : {Sign::Plus, Sign::Minus}) tries.push_back({ax, s});
                bool done = false;
                for (Direction u : tries) {
                    StepWord w{u};
                    w.insert(w.end(), run.begin(), run.end());
                    w.push_back(u.reversed());
                    auto moved = replace_steps(b, t0, t1 + 1, w);
                    try {
                        validate_spec(moved);
                    } catch (const Error&) {
                        continue;
                    }
                    out.strings[j] = moved;
                    done = true;
                    break;
                }
                if (!done) throw Error(ErrorKind::InvalidArgument, "no unit detour separates strings " + std::to_string(i) + " and " + std::to_string(j));
                changed = true;
            }
        if (!changed) return out;
    }
    throw Error(ErrorKind::InvalidArgument, "overlap separation did not settle");
}

int linking_parity(const FinitePath& primal_loop, const std::vector<Face>& dual_faces) {
    std::map<Face, int> mult;  // repeated faces cancel
    for (const auto& f : dual_faces) mult[f] ^= 1;
    int parity = 0;
    for (const auto& e : primal_loop.edges()) {
        auto it = mult.find(dual_face_of_edge(e.canonical()));
        if (it != mult.end()) parity ^= it->second;
    }
    return parity;
}

int linking_parity(const FinitePath& primal_loop, const Surface& dual_surface) {
    return linking_parity(primal_loop, dual_surface.faces);
}

}  // namespace tc3
