#include "tc3/verify.hpp"

#include <algorithm>
#include <map>

#include "tc3/error.hpp"
#include "tc3/sampling.hpp"

namespace tc3 {

namespace {

// Faces swept by moving each edge L steps along d; odd multiplicities survive.
void sweep(const std::vector<Edge>& edges, Direction d, int length, std::map<Face, int>& out) {
    const Axis c = d.axis;
    for (const auto& e : edges) {
        if (e.axis == c) continue;
        Axis normal = Axis::X;
        for (Axis a : kAxes)
            if (a != c && a != e.axis) normal = a;
        for (int k = 0; k < length; ++k) {
            const int shift = d.sign == Sign::Plus ? k : -(k + 1);
            out[{e.canonical().base + shift * unit(c), normal}] ^= 1;
        }
    }
}

bool ray_misses(Vertex p, Direction d, const Region& r) {
    for (Axis a : kAxes)
        if (a != d.axis && (p[a] < r.min[a] || p[a] > r.max[a])) return true;
    return d.sign == Sign::Plus ? p[d.axis] > r.max[d.axis] : p[d.axis] < r.min[d.axis];
}

// Sweep length that carries every vertex of the path past r along d.
int clearing_length(const std::vector<Vertex>& vs, Direction d, const Region& r) {
    int need = 1;
    for (Vertex v : vs) {
        const int gap = d.sign == Sign::Plus ? r.max[d.axis] - v[d.axis] + 1 : v[d.axis] - r.min[d.axis] + 1;
        need = std::max(need, gap);
    }
    return need;
}

void sweep_path(const FinitePath& p, const Region& r, std::map<Face, int>& out) {
    const auto vs = p.vertices();
    for (int i = 0; i < 6; ++i) {
        const Direction d = Direction::from_index(i);
        if (!p.closed() && (!ray_misses(p.start(), d, r) || !ray_misses(p.end(), d, r))) continue;
        sweep(p.edges(), d, clearing_length(vs, d, r), out);
        return;
    }
    throw Error(ErrorKind::InvalidArgument, "no sweep direction misses the region");
}

}  // namespace

long syndrome_energy_of(const Configuration& cfg, const Region& r) {
    std::map<Face, int> faces;
    for (const auto& loop : cfg.loops) sweep_path(loop, r, faces);
    for (const auto& s : cfg.strings) {
        auto [lo, hi] = parameter_window(s, r);
        sweep_path(truncate(s, lo - 1, hi + 1), r, faces);
    }
    std::vector<Edge> zs;
    for (Vertex c : cfg.charges) {
        const int len = std::max(1, r.max.x - c.x + 1);
        for (int k = 0; k < len; ++k) zs.push_back({c + k * unit(Axis::X), Axis::X});
    }

    std::vector<Face> odd;
    std::vector<Vertex> corners{r.min, r.max + Vertex{1, 1, 1}};
    for (const auto& [f, bit] : faces) {
        if (!bit) continue;
        odd.push_back(f);
        auto [a, b] = boundary_edge(edge_of_dual_face(f));
        corners.push_back(a);
        corners.push_back(b);
    }
    for (const auto& e : zs) {
        auto [a, b] = boundary_edge(e);
        corners.push_back(a);
        corners.push_back(b);
    }
    const Region box = Region::bounding(corners).inflated(1);
    const Vertex side = box.max - box.min;
    FiniteLattice lat(std::max({side.x, side.y, side.z}) + 1, box.min);
    auto op = membrane_op(lat, odd) * string_op(lat, zs);
    return syndrome_energy(lat, op, r);
}

CheckResult check_commutation(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    FiniteLattice lat(n);
    CheckResult out{"commutation", true, {}};
    std::vector<PauliOperator> stars, plaquettes;
    for (Vertex v : lat.vertices()) stars.push_back(star(lat, v));
    for (const auto& f : lat.faces()) {
        bool inside = true;
        for (const auto& e : boundary_face(f)) inside = inside && lat.index_of(e.canonical()).has_value();
        if (inside) plaquettes.push_back(plaquette(lat, f));
    }
    long pairs = 0, bad = 0;
    for (const auto& s : stars)
        for (const auto& p : plaquettes) {
            ++pairs;
            bad += commutes(s, p) ? 0 : 1;
        }
    long edges = 0;
    for (const auto& e : lat.block_edges()) {
        auto z = single_z(lat, e);
        auto [a, b] = boundary_edge(e);
        long expected = (lat.block().contains(a) ? 1 : 0) + (lat.block().contains(b) ? 1 : 0);
        long hits = 0;
        for (std::size_t i = 0; i < stars.size(); ++i) hits += commutes(stars[i], z) ? 0 : 1;
        ++edges;
        bad += hits == expected ? 0 : 1;
    }
    out.passed = bad == 0;
    out.figures = {{"stars", static_cast<long>(stars.size())},
                   {"plaquettes", static_cast<long>(plaquettes.size())},
                   {"pairs", pairs},
                   {"edges", edges},
                   {"failures", bad}};
    return out;
}

namespace {

std::optional<FinitePath> random_loop(Rng& rng, const Region& around) {
    auto pick = [&](Axis a) { return uniform(rng, around.min[a] - 1, around.max[a] + 1); };
    const Vertex c{pick(Axis::X), pick(Axis::Y), pick(Axis::Z)};
    std::vector<Face> faces;
    if (uniform(rng, 0, 2) == 0) {
        // some faces of one unit cube
        std::vector<Face> cube;
        for (Axis a : kAxes) {
            cube.push_back({c, a});
            cube.push_back({c + unit(a), a});
        }
        std::shuffle(cube.begin(), cube.end(), rng);
        faces.assign(cube.begin(), cube.begin() + uniform(rng, 1, 5));
    } else {
        // planar polyomino
        const Axis normal = axis_from_index(uniform(rng, 0, 2));
        auto [s, t] = transverse_axes(normal);
        faces.push_back({c, normal});
        const int grow = uniform(rng, 0, 6);
        for (int i = 0; i < grow; ++i) {
            Face f = faces[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(faces.size()) - 1))];
            const int dir = uniform(rng, 0, 3);
            f.base = f.base + (dir < 2 ? 1 : -1) * unit(dir % 2 ? s : t);
            if (std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
        }
    }
    try {
        return validate_surface(faces).boundary_loop;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

CheckResult check_energy(int n, int cases, unsigned seed) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    Rng rng(seed);
    const Region r{{0, 0, 0}, {n - 1, n - 1, n - 1}};
    const Vertex centre{n / 2, n / 2, n / 2};
    long loops = 0, strings = 0, charges = 0, mismatches = 0, nonzero = 0;
    for (int i = 0; i < cases; ++i) {
        Configuration cfg;
        while (cfg.loops.empty() && cfg.strings.empty() && cfg.charges.empty()) {
            const int nl = uniform(rng, 0, 2), ns = uniform(rng, 0, 2), nc = uniform(rng, 0, 3);
            for (int k = 0; k < nl; ++k)
                if (auto l = random_loop(rng, r)) cfg.loops.push_back(*l);
            for (int k = 0; k < ns; ++k) cfg.strings.push_back(random_spec(rng, uniform(rng, 2, 12), 3, centre));
            for (int k = 0; k < nc; ++k)
                cfg.charges.push_back({uniform(rng, -1, n), uniform(rng, -1, n), uniform(rng, -1, n)});
        }
        loops += static_cast<long>(cfg.loops.size());
        strings += static_cast<long>(cfg.strings.size());
        charges += static_cast<long>(cfg.charges.size());
        const long e = energy(cfg, r).total;
        nonzero += e != 0 ? 1 : 0;
        mismatches += e == syndrome_energy_of(cfg, r) ? 0 : 1;
    }
    return {"energy",
            mismatches == 0,
            {{"cases", cases}, {"loops", loops}, {"strings", strings}, {"charges", charges}, {"nonzero", nonzero},
             {"mismatches", mismatches}}};
}

CheckResult check_gauge(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    const auto rank = static_cast<long>(gauge_rank(n));
    const long expected = static_cast<long>(n) * n * n;
    return {"gauge", rank == expected, {{"n", n}, {"gauge_rank", rank}, {"expected", expected}}};
}

CheckResult check_nets(int n) {
    auto rep = surface_net_checks(n);
    CheckResult out{"nets", rep.ok(), {}};
    out.figures = {{"n", n},
                   {"qubits", static_cast<long>(rep.qubits)},
                   {"gauge_size", static_cast<long>(rep.gauge_size)},
                   {"distinct_nets", static_cast<long>(rep.distinct_nets)},
                   {"no_flux_dimension", static_cast<long>(rep.no_flux_dimension)},
                   {"orbit_count", static_cast<long>(rep.orbit_count)}};
    if (rep.brute_force_no_flux) out.figures.push_back({"brute_force_no_flux", static_cast<long>(*rep.brute_force_no_flux)});
    if (n == 1) {
        auto bc = boundary_condition_check();
        out.passed = out.passed && bc.ok();
        out.figures.push_back({"frontier_edges", static_cast<long>(bc.frontier_edges)});
        out.figures.push_back({"conditions_examined", static_cast<long>(bc.conditions_examined)});
        out.figures.push_back({"admissible_conditions", static_cast<long>(bc.admissible_conditions)});
        out.figures.push_back({"nets_per_condition", static_cast<long>(bc.nets_per_condition)});
    }
    return out;
}

CheckResult check_truncation(int cases, unsigned seed) {
    Rng rng(seed);
    const FiniteLattice host = FiniteLattice::centered(6);
    long stable = 0, nontrivial = 0;
    for (int i = 0; i < cases; ++i) {
        const int m = uniform(rng, 1, 2);
        const int n = uniform(rng, m + 1, 3);
        const int n2 = uniform(rng, n + 1, 4);
        const Region mb = FiniteLattice::centered(m).block();

        PauliOperator full = PauliOperator::identity(host.qubit_count());
        const Vertex start{uniform(rng, mb.min.x, mb.max.x), uniform(rng, mb.min.y, mb.max.y),
                           uniform(rng, mb.min.z, mb.max.z)};
        const auto path = make_path(start, random_walk(rng, start, 30));
        if (uniform(rng, 0, 1) == 0) {
            for (const auto& e : path.edges())
                if (auto q = host.index_of(e.canonical())) full.z.flip(*q);
        } else {
            // membrane swept from a dual walk through the block
            std::map<Face, int> swept;
            sweep(path.edges(), random_direction(rng), uniform(rng, 1, 6), swept);
            for (const auto& [f, bit] : swept)
                if (bit)
                    if (auto q = host.index_of(edge_of_dual_face(f).canonical())) full.x.flip(*q);
        }
        const auto tn = restrict_to_block(host, full, FiniteLattice::centered(n).block());
        const auto tn2 = restrict_to_block(host, full, FiniteLattice::centered(n2).block());
        nontrivial += tn == tn2 ? 0 : 1;

        PauliOperator obs = PauliOperator::identity(host.qubit_count());
        for (std::size_t q = 0; q < host.qubit_count(); ++q) {
            auto [a, b] = boundary_edge(host.qubit(q));
            if (!mb.contains(a) && !mb.contains(b)) continue;
            if (uniform(rng, 0, 1)) obs.x.flip(q);
            if (uniform(rng, 0, 1)) obs.z.flip(q);
        }
        stable += truncation_stable(obs, tn, tn2) ? 1 : 0;
    }

    // a z-line cut at the 2-block and at the 3-block, probed by the star just
    // below the 2-block where only the longer cut reaches
    std::vector<Edge> line;
    for (int z = -3; z <= 3; ++z) line.push_back({{0, 0, z}, Axis::Z});
    const auto full = string_op(host, line);
    const auto t2 = restrict_to_block(host, full, FiniteLattice::centered(2).block());
    const auto t3 = restrict_to_block(host, full, FiniteLattice::centered(3).block());
    const bool control = !truncation_stable(star(host, {0, 0, -1}), t2, t3);

    return {"truncation",
            stable == cases && control,
            {{"cases", cases}, {"stable", stable}, {"nontrivial_cuts", nontrivial}, {"control_detected", control ? 1 : 0}}};
}

}  // namespace tc3
