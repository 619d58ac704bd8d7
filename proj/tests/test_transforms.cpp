#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "tc3/stabilizer.hpp"
#include "tc3/transforms.hpp"

using namespace tc3;
using namespace tc3::testing;

namespace {

FinitePath unit_loop(Vertex base, Axis normal) {
    auto es = boundary_face({base, normal});
    return validate_finite_path({es.begin(), es.end()});
}

std::multiset<int> direction_multiset(const std::vector<InfinitePathSpec>& ss) {
    std::multiset<int> out;
    for (const auto& s : ss) {
        auto d = infinity_directions(s);
        for (auto x : d.plus.members()) out.insert(x.index());
        for (auto x : d.minus.members()) out.insert(x.index());
    }
    return out;
}

}  // namespace

TEST_CASE("energy accounting") {
    Configuration cfg;
    Region r{{-3, -3, -3}, {3, 3, 3}};
    CHECK(energy(cfg, r).total == 0);
    cfg.loops.push_back(unit_loop({0, 0, 0}, Axis::Z));
    CHECK(energy(cfg, r).flux_energy == 8);
    cfg.loops.clear();
    cfg.charges = {{0, 0, 0}, {9, 9, 9}};
    auto e = energy(cfg, r);
    CHECK(e.charge_energy == 2);
    CHECK(e.total == 2);

    // the same pattern as stabilizer syndromes: a Z string from the inside charge to the far one
    FiniteLattice lat(12, {-2, -2, -2});
    std::vector<Edge> path;
    for (int x = 0; x < 9; ++x) path.push_back({{x, 0, 0}, Axis::X});
    for (int y = 0; y < 9; ++y) path.push_back({{9, y, 0}, Axis::Y});
    for (int z = 0; z < 9; ++z) path.push_back({{9, 9, z}, Axis::Z});
    CHECK(syndrome_energy(lat, string_op(lat, path), r) == 2);

    // overlapping strings cancel edge by edge
    Configuration two;
    two.strings = {spec_of("Z+", "", "Z+"), spec_of("Z+", "X+Z+Z+X-", "Z+")};
    CHECK(energy(two, Region{{0, 0, 0}, {0, 0, 4}}).flux_energy == 2 * 2);
}

TEST_CASE("projection and lift") {
    auto p = make_path({}, parse_word("X+Z+X+"));
    auto pr = project(p, Axis::Z);
    CHECK(format_word(pr.steps) == "X+X+");
    CHECK(pr.dropped == std::vector<std::size_t>{1});
    auto zz = project(make_path({}, parse_word("Z+Z+")), Axis::Z);
    CHECK(zz.steps.empty());
    CHECK(zz.dropped == std::vector<std::size_t>{0, 1});

    auto same = make_path(pr.start, pr.steps);
    CHECK(lift(p, same, pr) == p);

    // inverse U: project out x, straighten the z backtrack, lift
    auto u = make_path({}, parse_word("Z+Z+X+Z-Z-"));
    auto pu = project(u, Axis::X);
    auto flat = make_path(pu.start, staircase(pu.start, projection_end(pu)));
    auto lifted = lift(u, flat, pu);
    CHECK(lifted.start() == u.start());
    CHECK(lifted.end() == u.end());
    CHECK(lifted.size() < u.size());
    CHECK(format_word(lifted.steps()) == "X+");

    auto wrong = make_path({5, 5, 5}, {});
    CHECK(error_kind([&] { lift(u, wrong, pu); }) == ErrorKind::EndpointMismatch);

    Rng rng(17);
    int cases = 0;
    while (cases < 200) {
        // x and y wander, z only climbs
        StepWord w;
        std::set<Vertex> seen{{}};
        Vertex v{};
        for (int i = 0; i < 20; ++i) {
            Direction d = uniform(rng, 0, 4) == 0 ? Direction{Axis::Z, Sign::Plus} : Direction::from_index(uniform(rng, 0, 3));
            if (seen.count(v + d.offset())) continue;
            v = v + d.offset();
            seen.insert(v);
            w.push_back(d);
        }
        auto path = make_path({}, w);
        auto zc = std::count_if(w.begin(), w.end(), [](Direction d) { return d.axis == Axis::Z; });
        auto proj = project(path, Axis::Z);
        CHECK(proj.steps.size() == w.size() - static_cast<std::size_t>(zc));
        auto re = make_path(proj.start, staircase(proj.start, projection_end(proj)));
        auto out = lift(path, re, proj);
        CHECK(out.start() == path.start());
        CHECK(out.end() == path.end());
        CHECK(validate_finite_path(out.edges()) == out);
        ++cases;
    }
}

TEST_CASE("straightening the inverse U") {
    auto u = spec_of("Z+", "X+", "Z-");
    for (int h = 1; h <= 4; ++h) {
        Region r{{0, 0, -h}, {1, 0, 0}};
        auto step = straighten_once(u, r);
        CHECK(step.energy_before - step.energy_after == 2 * 2 * h);
        CHECK(count_edges_in_region(step.spec, r) == 1);
        CHECK(path_equivalent(step.spec, u));
        CHECK(is_monotonic(step.spec).monotonic == false);  // tails still point the same way
        auto fix = straighten_fixpoint(u, r);
        CHECK(fix.steps == 1);
    }
    CHECK(error_kind([] { straighten_once(spec_of("X+Y+", "", "X+Y+"), Region{{0, 0, 0}, {3, 3, 0}}); }) ==
          ErrorKind::AlreadyMonotonicInRegion);
    CHECK(straighten_fixpoint(spec_of("X+Y+", "", "X+Y+"), Region{{0, 0, 0}, {3, 3, 0}}).steps == 0);
    CHECK(error_kind([] { straighten_once(spec_of("Z+", "", "Z+"), Region{{5, 5, 5}, {6, 6, 6}}); }) ==
          ErrorKind::MultipleCrossings);
    // U dipping twice into a slab
    CHECK(error_kind([] { straighten_once(spec_of("Z+", "X+", "Z-"), Region{{0, 0, -3}, {1, 0, -1}}); }) ==
          ErrorKind::MultipleCrossings);
}

TEST_CASE("zigzag needs at most one step per backtrack") {
    auto z = spec_of("Z+", "X+Z+X-Z+X+Z+X-", "Z+");
    validate_spec(z);
    Region r{{-1, -1, 0}, {2, 1, 4}};
    auto fix = straighten_fixpoint(z, r);
    CHECK(fix.steps >= 1);
    CHECK(fix.steps <= 3);
    CHECK(is_monotonic(fix.spec).monotonic);
}

TEST_CASE("fixpoint segment matches breadth-first distance") {
    Rng rng(5);
    int done = 0;
    while (done < 60) {
        auto s = spec_of("Z+", "", "Z+");
        s.core = random_walk(rng, {}, 12);
        try {
            validate_spec(s);
        } catch (const Error&) {
            continue;
        }
        if (is_monotonic(s).monotonic) continue;
        std::vector<Vertex> vs;
        for (long t = 0; t <= static_cast<long>(s.core.size()); ++t) vs.push_back(vertex_at(s, t));
        Region r = Region::bounding(vs);
        auto cr = single_crossing(s, r);
        REQUIRE(cr);
        auto fix = straighten_fixpoint(s, r);
        for (const auto& st : fix.trace) {
            CHECK(st.energy_before > st.energy_after);
            CHECK((st.energy_before - st.energy_after) % 2 == 0);
            if (st.kind == StraightenCase::Planar || st.kind == StraightenCase::ProjectLift)
                CHECK(static_cast<long>(count_edges_in_region(st.spec, r)) ==
                      *bfs_distance(r, vertex_at(s, cr->t_entry), vertex_at(s, cr->t_exit)));
        }
        auto bfs = bfs_distance(r, vertex_at(s, cr->t_entry), vertex_at(s, cr->t_exit));
        REQUIRE(bfs);
        CHECK(static_cast<int>(count_edges_in_region(fix.spec, r)) == *bfs);
        CHECK(path_equivalent(fix.spec, s));
        validate_spec(fix.spec);
        ++done;
    }
}

TEST_CASE("surgery on two parallel lines") {
    Configuration cfg;
    cfg.strings = {spec_of("Z+", "", "Z+", {0, 0, 0}), spec_of("Z+", "", "Z+", {2, 0, 0})};
    std::vector<Face> rect;
    for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 3; ++z) rect.push_back({{x, 0, z}, Axis::Y});
    auto out = surgery(cfg, validate_surface(rect));
    REQUIRE(out.strings.size() == 2);
    int below = 0, above = 0;
    for (const auto& s : out.strings) {
        validate_spec(s);
        auto d = infinity_directions(s);
        CHECK(d.plus == d.minus);
        if (to_string(d.plus) == "{Z-}") ++below;
        if (to_string(d.plus) == "{Z+}") ++above;
    }
    CHECK(below == 1);
    CHECK(above == 1);

    // output edges = input edges xor the boundary, inside a window around the surface
    Region box{{-2, -2, -3}, {4, 2, 6}};
    auto in = string_edges_in_region(cfg.strings, box);
    auto got = string_edges_in_region(out.strings, box);
    auto bd = validate_surface(rect).boundary;
    std::vector<Edge> want;
    std::set_symmetric_difference(in.begin(), in.end(), bd.begin(), bd.end(), std::back_inserter(want));
    CHECK(got == want);
}

TEST_CASE("surgery detour on a single line") {
    Configuration cfg;
    cfg.strings = {spec_of("Z+", "", "Z+")};
    auto out = surgery(cfg, validate_surface({Face{{0, 0, 0}, Axis::Y}}));
    REQUIRE(out.strings.size() == 1);
    CHECK(path_equivalent(out.strings[0], cfg.strings[0]));
    Region box{{-2, -2, -2}, {2, 2, 3}};
    auto got = string_edges_in_region(out.strings, box);
    CHECK(got.size() == string_edges_in_region(cfg.strings, box).size() + 2);
    CHECK(normalized(out.strings[0]).core.size() == 3);

    CHECK(error_kind([&] { surgery(cfg, validate_surface({Face{{5, 5, 5}, Axis::Y}})); }) == ErrorKind::NoOverlap);
    std::vector<Face> cube;
    for (Axis a : kAxes) {
        cube.push_back({{0, 0, 0}, a});
        cube.push_back({unit(a), a});
    }
    CHECK(error_kind([&] { surgery(cfg, Surface{cube, {}, true, std::nullopt}); }) == ErrorKind::InvalidSurface);
    CHECK(error_kind([&] { surgery(cfg, validate_surface({Face{{0, 0, 0}, Axis::Y}, Face{{0, 0, 1}, Axis::Y}})); }) ==
          std::nullopt);
    // C-shaped surface whose boundary meets the line in two separate stretches
    std::vector<Face> c_shape{{{0, 0, 0}, Axis::Y}, {{1, 0, 0}, Axis::Y}, {{1, 0, 1}, Axis::Y}, {{1, 0, 2}, Axis::Y},
                              {{0, 0, 2}, Axis::Y}};
    CHECK(error_kind([&] { surgery(cfg, validate_surface(c_shape)); }) == ErrorKind::MultipleOverlapRuns);
}

TEST_CASE("surgery on three axis lines around a cube corner") {
    Configuration cfg;
    cfg.strings = {spec_of("X+", "", "X+", {0, 1, 0}), spec_of("Y+", "", "Y+", {0, 0, 1}),
                   spec_of("Z+", "", "Z+", {1, 0, 0})};
    std::vector<Face> corner{{{0, 0, 0}, Axis::X}, {{0, 0, 0}, Axis::Y}, {{0, 0, 0}, Axis::Z}};
    auto surf = validate_surface(corner);
    CHECK(surf.boundary.size() == 6);
    auto out = surgery(cfg, surf);
    for (const auto& s : out.strings) validate_spec(s);
    CHECK(direction_multiset(out.strings) == direction_multiset(cfg.strings));
    Region box{{-3, -3, -3}, {4, 4, 4}};
    auto in = string_edges_in_region(cfg.strings, box);
    std::vector<Edge> want;
    std::set_symmetric_difference(in.begin(), in.end(), surf.boundary.begin(), surf.boundary.end(), std::back_inserter(want));
    CHECK(string_edges_in_region(out.strings, box) == want);
}

TEST_CASE("overlap separation") {
    Configuration cfg;
    cfg.strings = {spec_of("Z+", "", "Z+"), spec_of("Z+", "X-Z+Z+X+", "Z+", {1, 0, 0})};
    validate_spec(cfg.strings[1]);
    auto out = separate_overlaps(cfg);
    CHECK(out.strings[0] == cfg.strings[0]);
    CHECK(path_equivalent(out.strings[1], cfg.strings[1]));
    Region box{{-4, -4, -4}, {4, 4, 6}};
    auto a = edges_in_region(out.strings[0], box), b = edges_in_region(out.strings[1], box);
    for (const auto& e : a)
        for (const auto& f : b) CHECK_FALSE(e.same_site(f));

    Configuration twins;
    twins.strings = {spec_of("Z+", "", "Z+"), spec_of("Z+", "", "Z+")};
    CHECK(error_kind([&] { separate_overlaps(twins); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("linking parity") {
    Edge pierced{{0, 0, 0}, Axis::Z};
    std::vector<Face> s{dual_face_of_edge(pierced)};
    CHECK(linking_parity(unit_loop({0, 0, 0}, Axis::X), s) == 1);
    CHECK(linking_parity(unit_loop({3, 3, 3}, Axis::X), s) == 0);

    // adding a closed cube around a loop vertex does not change the parity
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        Vertex b{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        auto l = unit_loop(b, axis_from_index(uniform(rng, 0, 2)));
        std::vector<Face> closed = s;
        Vertex c = b - Vertex{1, 1, 1};
        for (Axis a : kAxes) {
            closed.push_back({c, a});
            closed.push_back({c + unit(a), a});
        }
        CHECK(linking_parity(l, s) == linking_parity(l, closed));
    }
}
