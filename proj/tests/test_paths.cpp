#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "tc3/error.hpp"
#include "tc3/paths.hpp"

using namespace tc3;

namespace {

InfinitePathSpec spec(const char* neg, const char* core, const char* pos, Vertex base = {}) {
    return {parse_word(neg), parse_word(core), parse_word(pos), base};
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

// edges of the truncation [-m, m] lying in box, as canonical sites
std::set<Edge> box_edges(const InfinitePathSpec& s, long m, const Region& box) {
    std::set<Edge> out;
    for (const auto& e : truncate(s, -m, m).edges()) {
        auto [a, b] = boundary_edge(e);
        if (box.contains(a) && box.contains(b)) out.insert(e.canonical());
    }
    return out;
}

std::size_t sym_diff(const std::set<Edge>& a, const std::set<Edge>& b) {
    std::size_t n = 0;
    for (const auto& e : a) n += !b.count(e);
    for (const auto& e : b) n += !a.count(e);
    return n;
}

}  // namespace

TEST_CASE("finite path validation") {
    auto p = validate_finite_path({Edge{{0, 0, 0}, Axis::Z, Sign::Plus}});
    CHECK_FALSE(p.closed());
    CHECK(p.start() == Vertex{0, 0, 0});
    CHECK(p.end() == Vertex{0, 0, 1});

    auto sq = boundary_face({{0, 0, 0}, Axis::Z});
    auto loop = validate_finite_path({sq.begin(), sq.end()});
    CHECK(loop.closed());
    CHECK(loop.size() == 4);

    CHECK(kind_of([] { make_path({}, parse_word("Z+Z-")); }) == ErrorKind::SelfIntersecting);
    CHECK(kind_of([] { make_path({}, parse_word("X+Y+X-Y-X+")); }) == ErrorKind::SelfIntersecting);
    CHECK(kind_of([] {
              validate_finite_path({Edge{{0, 0, 0}, Axis::Z}, Edge{{5, 0, 0}, Axis::Z}});
          }) == ErrorKind::NotConnected);
    CHECK(loop.reversed().reversed() == loop);
}

TEST_CASE("step words") {
    CHECK(format_word(parse_word("X+Y-Z+")) == "X+Y-Z+");
    CHECK(parse_word("").empty());
    CHECK(kind_of([] { parse_word("Z+Q"); }) == ErrorKind::SyntaxError);
    CHECK(find_bad_atom("Z+Q") == std::size_t{2});
    CHECK(find_bad_atom("X+Y+") == std::nullopt);
    CHECK(primitive_root(parse_word("X+Y+X+Y+")) == parse_word("X+Y+"));
    CHECK(primitive_root(parse_word("X+Y+X+")) == parse_word("X+Y+X+"));
}

TEST_CASE("surface validation") {
    auto one = validate_surface({Face{{0, 0, 0}, Axis::Z}});
    CHECK_FALSE(one.closed);
    CHECK(one.boundary.size() == 4);
    REQUIRE(one.boundary_loop);
    CHECK(one.boundary_loop->closed());

    std::vector<Face> cube;
    for (Axis a : kAxes) {
        cube.push_back({{0, 0, 0}, a});
        cube.push_back({unit(a), a});
    }
    auto c = validate_surface(cube);
    CHECK(c.closed);
    CHECK(c.boundary.empty());

    CHECK(kind_of([] { validate_surface({Face{{0, 0, 0}, Axis::Z}, Face{{3, 0, 0}, Axis::Z}}); }) ==
          ErrorKind::MalformedBoundary);
    CHECK(kind_of([] { validate_surface({Face{{0, 0, 0}, Axis::Z}, Face{{1, 1, 0}, Axis::Z}}); }) ==
          ErrorKind::MalformedBoundary);
    CHECK(kind_of([] { validate_surface({Face{{0, 0, 0}, Axis::Z}, Face{{0, 0, 0}, Axis::Z}}); }) ==
          ErrorKind::SelfIntersecting);
    auto cube_plus = cube;
    cube_plus.push_back({{5, 5, 5}, Axis::X});
    CHECK(kind_of([&] { validate_surface(cube_plus); }) == ErrorKind::SelfIntersecting);

    std::vector<Face> rect;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y) rect.push_back({{x, y, 0}, Axis::Z});
    auto r = validate_surface(rect);
    CHECK(r.boundary.size() == 10);
    CHECK(r.boundary_loop->size() == 10);
}

TEST_CASE("truncation examples") {
    auto line = spec("Z+", "", "Z+");
    auto p = truncate(line, 0, 2);
    CHECK(p.start() == Vertex{0, 0, 0});
    CHECK(p.end() == Vertex{0, 0, 3});
    CHECK(p.size() == 3);

    auto u = spec("Z+", "X+", "Z-");
    auto q = truncate(u, -1, 1);
    CHECK(format_word(q.steps()) == "Z+X+Z-");
    CHECK(q.start() == Vertex{0, 0, -1});
    CHECK(q.end() == Vertex{1, 0, -1});

    auto stair = spec("X+Y+", "", "X+Y+");
    CHECK(format_word(truncate(stair, 0, 3).steps()) == "X+Y+X+Y+");
    CHECK(format_word(truncate(stair, -2, -1).steps()) == "X+Y+");
    CHECK(vertex_at(stair, -2) == Vertex{-1, -1, 0});
}

TEST_CASE("spec validation is exact") {
    CHECK(kind_of([] { validate_spec(spec("Z+", "", "X+X-")); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { validate_spec(spec("", "", "Z+")); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { validate_spec(spec("Z+", "", "Z-")); }) == ErrorKind::SelfIntersecting);
    CHECK(kind_of([] { validate_spec(spec("Z+", "X+Z-X-", "Z+")); }) == ErrorKind::SelfIntersecting);
    validate_spec(spec("Z+", "X+", "Z-"));
    validate_spec(spec("X+Y+", "", "X+Y+"));

    // tails that only meet ten periods out
    std::string core;
    for (int i = 0; i < 10; ++i) core += "Y+";
    auto far = spec("Y-X-", core.c_str(), "X+");
    truncate(far, -6, 16);  // short truncations look fine
    CHECK(kind_of([&] { validate_spec(far); }) == ErrorKind::SelfIntersecting);
    CHECK(kind_of([&] { truncate(far, -40, 40); }) == ErrorKind::SelfIntersecting);
}

TEST_CASE("infinity directions") {
    auto line = infinity_directions(spec("Z+", "", "Z+"));
    CHECK(to_string(line.plus) == "{Z+}");
    CHECK(to_string(line.minus) == "{Z-}");
    auto u = infinity_directions(spec("Z+", "X+", "Z-"));
    CHECK(to_string(u.plus) == "{Z-}");
    CHECK(to_string(u.minus) == "{Z-}");

    // tally far steps of the realized path
    for (auto s : {spec("X-Y-", "", "X+Y+"), spec("X+Y+", "Z+", "X+Y+"), spec("Y+Z+Z+", "X-X-", "X+Z-")}) {
        DirSet plus, minus;
        for (long t = 50; t < 10050; ++t) plus.insert(step_at(s, t));
        for (long t = -10050; t < -50; ++t) minus.insert(step_at(s, t).reversed());
        auto d = infinity_directions(s);
        CHECK(d.plus == plus);
        CHECK(d.minus == minus);
        auto r = infinity_directions(reversed(s));
        CHECK(r.plus == d.minus);
        CHECK(r.minus == d.plus);
        for (int k = 0; k <= 5; ++k) {
            auto w = infinity_directions(rewindow(s, k, 5 - k));
            CHECK(w.plus == d.plus);
            CHECK(w.minus == d.minus);
        }
    }
    auto v = infinity_directions(spec("X-Y-", "", "X+Y+"));
    CHECK(to_string(v.minus) == "{X+,Y+}");
}

TEST_CASE("monotonicity") {
    auto line = is_monotonic(spec("Z+", "", "Z+"));
    CHECK(line.monotonic);
    CHECK(line.signs[2] == Sign::Plus);
    CHECK_FALSE(line.signs[0]);
    CHECK_FALSE(is_monotonic(spec("Z+", "X+", "Z-")).monotonic);
    auto stair = is_monotonic(spec("X+Y+", "", "X+Y+"));
    CHECK(stair.monotonic);
    CHECK(stair.signs[0] == Sign::Plus);
    CHECK(stair.signs[1] == Sign::Plus);
}

TEST_CASE("path equivalence") {
    auto line = spec("Z+", "Z+Z+", "Z+");
    auto bump = spec("Z+", "X+Z+Z+X-", "Z+");
    validate_spec(bump);
    CHECK(path_equivalent(line, bump));
    CHECK_FALSE(path_equivalent(line, spec("Z+", "", "Z+", {1, 0, 0})));
    CHECK(path_equivalent(line, reversed(line)));
    CHECK(path_equivalent(line, rewindow(line, 3, 2)));
    CHECK(path_equivalent(spec("Z+Z+", "", "Z+"), line));
    CHECK(path_equivalent(spec("X+Y+", "", "X+Y+"), spec("Y+X+", "", "Y+X+", {1, 0, 0})));
    CHECK_FALSE(path_equivalent(spec("X+Y+", "", "X+Y+"), spec("Y+X+", "", "Y+X+")));

    // inverse U against a version with the bend pulled down by two
    auto u = spec("Z+", "X+", "Z-");
    auto lowered = spec("Z+", "X+", "Z-", {0, 0, -2});
    CHECK(path_equivalent(u, lowered));
    Region small{{-3, -3, -3}, {3, 3, 3}}, big{{-9, -9, -9}, {9, 9, 9}};
    CHECK(sym_diff(box_edges(u, 60, small), box_edges(lowered, 60, small)) == 6);
    CHECK(sym_diff(box_edges(u, 60, big), box_edges(lowered, 60, big)) == 6);
    // a genuinely different pair keeps growing
    auto shifted = spec("Z+", "X+", "Z-", {0, 1, 0});
    CHECK(sym_diff(box_edges(u, 60, small), box_edges(shifted, 60, small)) <
          sym_diff(box_edges(u, 60, big), box_edges(shifted, 60, big)));
    CHECK_FALSE(path_equivalent(u, shifted));
}

TEST_CASE("edge counts in regions") {
    auto line = spec("Z+", "", "Z+");
    CHECK(count_edges_in_region(line, {{0, 0, 0}, {0, 0, 5}}) == 5);
    CHECK(count_edges_in_region(line, {{2, 2, 0}, {4, 4, 5}}) == 0);
    auto stair = spec("X+Y+", "", "X+Y+");
    CHECK(count_edges_in_region(stair, {{0, 0, 0}, {3, 3, 0}}) == 6);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    const InfinitePathSpec specs[] = {stair, spec("Z+", "X+", "Z-"), spec("X+Y+Z+", "Y+Y+X+", "Z+Z+Y-"),
                                      spec("Y+", "X+X+Z-", "X+")};
    for (const auto& s : specs) {
        validate_spec(s);
        for (int i = 0; i < 100; ++i) {
            Vertex a{c(rng), c(rng), c(rng)}, b{c(rng), c(rng), c(rng)};
            Region r = Region::bounding({a, b});
            std::size_t brute = 0;
            for (const auto& e : truncate(s, -200, 200).edges()) {
                auto [p, q] = boundary_edge(e);
                brute += r.contains(p) && r.contains(q);
            }
            CHECK(count_edges_in_region(s, r) == brute);
        }
    }
}

TEST_CASE("enclosing region") {
    auto line = spec("Z+", "", "Z+", {3, 4, 5});
    CHECK(enclosing_region(line).contains({3, 4, 5}));
    auto u = enclosing_region(spec("Z+", "X+", "Z-"));
    CHECK(u == Region{{0, 0, 0}, {1, 0, 0}});
    auto s = spec("Z+", "X+Y+Z+X-Y-Z-Z-", "Z-");
    // no check on validity here: only the non-Z steps matter
    auto r = enclosing_region(s);
    CHECK(r == Region{{0, 0, 0}, {1, 1, 1}});
}

TEST_CASE("normalized strips whole periods") {
    auto s = spec("Z+Z+", "Z+X+Z+Z+", "Z+");
    auto n = normalized(s);
    CHECK(format_word(n.neg_period) == "Z+");
    CHECK(format_word(n.core) == "X+");
    CHECK(n.base == Vertex{0, 0, 1});
    CHECK(path_equivalent(s, n));
}
