#pragma once

// Cubic lattice Z^3 and its dual. Dual vertices carry integer coordinates d;
// geometrically they sit at the primal cell centre d + (1/2,1/2,1/2).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tc3 {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };
enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr int index_of(Axis a) { return static_cast<int>(a); }
constexpr Axis axis_from_index(int i) { return static_cast<Axis>(i); }
constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int sign_value(Sign s) { return static_cast<int>(s); }

char axis_name(Axis a);
char sign_char(Sign s);

struct Vertex {
    int x = 0, y = 0, z = 0;

    constexpr int operator[](Axis a) const { return a == Axis::X ? x : a == Axis::Y ? y : z; }
    constexpr int& operator[](Axis a) { return a == Axis::X ? x : a == Axis::Y ? y : z; }

    friend constexpr Vertex operator+(Vertex a, Vertex b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vertex operator-(Vertex a, Vertex b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vertex operator*(long k, Vertex v) {
        return {static_cast<int>(k * v.x), static_cast<int>(k * v.y), static_cast<int>(k * v.z)};
    }
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex unit(Axis a, Sign s = Sign::Plus) {
    Vertex v;
    v[a] = sign_value(s);
    return v;
}

inline int l1_norm(Vertex v) { return (v.x < 0 ? -v.x : v.x) + (v.y < 0 ? -v.y : v.y) + (v.z < 0 ? -v.z : v.z); }
std::string to_string(Vertex v);

struct Direction {
    Axis axis = Axis::X;
    Sign sign = Sign::Plus;

    constexpr Direction reversed() const { return {axis, opposite(sign)}; }
    // 0..5 as X+, X-, Y+, Y-, Z+, Z-
    constexpr int index() const { return index_of(axis) * 2 + (sign == Sign::Plus ? 0 : 1); }
    static constexpr Direction from_index(int i) {
        return {axis_from_index(i / 2), (i % 2 == 0) ? Sign::Plus : Sign::Minus};
    }
    constexpr Vertex offset() const { return unit(axis, sign); }

    friend constexpr bool operator==(Direction a, Direction b) { return a.index() == b.index(); }
    friend constexpr auto operator<=>(Direction a, Direction b) { return a.index() <=> b.index(); }
};

std::string to_string(Direction d);  // "X+"
std::optional<Direction> parse_direction(std::string_view atom);

// An edge is identified by (base, axis); `traversal` only matters inside paths.
struct Edge {
    Vertex base;
    Axis axis = Axis::X;
    Sign traversal = Sign::Plus;

    Edge canonical() const { return {base, axis, Sign::Plus}; }
    bool same_site(const Edge& o) const { return base == o.base && axis == o.axis; }
    Direction direction() const { return {axis, traversal}; }
    Edge reversed() const { return {base, axis, opposite(traversal)}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Face {
    Vertex base;
    Axis normal = Axis::Z;
    friend auto operator<=>(const Face&, const Face&) = default;
};

// Inclusive cuboid.
struct Region {
    Vertex min;
    Vertex max;

    bool contains(Vertex v) const {
        return v.x >= min.x && v.x <= max.x && v.y >= min.y && v.y <= max.y && v.z >= min.z &&
               v.z <= max.z;
    }
    Region inflated(int k) const { return {min - Vertex{k, k, k}, max + Vertex{k, k, k}}; }
    Region unite(const Region& o) const;
    static Region around(Vertex v) { return {v, v}; }
    static Region bounding(const std::vector<Vertex>& vs);  // vs nonempty

    friend bool operator==(const Region&, const Region&) = default;
};

std::string to_string(const Region& r);

// Two axes orthogonal to a, in cyclic order.
constexpr std::pair<Axis, Axis> transverse_axes(Axis a) {
    return {axis_from_index((index_of(a) + 1) % 3), axis_from_index((index_of(a) + 2) % 3)};
}

Edge edge_from(Vertex from, Direction d);
std::pair<Vertex, Vertex> boundary_edge(const Edge& e);
std::array<Edge, 4> boundary_face(const Face& f);  // closed loop starting at f.base
std::array<Vertex, 4> face_corners(const Face& f);
std::array<Face, 4> faces_containing(const Edge& e);
std::array<Edge, 6> star_edges(Vertex v);

// Primal face <-> dual edge, primal edge <-> dual face.
Edge dual_edge_of_face(const Face& primal_face);
Face face_of_dual_edge(const Edge& dual_edge);
Face dual_face_of_edge(const Edge& primal_edge);
Edge edge_of_dual_face(const Face& dual_face);

std::vector<Edge> edges_in_region(const Region& r);
std::size_t edge_count_in_region(const Region& r);

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(v.x);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(v.y);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(v.z);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct EdgeSiteHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return VertexHash{}(e.base) * 3 + static_cast<std::size_t>(e.axis);
    }
};
struct EdgeSiteEq {
    bool operator()(const Edge& a, const Edge& b) const noexcept { return a.same_site(b); }
};

}  // namespace tc3
