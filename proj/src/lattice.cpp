#include "tc3/lattice.hpp"

#include <algorithm>

#include "tc3/error.hpp"

namespace tc3 {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::SelfIntersecting: return "SelfIntersecting";
        case ErrorKind::MalformedBoundary: return "MalformedBoundary";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::EndpointMismatch: return "EndpointMismatch";
        case ErrorKind::AlreadyMonotonicInRegion: return "AlreadyMonotonicInRegion";
        case ErrorKind::MultipleCrossings: return "MultipleCrossings";
        case ErrorKind::NoOverlap: return "NoOverlap";
        case ErrorKind::MultipleOverlapRuns: return "MultipleOverlapRuns";
        case ErrorKind::InvalidSurface: return "InvalidSurface";
        case ErrorKind::NotAGroundSector: return "NotAGroundSector";
        case ErrorKind::OutOfRegion: return "OutOfRegion";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::SemanticError: return "SemanticError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::UnknownCommand: return "UnknownCommand";
    }
    return "Unknown";
}

char axis_name(Axis a) { return "XYZ"[index_of(a)]; }
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")";
}

std::string to_string(Direction d) { return {axis_name(d.axis), sign_char(d.sign)}; }

std::optional<Direction> parse_direction(std::string_view atom) {
    if (atom.size() != 2) return std::nullopt;
    Direction d;
    switch (atom[0]) {
        case 'X': case 'x': d.axis = Axis::X; break;
        case 'Y': case 'y': d.axis = Axis::Y; break;
        case 'Z': case 'z': d.axis = Axis::Z; break;
        default: return std::nullopt;
    }
    if (atom[1] == '+') d.sign = Sign::Plus;
    else if (atom[1] == '-') d.sign = Sign::Minus;
    else return std::nullopt;
    return d;
}

std::string to_string(const Region& r) { return to_string(r.min) + ":" + to_string(r.max); }

Region Region::unite(const Region& o) const {
    return {{std::min(min.x, o.min.x), std::min(min.y, o.min.y), std::min(min.z, o.min.z)},
            {std::max(max.x, o.max.x), std::max(max.y, o.max.y), std::max(max.z, o.max.z)}};
}

Region Region::bounding(const std::vector<Vertex>& vs) {
    Region r{vs.front(), vs.front()};
    for (const auto& v : vs) r = r.unite(around(v));
    return r;
}

Edge edge_from(Vertex from, Direction d) {
    if (d.sign == Sign::Plus) return {from, d.axis, Sign::Plus};
    return {from - unit(d.axis), d.axis, Sign::Minus};
}

std::pair<Vertex, Vertex> boundary_edge(const Edge& e) {
    Vertex a = e.base;
    Vertex b = e.base + unit(e.axis);
    if (e.traversal == Sign::Plus) return {a, b};
    return {b, a};
}

std::array<Edge, 4> boundary_face(const Face& f) {
    auto [s, t] = transverse_axes(f.normal);
    return {Edge{f.base, s, Sign::Plus}, Edge{f.base + unit(s), t, Sign::Plus},
            Edge{f.base + unit(t), s, Sign::Minus}, Edge{f.base, t, Sign::Minus}};
}

std::array<Vertex, 4> face_corners(const Face& f) {
    auto [s, t] = transverse_axes(f.normal);
    return {f.base, f.base + unit(s), f.base + unit(s) + unit(t), f.base + unit(t)};
}

std::array<Face, 4> faces_containing(const Edge& e) {
    auto [s, t] = transverse_axes(e.axis);
    // normal s: the face spans (axis, t); normal t: it spans (axis, s)
    return {Face{e.base, s}, Face{e.base - unit(t), s}, Face{e.base, t}, Face{e.base - unit(s), t}};
}

std::array<Edge, 6> star_edges(Vertex v) {
    return {Edge{v, Axis::X}, Edge{v - unit(Axis::X), Axis::X}, Edge{v, Axis::Y},
            Edge{v - unit(Axis::Y), Axis::Y}, Edge{v, Axis::Z}, Edge{v - unit(Axis::Z), Axis::Z}};
}

Edge dual_edge_of_face(const Face& f) { return {f.base - unit(f.normal), f.normal, Sign::Plus}; }

Face face_of_dual_edge(const Edge& e) { return {e.base + unit(e.axis), e.axis}; }

Face dual_face_of_edge(const Edge& e) {
    auto [s, t] = transverse_axes(e.axis);
    return {e.base - unit(s) - unit(t), e.axis};
}

Edge edge_of_dual_face(const Face& f) {
    auto [s, t] = transverse_axes(f.normal);
    return {f.base + unit(s) + unit(t), f.normal, Sign::Plus};
}

std::vector<Edge> edges_in_region(const Region& r) {
    std::vector<Edge> out;
    for (Axis a : kAxes) {
        Vertex hi = r.max;
        hi[a] -= 1;
        for (int x = r.min.x; x <= hi.x; ++x)
            for (int y = r.min.y; y <= hi.y; ++y)
                for (int z = r.min.z; z <= hi.z; ++z) out.push_back(Edge{{x, y, z}, a});
    }
    return out;
}

std::size_t edge_count_in_region(const Region& r) {
    std::size_t total = 0;
    for (Axis a : kAxes) {
        std::size_t n = 1;
        for (Axis b : kAxes) {
            long len = static_cast<long>(r.max[b]) - r.min[b] + 1 - (a == b ? 1 : 0);
            if (len <= 0) { n = 0; break; }
            n *= static_cast<std::size_t>(len);
        }
        total += n;
    }
    return total;
}

}  // namespace tc3
