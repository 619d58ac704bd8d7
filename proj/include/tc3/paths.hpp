#pragma once

// Paths and surfaces on the dual lattice. Geometry is shared with the primal
// lattice, so the same types also describe primal loops.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tc3/lattice.hpp"

namespace tc3 {

using StepWord = std::vector<Direction>;

std::string format_word(const StepWord& w);
// Throws Error(SyntaxError); the message carries the character offset of the bad atom.
StepWord parse_word(std::string_view text);
// Offset (in characters) of the first invalid atom, if any.
std::optional<std::size_t> find_bad_atom(std::string_view text);

Vertex displacement(const StepWord& w);
StepWord reversed_word(const StepWord& w);  // reverse order, flip each letter

class FinitePath {
public:
    FinitePath() = default;

    Vertex start() const { return start_; }
    Vertex end() const { return end_; }
    const StepWord& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    bool closed() const { return closed_; }

    std::vector<Vertex> vertices() const;
    std::vector<Edge> edges() const;
    FinitePath reversed() const;

    friend bool operator==(const FinitePath&, const FinitePath&) = default;

private:
    friend FinitePath make_path(Vertex, StepWord);
    Vertex start_;
    Vertex end_;
    StepWord steps_;
    bool closed_ = false;
};

// Validating constructors. An empty step list gives a zero-length path.
FinitePath make_path(Vertex start, StepWord steps);
FinitePath validate_finite_path(const std::vector<Edge>& edges);

struct Surface {
    std::vector<Face> faces;          // sorted, unique
    std::vector<Edge> boundary;       // canonical edges, sorted
    bool closed = false;              // empty boundary
    std::optional<FinitePath> boundary_loop;
};

Surface validate_surface(std::vector<Face> faces);
// mod-2 boundary chain of an arbitrary face multiset
std::vector<Edge> boundary_chain(const std::vector<Face>& faces);

// 6-bit set of directions, bit i = Direction::from_index(i).
struct DirSet {
    std::uint8_t bits = 0;

    bool contains(Direction d) const { return (bits >> d.index()) & 1U; }
    void insert(Direction d) { bits |= static_cast<std::uint8_t>(1U << d.index()); }
    int size() const;
    bool empty() const { return bits == 0; }
    DirSet operator&(DirSet o) const { return {static_cast<std::uint8_t>(bits & o.bits)}; }
    DirSet operator|(DirSet o) const { return {static_cast<std::uint8_t>(bits | o.bits)}; }
    DirSet reversed() const;
    std::vector<Direction> members() const;

    friend bool operator==(DirSet, DirSet) = default;
};

std::string to_string(DirSet s);  // "{X+,Z-}"

struct InfinityDirections {
    DirSet plus;
    DirSet minus;
    DirSet all() const { return plus | minus; }
};

// Eventually periodic bi-infinite path. Steps t = 0..|core|-1 are the core,
// t >= |core| cycle through pos_period, t < 0 cycle through neg_period read
// right to left (t = -1 is the last letter). base is the vertex before step 0.
struct InfinitePathSpec {
    StepWord neg_period;
    StepWord core;
    StepWord pos_period;
    Vertex base;

    friend bool operator==(const InfinitePathSpec&, const InfinitePathSpec&) = default;
};

// Throws Error(InvalidSpec) for empty or zero-displacement periods and
// Error(SelfIntersecting) when any two realized vertices coincide. The check is
// exact: tails are handled as arithmetic progressions.
void validate_spec(const InfinitePathSpec& spec);

Direction step_at(const InfinitePathSpec& spec, long t);
Vertex vertex_at(const InfinitePathSpec& spec, long t);  // vertex before step t
FinitePath truncate(const InfinitePathSpec& spec, long a, long b);  // steps a..b inclusive

InfinityDirections infinity_directions(const InfinitePathSpec& spec);

struct Monotonicity {
    bool monotonic = false;
    std::array<std::optional<Sign>, 3> signs;  // nullopt: axis unused (free)
};
Monotonicity is_monotonic(const InfinitePathSpec& spec);

bool path_equivalent(const InfinitePathSpec& p, const InfinitePathSpec& q);

// Step parameters t whose edge could have both endpoints in r; a superset,
// outside of which the path never touches r.
std::pair<long, long> parameter_window(const InfinitePathSpec& spec, const Region& r);
std::size_t count_edges_in_region(const InfinitePathSpec& spec, const Region& r);
std::vector<Edge> edges_in_region(const InfinitePathSpec& spec, const Region& r);

Region enclosing_region(const InfinitePathSpec& spec);

InfinitePathSpec reversed(const InfinitePathSpec& spec);
// Absorb k_neg negative periods and k_pos positive periods into the core.
InfinitePathSpec rewindow(const InfinitePathSpec& spec, int k_neg, int k_pos);
// Reduce each period to its primitive root and strip whole periods off the core ends.
InfinitePathSpec normalized(const InfinitePathSpec& spec);

// Outward description of one tail: vertices anchor + prefix sums of the
// repeated word. `word` is primitive.
struct Ray {
    Vertex anchor;
    StepWord word;
};
Ray positive_ray(const InfinitePathSpec& spec);
Ray negative_ray(const InfinitePathSpec& spec);  // outward = walking toward t -> -inf
bool rays_eventually_coincide(const Ray& a, const Ray& b);

StepWord primitive_root(const StepWord& w);

}  // namespace tc3
