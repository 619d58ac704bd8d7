#pragma once

// Energy accounting, straightening of non-monotone segments, and surgery of
// strings along the boundary of a finite dual surface.

#include <cstddef>
#include <optional>
#include <vector>

#include "tc3/lattice.hpp"
#include "tc3/paths.hpp"

namespace tc3 {

struct Configuration {
    std::vector<Vertex> charges;              // primal vertices
    std::vector<InfinitePathSpec> strings;    // dual
    std::vector<FinitePath> loops;            // dual, closed

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Throws on an invalid string spec (InvalidSpec / SelfIntersecting) or an open loop
// (MalformedBoundary). Strings may overlap each other.
void validate_configuration(const Configuration& cfg);

struct EnergyReport {
    Region region;
    long flux_energy = 0;    // 2 x flux edges with both dual endpoints in region, after mod-2 cancellation
    long charge_energy = 0;  // 2 x charges in region (same integer corners, primal reading)
    long total = 0;
};
EnergyReport energy(const Configuration& cfg, const Region& r);

// Canonical edge sites of the mod-2 sum of all strings and loops inside r.
std::vector<Edge> flux_edges_in_region(const Configuration& cfg, const Region& r);

struct Projection {
    Vertex start;
    StepWord steps;                    // non-axis steps in order; may revisit vertices
    Axis axis = Axis::Z;               // dropped axis
    std::vector<std::size_t> dropped;  // positions of the dropped steps in the original
};
Projection project(const FinitePath& path, Axis axis);
Vertex projection_end(const Projection& p);

// Reinsert the dropped steps into a rerouted projection. Each dropped step goes
// back in front of the kept step it preceded, clamped to the rerouted length.
// Throws EndpointMismatch if the reroute does not join the projection's
// endpoints, SelfIntersecting if the lift collides with itself.
FinitePath lift(const FinitePath& original, const FinitePath& rerouted, const Projection& proj);

// Monotone staircase from a to b: all x steps, then y, then z.
StepWord staircase(Vertex a, Vertex b);

enum class StraightenCase { Planar, ProjectLift, SubRun, FullSegment };
const char* to_string(StraightenCase c);

struct StraightenStep {
    InfinitePathSpec spec;
    StraightenCase kind = StraightenCase::Planar;
    long energy_before = 0;  // 2 x edges of the string inside the region
    long energy_after = 0;
    Vertex entry, exit;      // where the realized path enters and leaves the region
};

// Requires the realized vertices inside r to form one contiguous stretch
// (MultipleCrossings otherwise, including when none lie in r) and the stretch
// to be non-monotone (AlreadyMonotonicInRegion otherwise).
StraightenStep straighten_once(const InfinitePathSpec& spec, const Region& r);
InfinitePathSpec straighten(const InfinitePathSpec& spec, const Region& r);

struct FixpointResult {
    InfinitePathSpec spec;
    int steps = 0;
    std::vector<StraightenStep> trace;
};
// Errors from the first straighten_once other than AlreadyMonotonicInRegion propagate.
FixpointResult straighten_fixpoint(const InfinitePathSpec& spec, const Region& r);

// Entry/exit parameters of the single stretch of realized vertices in r.
struct Crossing {
    long t_entry = 0;  // vertex_at(t_entry) is the first vertex inside
    long t_exit = 0;   // vertex_at(t_exit) is the last vertex inside
};
std::optional<Crossing> single_crossing(const InfinitePathSpec& spec, const Region& r);

// Splice strings along the boundary loop of an open dual surface. Each string
// may share at most one contiguous run of edges with the loop.
// Throws NoOverlap, MultipleOverlapRuns, InvalidSurface.
Configuration surgery(const Configuration& cfg, const Surface& surface);

// Move overlapping stretches of later strings one unit aside until no two
// strings share an edge. Throws InvalidArgument when strings share infinitely
// many edges.
Configuration separate_overlaps(const Configuration& cfg);

// Edges of the realized paths in r, as a sorted list of canonical sites with
// odd multiplicity across all strings.
std::vector<Edge> string_edges_in_region(const std::vector<InfinitePathSpec>& strings, const Region& r);

// Parity of the primal loop edges whose dual face belongs to the surface.
int linking_parity(const FinitePath& primal_loop, const Surface& dual_surface);
int linking_parity(const FinitePath& primal_loop, const std::vector<Face>& dual_faces);

}  // namespace tc3
