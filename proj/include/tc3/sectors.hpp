#pragma once

// Ground-state and ground-sector decisions, sector labels, and the brute-force
// inventory of infinity-direction assignments for two and three strings.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tc3/paths.hpp"
#include "tc3/transforms.hpp"

namespace tc3 {

int charge_parity(const Configuration& cfg);

struct Witness {
    enum class Kind {
        NonMonotonic,      // string uses both signs of `axis`
        SelfCollision,     // `direction` in D+ and D- of one string
        PairCollision,     // `direction` shared by the D-sets of strings i and j
        TotalCollision,    // strict reading: `direction` shared by every string
        TooManyStrings,    // four or more strings
        FiniteLoop,        // loop i is present
    };
    Kind kind = Kind::NonMonotonic;
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<Direction> direction;
    std::optional<Axis> axis;
};
std::string to_string(Witness::Kind k);
std::string describe(const Witness& w);

struct GroundStateVerdict {
    bool ground_state = false;
    bool frustration_free = false;  // ground state and no charges
    std::vector<Witness> reasons;   // empty iff ground_state
};
GroundStateVerdict is_ground_state(const Configuration& cfg);

enum class VerdictKind { GroundState, GroundSectorNotGroundState, NotGroundSector };
std::string to_string(VerdictKind k);

// Pairwise: D-sets disjoint for every pair of strings. Strict: only the
// intersection of all D-sets has to be empty.
enum class GscMode { Pairwise, Strict };

struct ScriptEntry {
    enum class Action { Straighten, RemoveLoop };
    Action action = Action::Straighten;
    std::size_t index = 0;
    Region region;
    int steps = 0;
    std::vector<long> energy_drops;
};

struct SectorVerdict {
    VerdictKind kind = VerdictKind::NotGroundSector;
    std::optional<Witness> witness;
    std::vector<ScriptEntry> script;
    std::optional<Configuration> representative;  // after running the script
    bool reaches_ground_state = false;
};
SectorVerdict is_ground_sector(const Configuration& cfg, GscMode mode = GscMode::Pairwise);

// Region in which straightening a string makes it monotone: the bounding box of
// k periods around the core, for the smallest k that gives a single crossing
// whose entry-to-exit displacement agrees with the tail signs.
std::optional<Region> straightening_region(const InfinitePathSpec& spec);

struct RayTag {
    Direction direction;          // outward direction of the straight ray
    std::array<int, 2> transverse;  // coordinates of its supporting line
    friend bool operator==(const RayTag&, const RayTag&) = default;
};

struct StringClass {
    enum class Kind { P, Q, R };
    Kind kind = Kind::P;
    DirSet directions;            // D
    std::vector<RayTag> pinned;   // two rays for P, the singleton side for Q, none for R
    friend bool operator==(const StringClass&, const StringClass&) = default;
};
std::string to_string(const StringClass& c);

struct SectorLabel {
    int g = 0;
    std::vector<StringClass> strings;
    std::optional<std::string> case_name;  // "I", "II.A", ..., or "A"/"B"/"C" for three strings
    friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};
// Throws Error(NotAGroundSector) unless is_ground_sector accepts the configuration.
SectorLabel sector_label(const Configuration& cfg, GscMode mode = GscMode::Pairwise);

// Case names for direction assignments; each string is (D+, D-).
using TailPair = std::pair<DirSet, DirSet>;
std::string two_string_case(const TailPair& a, const TailPair& b);
std::string three_string_case(const TailPair& a, const TailPair& b, const TailPair& c);

struct CaseSummary {
    std::size_t raw = 0;     // ordered solutions
    std::size_t orbits = 0;      // up to string order, D+/- swap and the 48 cube symmetries
    std::size_t set_orbits = 0;  // same, forgetting how each D splits into D+ and D-
    std::size_t split_types = 0; // distinct multisets of (|D+|, |D-|) pairs
    std::set<std::string> reduces_to;  // other cases reachable by one re-pairing of half-tails
};

struct EnumerationReport {
    int strings = 0;
    std::size_t raw_count = 0;          // nested loops over (D+, D-) pairs
    std::size_t raw_count_second = 0;   // each direction assigned to a side or to none
    std::size_t raw_count_formula = 0;  // inclusion-exclusion
    std::map<std::string, CaseSummary> cases;
    bool shapes_ok = false;  // every solution satisfies its case constraints
};
// n in {2, 3}; Throws InvalidArgument otherwise.
EnumerationReport enumerate_gsc_solutions(int n);

// The 48 signed axis permutations as permutations of direction indices.
std::vector<std::array<int, 6>> octahedral_group();

}  // namespace tc3
