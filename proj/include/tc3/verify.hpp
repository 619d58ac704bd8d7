#pragma once

// Cross-checks of the combinatorial layer against the F2 stabilizer model.
// Each check is deterministic for a given seed.

#include <string>
#include <utility>
#include <vector>

#include "tc3/stabilizer.hpp"
#include "tc3/transforms.hpp"

namespace tc3 {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::vector<std::pair<std::string, long>> figures;  // counts worth reporting, in a fixed order
};

// Energy of cfg in r computed from stabilizer syndromes. Each string and loop is
// swept along a direction that misses r until its translate lies outside r; the
// swept faces give an X membrane whose syndrome inside r is the string itself.
// Each charge gets a straight Z string running out of r.
long syndrome_energy_of(const Configuration& cfg, const Region& r);

// Every star commutes with every plaquette in the n-block, and a Z on an edge
// anticommutes with exactly the stars at its endpoints inside the block.
CheckResult check_commutation(int n);
// Random loops, truncated strings and charges around a dual n-block:
// energy() against syndrome_energy_of().
CheckResult check_energy(int n, int cases = 200, unsigned seed = 1);
CheckResult check_gauge(int n);
// Surface-net counting for n <= 2, plus the boundary-condition bijection when n = 1.
CheckResult check_nets(int n);
// Truncations of random string and membrane operators at nested n < n' <= 4
// agree on observables of an m-block (m < n), and disagree on a star at the
// frontier of the n-block.
CheckResult check_truncation(int cases = 100, unsigned seed = 1);

}  // namespace tc3
