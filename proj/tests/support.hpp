#pragma once

// Shared generators and independent oracles for the unit and acceptance tests.

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "tc3/error.hpp"
#include "tc3/paths.hpp"
#include "tc3/sampling.hpp"

namespace tc3::testing {

// Kind of the Error thrown by fn, or nullopt if it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline InfinitePathSpec spec_of(const char* neg, const char* core, const char* pos, Vertex base = {}) {
    return {parse_word(neg), parse_word(core), parse_word(pos), base};
}

using tc3::Rng;
using tc3::uniform;
using tc3::random_direction;
using tc3::random_walk;
using tc3::random_monotone_word;
using tc3::random_spec;

// Breadth-first distance between a and b through vertices of r.
inline std::optional<int> bfs_distance(const Region& r, Vertex a, Vertex b) {
    if (!r.contains(a) || !r.contains(b)) return std::nullopt;
    std::map<Vertex, int> dist{{a, 0}};
    std::deque<Vertex> q{a};
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (v == b) return dist[v];
        for (int d = 0; d < 6; ++d) {
            Vertex n = v + Direction::from_index(d).offset();
            if (r.contains(n) && !dist.count(n)) {
                dist[n] = dist[v] + 1;
                q.push_back(n);
            }
        }
    }
    return std::nullopt;
}

// Monotone iff no axis is stepped in both signs over a long window of realized steps.
inline bool tally_monotone(const InfinitePathSpec& s, long reach = 400) {
    std::array<bool, 6> seen{};
    for (long t = -reach; t < static_cast<long>(s.core.size()) + reach; ++t)
        seen[static_cast<std::size_t>(step_at(s, t).index())] = true;
    return !(seen[0] && seen[1]) && !(seen[2] && seen[3]) && !(seen[4] && seen[5]);
}

// Canonical edge sites of the truncation to parameters [-m, m + |core|].
inline std::set<Edge> window_edges(const InfinitePathSpec& s, long m) {
    std::set<Edge> out;
    for (const auto& e : truncate(s, -m, m + static_cast<long>(s.core.size())).edges()) out.insert(e.canonical());
    return out;
}

}  // namespace tc3::testing
