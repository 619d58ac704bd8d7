#pragma once

// Random generators shared by the self-checks, the acceptance run and the tests.

#include <array>
#include <random>
#include <set>
#include <vector>

#include "tc3/error.hpp"
#include "tc3/paths.hpp"

namespace tc3 {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Direction random_direction(Rng& rng) { return Direction::from_index(uniform(rng, 0, 5)); }

// Self-avoiding walk of up to `len` steps; stops early when stuck.
inline StepWord random_walk(Rng& rng, Vertex start, int len, std::set<Vertex> avoid = {}) {
    StepWord w;
    Vertex v = start;
    avoid.insert(v);
    for (int i = 0; i < len; ++i) {
        std::vector<Direction> free;
        for (int d = 0; d < 6; ++d) {
            Vertex n = v + Direction::from_index(d).offset();
            if (!avoid.count(n)) free.push_back(Direction::from_index(d));
        }
        if (free.empty()) break;
        Direction d = free[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(free.size()) - 1))];
        v = v + d.offset();
        avoid.insert(v);
        w.push_back(d);
    }
    return w;
}

// Period word whose letters use one sign per axis.
inline StepWord random_monotone_word(Rng& rng, int max_len = 3) {
    std::array<Sign, 3> sg{};
    for (auto& s : sg) s = uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus;
    int len = uniform(rng, 1, max_len);
    StepWord w;
    for (int i = 0; i < len; ++i) {
        Axis a = axis_from_index(uniform(rng, 0, 2));
        w.push_back({a, sg[static_cast<std::size_t>(index_of(a))]});
    }
    return w;
}

// Valid spec with monotone tail words and a random self-avoiding core near `centre`.
inline InfinitePathSpec random_spec(Rng& rng, int core_len, int max_period = 3, Vertex centre = {}) {
    for (;;) {
        InfinitePathSpec s{random_monotone_word(rng, max_period), {}, random_monotone_word(rng, max_period),
                           centre + Vertex{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}};
        s.core = random_walk(rng, s.base, core_len);
        try {
            validate_spec(s);
            return s;
        } catch (const Error&) {
        }
    }
}

}  // namespace tc3
