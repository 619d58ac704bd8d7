#include "tc3/sectors.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "tc3/error.hpp"

namespace tc3 {

int charge_parity(const Configuration& cfg) { return static_cast<int>(cfg.charges.size() % 2); }

std::string to_string(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::NonMonotonic: return "non_monotonic";
        case Witness::Kind::SelfCollision: return "self_collision";
        case Witness::Kind::PairCollision: return "pair_collision";
        case Witness::Kind::TotalCollision: return "total_collision";
        case Witness::Kind::TooManyStrings: return "too_many_strings";
        case Witness::Kind::FiniteLoop: return "finite_loop";
    }
    return "?";
}

std::string describe(const Witness& w) {
    const std::string i = std::to_string(w.i), j = std::to_string(w.j);
    switch (w.kind) {
        case Witness::Kind::NonMonotonic:
            return "string " + i + " steps both ways along " + std::string(1, axis_name(*w.axis));
        case Witness::Kind::SelfCollision:
            return "string " + i + " has " + to_string(*w.direction) + " at both ends";
        case Witness::Kind::PairCollision:
            return "strings " + i + " and " + j + " both run off along " + to_string(*w.direction);
        case Witness::Kind::TotalCollision:
            return "every string runs off along " + to_string(*w.direction);
        case Witness::Kind::TooManyStrings:
            return std::to_string(w.i) + " strings; at most three fit";
        case Witness::Kind::FiniteLoop:
            return "loop " + i + " is present";
    }
    return "?";
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::GroundState: return "GroundState";
        case VerdictKind::GroundSectorNotGroundState: return "GroundSectorNotGroundState";
        case VerdictKind::NotGroundSector: return "NotGroundSector";
    }
    return "?";
}

namespace {

std::optional<Axis> first_bad_axis(const InfinitePathSpec& s) {
    DirSet used;
    for (const auto* w : {&s.neg_period, &s.core, &s.pos_period})
        for (auto d : *w) used.insert(d);
    for (Axis a : kAxes)
        if (used.contains({a, Sign::Plus}) && used.contains({a, Sign::Minus})) return a;
    return std::nullopt;
}

std::optional<Direction> first_of(DirSet s) {
    if (s.empty()) return std::nullopt;
    return s.members().front();
}

std::optional<Witness> pair_collision(const Configuration& cfg) {
    for (std::size_t i = 0; i < cfg.strings.size(); ++i) {
        const DirSet di = infinity_directions(cfg.strings[i]).all();
        for (std::size_t j = i + 1; j < cfg.strings.size(); ++j) {
            if (auto d = first_of(di & infinity_directions(cfg.strings[j]).all()))
                return Witness{Witness::Kind::PairCollision, i, j, d, {}};
        }
    }
    return std::nullopt;
}

}  // namespace

GroundStateVerdict is_ground_state(const Configuration& cfg) {
    GroundStateVerdict v;
    for (std::size_t i = 0; i < cfg.strings.size(); ++i) {
        const auto& s = cfg.strings[i];
        if (auto a = first_bad_axis(s)) v.reasons.push_back({Witness::Kind::NonMonotonic, i, i, {}, a});
        const auto id = infinity_directions(s);
        if (auto d = first_of(id.plus & id.minus)) v.reasons.push_back({Witness::Kind::SelfCollision, i, i, d, {}});
    }
    if (auto w = pair_collision(cfg)) v.reasons.push_back(*w);
    for (std::size_t i = 0; i < cfg.loops.size(); ++i) v.reasons.push_back({Witness::Kind::FiniteLoop, i, i, {}, {}});
    v.ground_state = v.reasons.empty();
    v.frustration_free = v.ground_state && cfg.charges.empty();
    return v;
}

std::optional<Region> straightening_region(const InfinitePathSpec& spec) {
    // forward letters of both tails fix the only admissible sign per axis
    DirSet tails;
    for (auto d : spec.neg_period) tails.insert(d);
    for (auto d : spec.pos_period) tails.insert(d);
    if ((tails & tails.reversed()).size() != 0) return std::nullopt;

    const long core = static_cast<long>(spec.core.size());
    const long np = static_cast<long>(spec.neg_period.size()), pp = static_cast<long>(spec.pos_period.size());
    for (int k = 1; k <= 64; ++k) {
        std::vector<Vertex> vs;
        for (long t = -k * np; t <= core + k * pp; ++t) vs.push_back(vertex_at(spec, t));
        const Region r = Region::bounding(vs);
        auto cr = single_crossing(spec, r);
        if (!cr) continue;
        const Vertex net = vertex_at(spec, cr->t_exit) - vertex_at(spec, cr->t_entry);
        bool agrees = true;
        for (Axis a : kAxes) {
            if (net[a] == 0) continue;
            const Sign s = net[a] > 0 ? Sign::Plus : Sign::Minus;
            if (tails.contains({a, opposite(s)})) agrees = false;
        }
        if (!agrees) continue;
        try {
            if (is_monotonic(straighten_fixpoint(spec, r).spec).monotonic) return r;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

SectorVerdict is_ground_sector(const Configuration& cfg, GscMode mode) {
    SectorVerdict out;
    const std::size_t n = cfg.strings.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = infinity_directions(cfg.strings[i]);
        if (auto d = first_of(id.plus & id.minus)) {
            out.witness = Witness{Witness::Kind::SelfCollision, i, i, d, {}};
            return out;
        }
    }
    if (mode == GscMode::Pairwise) {
        if (auto w = pair_collision(cfg)) {
            out.witness = w;
            return out;
        }
    } else if (n >= 2) {
        DirSet common{0x3F};
        for (const auto& s : cfg.strings) common = common & infinity_directions(s).all();
        if (auto d = first_of(common)) {
            out.witness = Witness{Witness::Kind::TotalCollision, 0, n - 1, d, {}};
            return out;
        }
    }
    if (n >= 4) {
        out.witness = Witness{Witness::Kind::TooManyStrings, n, n, {}, {}};
        return out;
    }

    if (is_ground_state(cfg).ground_state) {
        out.kind = VerdictKind::GroundState;
        out.representative = cfg;
        out.reaches_ground_state = true;
        return out;
    }

    out.kind = VerdictKind::GroundSectorNotGroundState;
    Configuration rep = cfg;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_monotonic(rep.strings[i]).monotonic) continue;
        auto r = straightening_region(rep.strings[i]);
        if (!r) continue;
        auto fx = straighten_fixpoint(rep.strings[i], *r);
        ScriptEntry e{ScriptEntry::Action::Straighten, i, *r, fx.steps, {}};
        for (const auto& st : fx.trace) e.energy_drops.push_back(st.energy_before - st.energy_after);
        out.script.push_back(std::move(e));
        rep.strings[i] = fx.spec;
    }
    for (std::size_t i = 0; i < cfg.loops.size(); ++i) {
        ScriptEntry e{ScriptEntry::Action::RemoveLoop, i, Region::bounding(cfg.loops[i].vertices()), 0, {}};
        e.energy_drops.push_back(2 * static_cast<long>(cfg.loops[i].size()));
        out.script.push_back(std::move(e));
    }
    rep.loops.clear();
    out.reaches_ground_state = is_ground_state(rep).ground_state;
    out.representative = std::move(rep);
    return out;
}

namespace {

bool antipodal(DirSet d) {
    if (d.size() != 2) return false;
    auto m = d.members();
    return m[0].axis == m[1].axis;
}

RayTag tag_of(const Ray& ray) {
    const Direction d = ray.word.front();
    auto [s, t] = transverse_axes(d.axis);
    return {d, {ray.anchor[s], ray.anchor[t]}};
}

StringClass classify_string(const InfinitePathSpec& spec) {
    const auto id = infinity_directions(spec);
    StringClass c;
    c.directions = id.all();
    const int np = id.plus.size(), nm = id.minus.size();
    if (np == 1 && nm == 1) {
        c.kind = StringClass::Kind::P;
        c.pinned = {tag_of(negative_ray(spec)), tag_of(positive_ray(spec))};
    } else if ((np == 1 || nm == 1) && np + nm <= 4) {
        c.kind = StringClass::Kind::Q;
        c.pinned = {np == 1 ? tag_of(positive_ray(spec)) : tag_of(negative_ray(spec))};
    } else {
        c.kind = StringClass::Kind::R;
    }
    return c;
}

}  // namespace

std::string to_string(const StringClass& c) {
    std::string s = c.kind == StringClass::Kind::P ? "P" : c.kind == StringClass::Kind::Q ? "Q" : "R";
    s += to_string(c.directions);
    for (const auto& t : c.pinned)
        s += "[" + to_string(t.direction) + "@" + std::to_string(t.transverse[0]) + "," + std::to_string(t.transverse[1]) + "]";
    return s;
}

std::string two_string_case(const TailPair& a, const TailPair& b) {
    DirSet d1 = a.first | a.second, d2 = b.first | b.second;
    if (!(d1 & d2).empty() || a.first.empty() || a.second.empty() || b.first.empty() || b.second.empty())
        throw Error(ErrorKind::InvalidArgument, "not a two-string solution");
    if (d1.size() > d2.size()) std::swap(d1, d2);
    const int n1 = d1.size(), n2 = d2.size();
    if (n1 == 2 && n2 == 2) return "I";
    if (n1 == 2 && n2 == 3) {
        if (antipodal(d1)) return "II.C";
        if ((d2 & d1.reversed()) == d1.reversed()) return "II.A";
        return "II.B";
    }
    if (n1 == 2 && n2 == 4) return antipodal(d1) ? "III.A" : "III.B";
    if (n1 == 3 && n2 == 3) return "IV.A";
    throw Error(ErrorKind::InvalidArgument, "unexpected direction counts");
}

std::string three_string_case(const TailPair& a, const TailPair& b, const TailPair& c) {
    int anti = 0;
    DirSet seen;
    for (const auto* p : {&a, &b, &c}) {
        const DirSet d = p->first | p->second;
        if (p->first.empty() || p->second.empty() || !(seen & d).empty())
            throw Error(ErrorKind::InvalidArgument, "not a three-string solution");
        seen = seen | d;
        anti += antipodal(d) ? 1 : 0;
    }
    if (anti == 3) return "A";
    if (anti == 1) return "B";
    if (anti == 0) return "C";
    throw Error(ErrorKind::InvalidArgument, "two antipodal strings force a third");
}

SectorLabel sector_label(const Configuration& cfg, GscMode mode) {
    const auto v = is_ground_sector(cfg, mode);
    if (v.kind == VerdictKind::NotGroundSector)
        throw Error(ErrorKind::NotAGroundSector, v.witness ? describe(*v.witness) : "not a ground sector");
    SectorLabel label;
    label.g = charge_parity(cfg);
    std::vector<TailPair> pairs;
    for (const auto& s : cfg.strings) {
        label.strings.push_back(classify_string(s));
        const auto id = infinity_directions(s);
        pairs.emplace_back(id.plus, id.minus);
    }
    const bool disjoint = !pair_collision(cfg);
    if (disjoint && pairs.size() == 2) label.case_name = two_string_case(pairs[0], pairs[1]);
    if (disjoint && pairs.size() == 3) label.case_name = three_string_case(pairs[0], pairs[1], pairs[2]);
    return label;
}

std::vector<std::array<int, 6>> octahedral_group() {
    std::vector<std::array<int, 6>> out;
    std::array<int, 3> perm{0, 1, 2};
    do {
        for (int flips = 0; flips < 8; ++flips) {
            std::array<int, 6> g{};
            for (int d = 0; d < 6; ++d) {
                const int axis = d / 2;
                const int sign = (d % 2) ^ ((flips >> axis) & 1);
                g[static_cast<std::size_t>(d)] = perm[static_cast<std::size_t>(axis)] * 2 + sign;
            }
            out.push_back(g);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

using Solution = std::vector<TailPair>;

std::string case_of(const Solution& s) {
    return s.size() == 2 ? two_string_case(s[0], s[1]) : three_string_case(s[0], s[1], s[2]);
}

DirSet apply(const std::array<int, 6>& g, DirSet s) {
    DirSet out;
    for (auto d : s.members()) out.insert(Direction::from_index(g[static_cast<std::size_t>(d.index())]));
    return out;
}

// Orientation-free, order-free, symmetry-reduced key.
std::vector<std::pair<int, int>> canonical(const Solution& s, const std::vector<std::array<int, 6>>& group) {
    std::vector<std::pair<int, int>> best;
    for (const auto& g : group) {
        std::vector<std::pair<int, int>> key;
        for (const auto& [p, m] : s) {
            int a = apply(g, p).bits, b = apply(g, m).bits;
            key.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(key.begin(), key.end());
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<int> canonical_sets(const Solution& s, const std::vector<std::array<int, 6>>& group) {
    std::vector<int> best;
    for (const auto& g : group) {
        std::vector<int> key;
        for (const auto& [p, m] : s) key.push_back(apply(g, p | m).bits);
        std::sort(key.begin(), key.end());
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<std::pair<int, int>> split_type(const Solution& s) {
    std::vector<std::pair<int, int>> key;
    for (const auto& [p, m] : s) key.emplace_back(std::min(p.size(), m.size()), std::max(p.size(), m.size()));
    std::sort(key.begin(), key.end());
    return key;
}

bool is_flip_of(Direction a, Direction b) { return a == b.reversed(); }

// Case constraints written out directly, independent of the classifier.
bool shape_holds(const std::string& name, Solution s) {
    auto dirs = [](const TailPair& p) { return (p.first | p.second).members(); };
    if (s.size() == 2) {
        if (dirs(s[0]).size() > dirs(s[1]).size()) std::swap(s[0], s[1]);
        auto d1 = dirs(s[0]), d2 = dirs(s[1]);
        auto has = [&](Direction d) { return std::find(d2.begin(), d2.end(), d) != d2.end(); };
        auto pair_on = [&](Axis a) { return has({a, Sign::Plus}) && has({a, Sign::Minus}); };
        if (name == "I") return d1.size() == 2 && d2.size() == 2;
        if (name == "IV.A") return d1.size() == 3 && d2.size() == 3;
        if (d1.size() != 2) return false;
        const Direction a = d1[0], b = d1[1];
        if (name == "II.A") {
            if (d2.size() != 3 || a.axis == b.axis || !has(a.reversed()) || !has(b.reversed())) return false;
            return std::any_of(d2.begin(), d2.end(), [&](Direction d) { return d.axis != a.axis && d.axis != b.axis; });
        }
        if (name == "II.B") {
            if (d2.size() != 3 || a.axis == b.axis || has(a.reversed()) == has(b.reversed())) return false;
            for (Axis x : kAxes)
                if (x != a.axis && x != b.axis) return pair_on(x);
            return false;
        }
        if (name == "II.C") {
            if (d2.size() != 3 || a.axis != b.axis) return false;
            int pairs = 0;
            for (Axis x : kAxes) pairs += (x != a.axis && pair_on(x)) ? 1 : 0;
            return pairs == 1;
        }
        if (name == "III.A" || name == "III.B") {
            if (d2.size() != 4) return false;
            return (name == "III.A") == (a.axis == b.axis);
        }
        return false;
    }
    std::vector<std::vector<Direction>> d;
    for (const auto& p : s) d.push_back(dirs(p));
    for (const auto& x : d)
        if (x.size() != 2) return false;
    auto anti = [](const std::vector<Direction>& x) { return x[0].axis == x[1].axis; };
    auto flips = [&](const std::vector<Direction>& x, const std::vector<Direction>& y) {
        return (is_flip_of(x[0], y[0]) && is_flip_of(x[1], y[1])) || (is_flip_of(x[0], y[1]) && is_flip_of(x[1], y[0]));
    };
    if (name == "A") return anti(d[0]) && anti(d[1]) && anti(d[2]);
    if (name == "B") {
        for (int k = 0; k < 3; ++k) {
            const auto& p = d[static_cast<std::size_t>((k + 1) % 3)];
            const auto& q = d[static_cast<std::size_t>((k + 2) % 3)];
            if (anti(d[static_cast<std::size_t>(k)]) && !anti(p) && !anti(q) && flips(p, q)) return true;
        }
        return false;
    }
    if (name == "C") {
        if (anti(d[0]) || anti(d[1]) || anti(d[2])) return false;
        // each string shares exactly one axis with each other string
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int shared = 0;
                for (auto x : d[static_cast<std::size_t>(i)])
                    for (auto y : d[static_cast<std::size_t>(j)]) shared += is_flip_of(x, y) ? 1 : 0;
                if (shared != 1) return false;
            }
        return true;
    }
    return false;
}

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

}  // namespace

EnumerationReport enumerate_gsc_solutions(int n) {
    if (n != 2 && n != 3) throw Error(ErrorKind::InvalidArgument, "enumeration supports 2 or 3 strings");
    EnumerationReport rep;
    rep.strings = n;

    std::vector<TailPair> pairs;
    for (int p = 1; p < 64; ++p)
        for (int m = 1; m < 64; ++m)
            if ((p & m) == 0) pairs.push_back({DirSet{static_cast<std::uint8_t>(p)}, DirSet{static_cast<std::uint8_t>(m)}});

    std::vector<Solution> sols;
    Solution cur;
    std::function<void(DirSet)> rec = [&](DirSet used) {
        if (static_cast<int>(cur.size()) == n) {
            sols.push_back(cur);
            return;
        }
        for (const auto& tp : pairs) {
            const DirSet d = tp.first | tp.second;
            if (!(d & used).empty()) continue;
            cur.push_back(tp);
            rec(used | d);
            cur.pop_back();
        }
    };
    rec(DirSet{});
    rep.raw_count = sols.size();

    // each direction goes to one of the 2n sides or to none; count surjective-on-sides maps
    const int sides = 2 * n;
    std::size_t total = 1;
    for (int i = 0; i < 6; ++i) total *= static_cast<std::size_t>(sides + 1);
    for (std::size_t code = 0; code < total; ++code) {
        int hit = 0;
        std::size_t c = code;
        for (int i = 0; i < 6; ++i, c /= static_cast<std::size_t>(sides + 1)) {
            const auto side = static_cast<int>(c % static_cast<std::size_t>(sides + 1));
            if (side < sides) hit |= 1 << side;
        }
        if (hit == (1 << sides) - 1) ++rep.raw_count_second;
    }

    long long formula = 0;
    for (int k = 0; k <= sides; ++k) {
        long long term = static_cast<long long>(binomial(sides, k));
        for (int i = 0; i < 6; ++i) term *= (sides + 1 - k);
        formula += (k % 2 ? -term : term);
    }
    rep.raw_count_formula = static_cast<std::size_t>(formula);

    const auto group = octahedral_group();
    std::map<std::string, std::set<std::vector<std::pair<int, int>>>> orbit_keys, split_keys;
    std::map<std::string, std::set<std::vector<int>>> set_keys;
    rep.shapes_ok = true;
    for (const auto& s : sols) {
        const std::string name = case_of(s);
        auto& cs = rep.cases[name];
        ++cs.raw;
        if (!shape_holds(name, s)) rep.shapes_ok = false;
        set_keys[name].insert(canonical_sets(s, group));
        split_keys[name].insert(split_type(s));
        const auto key = canonical(s, group);
        if (!orbit_keys[name].insert(key).second) continue;
        // one representative per orbit suffices for the re-pairing graph
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                for (int twist = 0; twist < 2; ++twist) {
                    Solution t = s;
                    const DirSet other_first = twist ? s[j].second : s[j].first;
                    const DirSet other_second = twist ? s[j].first : s[j].second;
                    t[i] = {s[i].first, other_first};
                    t[j] = {other_second, s[i].second};
                    const std::string after = case_of(t);
                    if (after != name) cs.reduces_to.insert(after);
                }
    }
    for (auto& [name, cs] : rep.cases) {
        cs.orbits = orbit_keys[name].size();
        cs.set_orbits = set_keys[name].size();
        cs.split_types = split_keys[name].size();
    }
    return rep;
}

}  // namespace tc3
