#include "tc3/paths.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tc3/error.hpp"
#include "tc3/f2.hpp"

namespace tc3 {

// ---------------------------------------------------------------- words

std::string format_word(const StepWord& w) {
    std::string s;
    s.reserve(w.size() * 2);
    for (auto d : w) s += to_string(d);
    return s;
}

std::optional<std::size_t> find_bad_atom(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); i += 2) {
        if (i + 1 >= text.size() || !parse_direction(text.substr(i, 2))) return i;
    }
    return std::nullopt;
}

StepWord parse_word(std::string_view text) {
    if (auto bad = find_bad_atom(text)) {
        throw Error(ErrorKind::SyntaxError, "invalid step atom '" +
                                                std::string(text.substr(*bad, 2)) +
                                                "' at offset " + std::to_string(*bad));
    }
    StepWord w;
    for (std::size_t i = 0; i < text.size(); i += 2) w.push_back(*parse_direction(text.substr(i, 2)));
    return w;
}

Vertex displacement(const StepWord& w) {
    Vertex v;
    for (auto d : w) v = v + d.offset();
    return v;
}

StepWord reversed_word(const StepWord& w) {
    StepWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->reversed());
    return r;
}

StepWord primitive_root(const StepWord& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return StepWord(w.begin(), w.begin() + static_cast<long>(d));
    }
    return w;
}

// ---------------------------------------------------------------- finite paths

std::vector<Vertex> FinitePath::vertices() const {
    std::vector<Vertex> vs{start_};
    vs.reserve(steps_.size() + 1);
    for (auto d : steps_) vs.push_back(vs.back() + d.offset());
    return vs;
}

std::vector<Edge> FinitePath::edges() const {
    std::vector<Edge> es;
    es.reserve(steps_.size());
    Vertex v = start_;
    for (auto d : steps_) {
        es.push_back(edge_from(v, d));
        v = v + d.offset();
    }
    return es;
}

FinitePath FinitePath::reversed() const { return make_path(end_, reversed_word(steps_)); }

FinitePath make_path(Vertex start, StepWord steps) {
    FinitePath p;
    p.start_ = start;
    p.steps_ = std::move(steps);
    auto vs = p.vertices();
    p.end_ = vs.back();
    p.closed_ = !p.steps_.empty() && p.end_ == p.start_;
    if (p.closed_ && p.steps_.size() < 4)
        throw Error(ErrorKind::SelfIntersecting, "path returns to its start after " +
                                                     std::to_string(p.steps_.size()) + " steps");
    std::unordered_set<Vertex, VertexHash> seen;
    const std::size_t distinct = p.closed_ ? vs.size() - 1 : vs.size();
    for (std::size_t i = 0; i < distinct; ++i) {
        if (!seen.insert(vs[i]).second)
            throw Error(ErrorKind::SelfIntersecting, "vertex " + to_string(vs[i]) + " visited twice");
    }
    return p;
}

FinitePath validate_finite_path(const std::vector<Edge>& edges) {
    if (edges.empty()) throw Error(ErrorKind::InvalidArgument, "empty edge list");
    StepWord steps;
    Vertex start = boundary_edge(edges.front()).first;
    Vertex at = start;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = boundary_edge(edges[i]);
        if (a != at)
            throw Error(ErrorKind::NotConnected, "edge " + std::to_string(i) + " does not start at " +
                                                     to_string(at));
        steps.push_back(edges[i].direction());
        at = b;
    }
    return make_path(start, std::move(steps));
}

// ---------------------------------------------------------------- surfaces

std::vector<Edge> boundary_chain(const std::vector<Face>& faces) {
    std::set<Edge> odd;
    for (const auto& f : faces)
        for (const auto& e : boundary_face(f)) {
            auto c = e.canonical();
            if (!odd.erase(c)) odd.insert(c);
        }
    return {odd.begin(), odd.end()};
}

Surface validate_surface(std::vector<Face> faces) {
    if (faces.empty()) throw Error(ErrorKind::MalformedBoundary, "surface has no faces");
    std::sort(faces.begin(), faces.end());
    if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
        throw Error(ErrorKind::SelfIntersecting, "face listed twice");

    Surface s;
    s.faces = faces;
    s.boundary = boundary_chain(faces);
    s.closed = s.boundary.empty();

    if (!s.closed) {
        std::map<Vertex, std::vector<Vertex>> adj;
        for (const auto& e : s.boundary) {
            auto [a, b] = boundary_edge(e);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (const auto& [v, nb] : adj)
            if (nb.size() != 2)
                throw Error(ErrorKind::MalformedBoundary,
                            "boundary vertex " + to_string(v) + " has degree " + std::to_string(nb.size()));
        const Vertex start = adj.begin()->first;
        Vertex prev = start;
        Vertex at = std::min(adj[start][0], adj[start][1]);
        StepWord steps{};
        auto step_between = [](Vertex a, Vertex b) {
            Vertex d = b - a;
            for (int i = 0; i < 6; ++i)
                if (Direction::from_index(i).offset() == d) return Direction::from_index(i);
            throw Error(ErrorKind::MalformedBoundary, "non-adjacent boundary vertices");
        };
        steps.push_back(step_between(start, at));
        while (at != start) {
            const auto& nb = adj[at];
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            steps.push_back(step_between(at, next));
            prev = at;
            at = next;
        }
        if (steps.size() != s.boundary.size())
            throw Error(ErrorKind::MalformedBoundary, "boundary splits into several loops");
        s.boundary_loop = make_path(start, std::move(steps));
    }

    // A proper subset of faces with zero boundary means the surface folds onto itself.
    std::map<Edge, std::size_t> column;
    for (const auto& f : faces)
        for (const auto& e : boundary_face(f)) column.emplace(e.canonical(), column.size());
    std::vector<BitVec> rows;
    for (const auto& f : faces) {
        BitVec row(column.size());
        for (const auto& e : boundary_face(f)) row.flip(column.at(e.canonical()));
        rows.push_back(std::move(row));
    }
    const std::size_t nullity = faces.size() - f2_rank(std::move(rows));
    if (nullity > 1 || (nullity == 1 && !s.closed))
        throw Error(ErrorKind::SelfIntersecting, "a proper subset of faces forms a closed surface");
    return s;
}

// ---------------------------------------------------------------- direction sets

int DirSet::size() const { return std::popcount(static_cast<unsigned>(bits)); }

DirSet DirSet::reversed() const {
    DirSet r;
    for (auto d : members()) r.insert(d.reversed());
    return r;
}

std::vector<Direction> DirSet::members() const {
    std::vector<Direction> out;
    for (int i = 0; i < 6; ++i)
        if ((bits >> i) & 1U) out.push_back(Direction::from_index(i));
    return out;
}

std::string to_string(DirSet s) {
    std::string out = "{";
    bool first = true;
    for (auto d : s.members()) {
        if (!first) out += ",";
        out += to_string(d);
        first = false;
    }
    return out + "}";
}

// ---------------------------------------------------------------- spec geometry

namespace {

Vertex prefix_sum(const StepWord& w, std::size_t j) {
    Vertex v;
    for (std::size_t i = 0; i < j; ++i) v = v + w[i].offset();
    return v;
}

// sum of the last j letters
Vertex suffix_sum(const StepWord& w, std::size_t j) {
    Vertex v;
    for (std::size_t i = w.size() - j; i < w.size(); ++i) v = v + w[i].offset();
    return v;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct V3 {
    long x, y, z;
    long operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }
};
V3 widen(Vertex v) { return {v.x, v.y, v.z}; }
V3 cross(V3 a, V3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
bool is_zero(V3 v) { return v.x == 0 && v.y == 0 && v.z == 0; }

// integer k with d = k a, a nonzero
std::optional<long> integer_multiple(V3 d, V3 a) {
    if (!is_zero(cross(d, a))) return std::nullopt;
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        if (d[i] % a[i] != 0) return std::nullopt;
        return d[i] / a[i];
    }
    return std::nullopt;
}

// Is there k, m >= 0 with k a - m b = c? a, b nonzero.
bool nonneg_solution(V3 a, V3 b, V3 c) {
    V3 nb{-b.x, -b.y, -b.z};
    if (!is_zero(cross(a, b))) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                long det = a[i] * nb[j] - a[j] * nb[i];
                if (det == 0) continue;
                long kn = c[i] * nb[j] - c[j] * nb[i];
                long mn = a[i] * c[j] - a[j] * c[i];
                if (kn % det || mn % det) return false;
                long k = kn / det, m = mn / det;
                if (k < 0 || m < 0) return false;
                for (int r = 0; r < 3; ++r)
                    if (k * a[r] + m * nb[r] != c[r]) return false;
                return true;
            }
        return false;
    }
    if (!is_zero(cross(c, a))) return false;
    int i = a[0] != 0 ? 0 : a[1] != 0 ? 1 : 2;
    long alpha = a[i], beta = nb[i], gamma = c[i];
    if (alpha < 0) { alpha = -alpha; beta = -beta; gamma = -gamma; }
    if (beta > 0) {
        if (gamma < 0) return false;
        for (long k = 0; k * alpha <= gamma; ++k)
            if ((gamma - k * alpha) % beta == 0) return true;
        return false;
    }
    // opposite directions: k alpha - m |beta| = gamma has nonnegative solutions iff gcd divides gamma
    return gamma % std::gcd(alpha, -beta) == 0;
}

struct TailForm {
    Vertex anchor;              // last vertex before the tail
    Vertex net;                 // displacement per period, outward
    std::vector<Vertex> offs;   // u_1..u_P relative to anchor
};

TailForm pos_tail(const InfinitePathSpec& s) {
    TailForm t{vertex_at(s, static_cast<long>(s.core.size())), displacement(s.pos_period), {}};
    for (std::size_t j = 1; j <= s.pos_period.size(); ++j) t.offs.push_back(prefix_sum(s.pos_period, j));
    return t;
}

TailForm neg_tail(const InfinitePathSpec& s) {
    TailForm t{s.base, Vertex{} - displacement(s.neg_period), {}};
    for (std::size_t j = 1; j <= s.neg_period.size(); ++j) t.offs.push_back(Vertex{} - suffix_sum(s.neg_period, j));
    return t;
}

void check_tail_self(const TailForm& t, const char* name) {
    for (std::size_t j = 0; j < t.offs.size(); ++j)
        for (std::size_t l = j + 1; l < t.offs.size(); ++l)
            if (integer_multiple(widen(t.offs[j] - t.offs[l]), widen(t.net)))
                throw Error(ErrorKind::SelfIntersecting, std::string(name) + " tail revisits a vertex");
}

void check_tail_vs_points(const TailForm& t, const std::vector<Vertex>& pts, const char* name) {
    for (const auto& p : pts)
        for (const auto& u : t.offs) {
            auto k = integer_multiple(widen(p - t.anchor - u), widen(t.net));
            if (k && *k >= 0)
                throw Error(ErrorKind::SelfIntersecting,
                            std::string(name) + " tail runs into " + to_string(p));
        }
}

}  // namespace

Direction step_at(const InfinitePathSpec& s, long t) {
    const long c = static_cast<long>(s.core.size());
    if (t >= 0 && t < c) return s.core[static_cast<std::size_t>(t)];
    if (t >= c) {
        const long p = static_cast<long>(s.pos_period.size());
        return s.pos_period[static_cast<std::size_t>((t - c) % p)];
    }
    const long n = static_cast<long>(s.neg_period.size());
    const long back = (-t - 1) % n;
    return s.neg_period[static_cast<std::size_t>(n - 1 - back)];
}

Vertex vertex_at(const InfinitePathSpec& s, long t) {
    const long c = static_cast<long>(s.core.size());
    if (t >= 0 && t <= c) return s.base + prefix_sum(s.core, static_cast<std::size_t>(t));
    if (t > c) {
        const long p = static_cast<long>(s.pos_period.size());
        const long q = (t - c) / p, r = (t - c) % p;
        return s.base + displacement(s.core) + q * displacement(s.pos_period) +
               prefix_sum(s.pos_period, static_cast<std::size_t>(r));
    }
    const long n = static_cast<long>(s.neg_period.size());
    const long q = (-t) / n, r = (-t) % n;
    return s.base - q * displacement(s.neg_period) - suffix_sum(s.neg_period, static_cast<std::size_t>(r));
}

void validate_spec(const InfinitePathSpec& s) {
    if (s.neg_period.empty() || s.pos_period.empty())
        throw Error(ErrorKind::InvalidSpec, "tail periods must be nonempty");
    if (displacement(s.neg_period) == Vertex{} || displacement(s.pos_period) == Vertex{})
        throw Error(ErrorKind::InvalidSpec, "tail period has zero net displacement");

    std::vector<Vertex> core_pts{s.base};
    for (auto d : s.core) core_pts.push_back(core_pts.back() + d.offset());
    {
        std::unordered_set<Vertex, VertexHash> seen;
        for (const auto& v : core_pts)
            if (!seen.insert(v).second)
                throw Error(ErrorKind::SelfIntersecting, "core revisits " + to_string(v));
    }
    const TailForm pos = pos_tail(s), neg = neg_tail(s);
    check_tail_self(pos, "positive");
    check_tail_self(neg, "negative");
    check_tail_vs_points(pos, core_pts, "positive");
    check_tail_vs_points(neg, core_pts, "negative");
    for (const auto& u : pos.offs)
        for (const auto& w : neg.offs) {
            V3 c = widen(neg.anchor + w - pos.anchor - u);
            if (nonneg_solution(widen(pos.net), widen(neg.net), c))
                throw Error(ErrorKind::SelfIntersecting, "the two tails meet");
        }
}

FinitePath truncate(const InfinitePathSpec& s, long a, long b) {
    if (a > b) throw Error(ErrorKind::InvalidArgument, "truncate needs a <= b");
    StepWord w;
    w.reserve(static_cast<std::size_t>(b - a + 1));
    for (long t = a; t <= b; ++t) w.push_back(step_at(s, t));
    return make_path(vertex_at(s, a), std::move(w));
}

InfinityDirections infinity_directions(const InfinitePathSpec& s) {
    InfinityDirections d;
    for (auto x : s.pos_period) d.plus.insert(x);
    for (auto x : s.neg_period) d.minus.insert(x.reversed());
    return d;
}

Monotonicity is_monotonic(const InfinitePathSpec& s) {
    DirSet used;
    for (const auto* w : {&s.neg_period, &s.core, &s.pos_period})
        for (auto d : *w) used.insert(d);
    Monotonicity m;
    m.monotonic = true;
    for (Axis a : kAxes) {
        bool plus = used.contains({a, Sign::Plus}), minus = used.contains({a, Sign::Minus});
        if (plus && minus) m.monotonic = false;
        else if (plus) m.signs[index_of(a)] = Sign::Plus;
        else if (minus) m.signs[index_of(a)] = Sign::Minus;
    }
    if (!m.monotonic) m.signs = {};
    return m;
}

Ray positive_ray(const InfinitePathSpec& s) {
    return {vertex_at(s, static_cast<long>(s.core.size())), primitive_root(s.pos_period)};
}

Ray negative_ray(const InfinitePathSpec& s) { return {s.base, primitive_root(reversed_word(s.neg_period))}; }

bool rays_eventually_coincide(const Ray& a, const Ray& b) {
    const std::size_t n = a.word.size();
    if (b.word.size() != n) return false;
    const Vertex net = displacement(a.word);
    for (std::size_t r = 0; r < n; ++r) {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = b.word[i] == a.word[(i + r) % n];
        if (!same) continue;
        Vertex d = a.anchor + prefix_sum(a.word, r) - b.anchor;
        if (integer_multiple(widen(d), widen(net))) return true;
    }
    return false;
}

bool path_equivalent(const InfinitePathSpec& p, const InfinitePathSpec& q) {
    const Ray p1 = positive_ray(p), p2 = negative_ray(p), q1 = positive_ray(q), q2 = negative_ray(q);
    return (rays_eventually_coincide(p1, q1) && rays_eventually_coincide(p2, q2)) ||
           (rays_eventually_coincide(p1, q2) && rays_eventually_coincide(p2, q1));
}

namespace {

// Number of whole periods after which the tail stays outside r for good.
long escape_periods(const TailForm& t, const Region& r) {
    long best = -1;
    for (Axis a : kAxes) {
        const long step = t.net[a];
        if (step == 0) continue;
        long lo = t.offs.front()[a], hi = lo;
        for (const auto& u : t.offs) {
            lo = std::min<long>(lo, u[a]);
            hi = std::max<long>(hi, u[a]);
        }
        long k;
        if (step > 0) k = floor_div(static_cast<long>(r.max[a]) - t.anchor[a] - lo, step) + 1;
        else k = floor_div(t.anchor[a] + hi - static_cast<long>(r.min[a]), -step) + 1;
        k = std::max(k, 0L);
        if (best < 0 || k < best) best = k;
    }
    return best;
}

}  // namespace

std::pair<long, long> parameter_window(const InfinitePathSpec& s, const Region& r) {
    const long c = static_cast<long>(s.core.size());
    const long kp = escape_periods(pos_tail(s), r);
    const long kn = escape_periods(neg_tail(s), r);
    return {-(kn + 1) * static_cast<long>(s.neg_period.size()),
            c + (kp + 1) * static_cast<long>(s.pos_period.size()) - 1};
}

std::vector<Edge> edges_in_region(const InfinitePathSpec& s, const Region& r) {
    auto [lo, hi] = parameter_window(s, r);
    std::vector<Edge> out;
    Vertex v = vertex_at(s, lo);
    for (long t = lo; t <= hi; ++t) {
        Direction d = step_at(s, t);
        Vertex w = v + d.offset();
        if (r.contains(v) && r.contains(w)) out.push_back(edge_from(v, d));
        v = w;
    }
    return out;
}

std::size_t count_edges_in_region(const InfinitePathSpec& s, const Region& r) {
    return edges_in_region(s, r).size();
}

Region enclosing_region(const InfinitePathSpec& s) {
    const DirSet d = infinity_directions(s).all();
    std::vector<Vertex> pts;
    Vertex v = s.base;
    for (auto step : s.core) {
        Vertex w = v + step.offset();
        if (!d.contains(step) && !d.contains(step.reversed())) {
            pts.push_back(v);
            pts.push_back(w);
        }
        v = w;
    }
    if (pts.empty()) return Region::around(s.base);
    return Region::bounding(pts);
}

InfinitePathSpec reversed(const InfinitePathSpec& s) {
    return {reversed_word(s.pos_period), reversed_word(s.core), reversed_word(s.neg_period),
            vertex_at(s, static_cast<long>(s.core.size()))};
}

InfinitePathSpec rewindow(const InfinitePathSpec& s, int k_neg, int k_pos) {
    const long lo = -static_cast<long>(k_neg) * static_cast<long>(s.neg_period.size());
    const long hi = static_cast<long>(s.core.size()) + static_cast<long>(k_pos) * static_cast<long>(s.pos_period.size());
    InfinitePathSpec out{s.neg_period, {}, s.pos_period, vertex_at(s, lo)};
    for (long t = lo; t < hi; ++t) out.core.push_back(step_at(s, t));
    return out;
}

InfinitePathSpec normalized(const InfinitePathSpec& s) {
    InfinitePathSpec out{primitive_root(s.neg_period), s.core, primitive_root(s.pos_period), s.base};
    const std::size_t p = out.pos_period.size(), n = out.neg_period.size();
    while (out.core.size() >= p &&
           std::equal(out.pos_period.begin(), out.pos_period.end(), out.core.end() - static_cast<long>(p)))
        out.core.resize(out.core.size() - p);
    while (out.core.size() >= n && std::equal(out.neg_period.begin(), out.neg_period.end(), out.core.begin())) {
        out.base = out.base + displacement(out.neg_period);
        out.core.erase(out.core.begin(), out.core.begin() + static_cast<long>(n));
    }
    return out;
}

}  // namespace tc3
