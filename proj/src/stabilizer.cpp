#include "tc3/stabilizer.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tc3/error.hpp"

namespace tc3 {

namespace {

bool touches(const Region& block, const Edge& e) {
    auto [a, b] = boundary_edge(e);
    return block.contains(a) || block.contains(b);
}

std::size_t require(const FiniteLattice& lat, const Edge& e) {
    auto i = lat.index_of(e);
    if (!i) throw Error(ErrorKind::OutOfRegion, "edge " + to_string(e.base) + " not in lattice");
    return *i;
}

}  // namespace

FiniteLattice::FiniteLattice(int n, Vertex origin) : n_(n), origin_(origin) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "lattice side must be >= 1");
    box_min_ = origin - Vertex{1, 1, 1};
    box_side_ = n + 2;
    lookup_.assign(static_cast<std::size_t>(box_side_) * box_side_ * box_side_ * 3, -1);

    const Region blk = block();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) vertices_.push_back(origin + Vertex{x, y, z});

    std::set<Edge> frontier;
    for (int x = -1; x < n; ++x)
        for (int y = -1; y < n; ++y)
            for (int z = -1; z < n; ++z)
                for (Axis a : kAxes) {
                    Vertex b = origin + Vertex{x, y, z};
                    Edge e{b, a};
                    if (touches(blk, e)) block_edges_.push_back(e);
                    Face f{b, a};
                    auto cs = face_corners(f);
                    if (std::any_of(cs.begin(), cs.end(), [&](Vertex v) { return blk.contains(v); }))
                        faces_.push_back(f);
                }
    std::sort(block_edges_.begin(), block_edges_.end());
    std::sort(faces_.begin(), faces_.end());
    for (const auto& f : faces_)
        for (const auto& e : boundary_face(f)) {
            Edge c = e.canonical();
            if (!touches(blk, c)) frontier.insert(c);
        }
    frontier_edges_.assign(frontier.begin(), frontier.end());

    qubits_ = block_edges_;
    qubits_.insert(qubits_.end(), frontier_edges_.begin(), frontier_edges_.end());
    frontier_flag_.assign(qubits_.size(), false);
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        frontier_flag_[i] = i >= block_edges_.size();
        Vertex r = qubits_[i].base - box_min_;
        auto slot = ((static_cast<std::size_t>(r.x) * box_side_ + r.y) * box_side_ + r.z) * 3 +
                    tc3::index_of(qubits_[i].axis);
        lookup_[slot] = static_cast<long>(i);
    }
}

FiniteLattice FiniteLattice::centered(int n) {
    int lo = -((n - 1) / 2);
    return FiniteLattice(n, {lo, lo, lo});
}

std::optional<std::size_t> FiniteLattice::index_of(const Edge& e) const {
    Vertex r = e.base - box_min_;
    if (r.x < 0 || r.y < 0 || r.z < 0 || r.x >= box_side_ || r.y >= box_side_ || r.z >= box_side_)
        return std::nullopt;
    auto slot = ((static_cast<std::size_t>(r.x) * box_side_ + r.y) * box_side_ + r.z) * 3 + tc3::index_of(e.axis);
    long i = lookup_[slot];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
}

PauliOperator star(const FiniteLattice& lat, Vertex v) {
    if (!lat.block().contains(v)) throw Error(ErrorKind::OutOfRegion, "star outside block: " + to_string(v));
    auto p = PauliOperator::identity(lat.qubit_count());
    for (const auto& e : star_edges(v)) p.x.set(require(lat, e.canonical()));
    return p;
}

PauliOperator plaquette(const FiniteLattice& lat, const Face& f) {
    auto p = PauliOperator::identity(lat.qubit_count());
    for (const auto& e : boundary_face(f)) {
        auto i = lat.index_of(e.canonical());
        if (!i) throw Error(ErrorKind::OutOfRegion, "plaquette outside block: " + to_string(f.base));
        p.z.set(*i);
    }
    return p;
}

PauliOperator single_x(const FiniteLattice& lat, const Edge& e) {
    auto p = PauliOperator::identity(lat.qubit_count());
    p.x.set(require(lat, e.canonical()));
    return p;
}

PauliOperator single_z(const FiniteLattice& lat, const Edge& e) {
    auto p = PauliOperator::identity(lat.qubit_count());
    p.z.set(require(lat, e.canonical()));
    return p;
}

PauliOperator string_op(const FiniteLattice& lat, const std::vector<Edge>& primal_edges) {
    auto p = PauliOperator::identity(lat.qubit_count());
    for (const auto& e : primal_edges) p.z.flip(require(lat, e.canonical()));
    return p;
}

PauliOperator string_op(const FiniteLattice& lat, const FinitePath& primal_path) {
    return string_op(lat, primal_path.edges());
}

PauliOperator membrane_op(const FiniteLattice& lat, const std::vector<Face>& dual_faces) {
    auto p = PauliOperator::identity(lat.qubit_count());
    for (const auto& f : dual_faces) p.x.flip(require(lat, edge_of_dual_face(f)));
    return p;
}

PauliOperator membrane_op(const FiniteLattice& lat, const Surface& dual_surface) {
    return membrane_op(lat, dual_surface.faces);
}

bool symplectic_form(const PauliOperator& p, const PauliOperator& q) {
    if (p.size() != q.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "operators on " + std::to_string(p.size()) + " and " + std::to_string(q.size()) + " qubits");
    return p.x.dot(q.z) != p.z.dot(q.x);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) { return !symplectic_form(p, q); }

SignedPauli conjugate(const PauliOperator& by, const PauliOperator& observable) {
    return {symplectic_form(by, observable), observable};
}

long syndrome_energy(const FiniteLattice& lat, const PauliOperator& flip, const Region& r) {
    if (flip.size() != lat.qubit_count()) throw Error(ErrorKind::DimensionMismatch, "flip size");
    long violated = 0;
    for (Vertex v : lat.vertices()) {
        if (!r.contains(v)) continue;
        bool parity = false;
        for (const auto& e : star_edges(v)) parity ^= flip.z.get(*lat.index_of(e.canonical()));
        violated += parity;
    }
    for (const auto& f : lat.faces()) {
        auto [a, b] = boundary_edge(dual_edge_of_face(f));
        if (!r.contains(a) || !r.contains(b)) continue;
        bool parity = false;
        for (const auto& e : boundary_face(f)) parity ^= flip.x.get(*lat.index_of(e.canonical()));
        violated += parity;
    }
    return 2 * violated;
}

std::size_t gauge_rank(int n) {
    FiniteLattice lat(n);
    std::vector<BitVec> rows;
    for (Vertex v : lat.vertices()) rows.push_back(star(lat, v).x);
    return f2_rank(std::move(rows));
}

SurfaceNetReport surface_net_checks(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    if (n > 2) throw Error(ErrorKind::TooLarge, "exhaustive gauge enumeration limited to n <= 2");
    FiniteLattice lat(n);
    SurfaceNetReport rep;
    rep.n = n;
    rep.qubits = lat.qubit_count();

    std::vector<PauliOperator> stars;
    for (Vertex v : lat.vertices()) stars.push_back(star(lat, v));

    // walk the group in Gray-code order, one generator toggled per step
    std::set<std::vector<std::uint64_t>> seen;
    auto cur = PauliOperator::identity(lat.qubit_count());
    const std::size_t group = std::size_t{1} << stars.size();
    for (std::size_t k = 0; k < group; ++k) {
        if (k > 0) cur *= stars[static_cast<std::size_t>(std::countr_zero(k))];
        seen.insert(cur.x.words());
    }
    rep.gauge_size = group;
    rep.distinct_nets = seen.size();
    rep.orthogonal = rep.distinct_nets == rep.gauge_size;

    // flux constraints restricted to block edges
    const std::size_t m = lat.block_edges().size();
    std::vector<BitVec> face_rows;
    for (const auto& f : lat.faces()) {
        BitVec row(m);
        for (const auto& e : boundary_face(f)) {
            auto i = *lat.index_of(e.canonical());
            if (i < m) row.flip(i);
        }
        face_rows.push_back(row);
    }
    rep.no_flux_dimension = m - f2_rank(face_rows);

    rep.stars_flux_free = true;
    for (const auto& s : stars)
        for (const auto& f : lat.faces()) rep.stars_flux_free &= commutes(s, plaquette(lat, f));

    std::vector<BitVec> gens;
    for (const auto& s : stars) gens.push_back(s.x);
    const std::size_t rank = f2_rank(gens);
    rep.orbit_count = rep.no_flux_dimension >= rank ? std::size_t{1} << (rep.no_flux_dimension - rank) : 0;

    if (n == 1) {
        std::size_t count = 0;
        for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
            BitVec a(m);
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1U) a.set(i);
            bool ok = true;
            for (const auto& row : face_rows) ok &= !row.dot(a);
            count += ok;
        }
        rep.brute_force_no_flux = count;
    }
    return rep;
}

BoundaryConditionReport boundary_condition_check() {
    FiniteLattice lat(1);
    const std::size_t nb = lat.block_edges().size();     // 6
    const std::size_t nf = lat.frontier_edges().size();  // 24
    const std::size_t q = lat.qubit_count();
    if (q > 32) throw Error(ErrorKind::TooLarge, "boundary check needs <= 32 qubits");

    std::vector<std::uint32_t> rows;
    for (const auto& f : lat.faces()) {
        std::uint32_t r = 0;
        for (const auto& e : boundary_face(f)) r ^= 1U << *lat.index_of(e.canonical());
        rows.push_back(r);
    }
    auto flux_free = [&](std::uint32_t a) {
        return std::all_of(rows.begin(), rows.end(), [&](std::uint32_t r) { return std::popcount(r & a) % 2 == 0; });
    };

    // reduced row echelon form, then a nullspace basis
    std::vector<std::uint32_t> ech = rows;
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < q && rank < ech.size(); ++col) {
        std::size_t piv = rank;
        while (piv < ech.size() && !((ech[piv] >> col) & 1U)) ++piv;
        if (piv == ech.size()) continue;
        std::swap(ech[rank], ech[piv]);
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (i != rank && ((ech[i] >> col) & 1U)) ech[i] ^= ech[rank];
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(q, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::uint32_t> basis;
    for (std::size_t free = 0; free < q; ++free) {
        if (is_pivot[free]) continue;
        std::uint32_t v = 1U << free;
        for (std::size_t i = 0; i < rank; ++i)
            if ((ech[i] >> free) & 1U) v |= 1U << pivot_col[i];
        basis.push_back(v);
    }

    const std::uint32_t block_mask = (1U << nb) - 1U;
    const std::size_t tables = std::size_t{1} << nf;
    std::vector<std::uint8_t> count(tables, 0);
    std::vector<std::uint8_t> ref(tables, 0);  // bit 7 = set, low bits = block part

    // b = 0 class, as a set of block patterns
    std::uint64_t zero_class = 0;
    std::size_t zero_size = 0;
    for (std::uint32_t a = 0; a <= block_mask; ++a)
        if (flux_free(a)) {
            zero_class |= std::uint64_t{1} << a;
            ++zero_size;
        }

    BoundaryConditionReport rep;
    rep.frontier_edges = nf;
    rep.nets_per_condition = zero_size;
    rep.bijections_ok = true;
    std::uint32_t cur = 0;
    const std::size_t total = std::size_t{1} << basis.size();
    for (std::size_t k = 0; k < total; ++k) {
        if (k > 0) cur ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
        rep.bijections_ok &= flux_free(cur);
        std::size_t b = cur >> nb;
        std::uint32_t blk = cur & block_mask;
        if (count[b] < 255) ++count[b];
        if (!(ref[b] & 0x80U)) {
            ref[b] = static_cast<std::uint8_t>(0x80U | blk);
        } else {
            std::uint32_t shifted = blk ^ (ref[b] & 0x7FU);
            rep.bijections_ok &= shifted != 0 && ((zero_class >> shifted) & 1U);
        }
    }
    rep.sizes_match = true;
    for (std::size_t b = 0; b < tables; ++b) {
        ++rep.conditions_examined;
        if (count[b] == 0) continue;
        ++rep.admissible_conditions;
        rep.sizes_match &= count[b] == zero_size;
    }
    return rep;
}

PauliOperator restrict_to_block(const FiniteLattice& lat, const PauliOperator& p, const Region& block) {
    auto out = p;
    for (std::size_t i = 0; i < lat.qubit_count(); ++i)
        if (!touches(block, lat.qubit(i))) {
            out.x.set(i, false);
            out.z.set(i, false);
        }
    return out;
}

bool truncation_stable(const PauliOperator& observable, const PauliOperator& truncated_n,
                       const PauliOperator& truncated_n_prime) {
    return conjugate(truncated_n, observable) == conjugate(truncated_n_prime, observable);
}

namespace {

bool same_action(const FiniteLattice& lat, const PauliOperator& a, const PauliOperator& b) {
    for (std::size_t i = 0; i < lat.qubit_count(); ++i) {
        auto x = single_x(lat, lat.qubit(i));
        auto z = single_z(lat, lat.qubit(i));
        if (conjugate(a, x) != conjugate(b, x) || conjugate(a, z) != conjugate(b, z)) return false;
    }
    return true;
}

}  // namespace

bool orientation_independent(const FiniteLattice& lat, const FinitePath& primal_path) {
    return same_action(lat, string_op(lat, primal_path), string_op(lat, primal_path.reversed()));
}

bool orientation_independent(const FiniteLattice& lat, const std::vector<Face>& dual_faces) {
    // the opposite orientation lists the same faces with reversed boundary
    std::vector<Face> rev(dual_faces.rbegin(), dual_faces.rend());
    return same_action(lat, membrane_op(lat, dual_faces), membrane_op(lat, rev));
}

}  // namespace tc3
