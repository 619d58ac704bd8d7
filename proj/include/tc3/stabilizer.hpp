#pragma once

// Finite F2 verifier: Pauli supports on the qubits of an n-block, the
// symplectic form, and the counting checks on gauge orbits of surface nets.

#include <cstddef>
#include <optional>
#include <vector>

#include "tc3/f2.hpp"
#include "tc3/lattice.hpp"
#include "tc3/paths.hpp"

namespace tc3 {

// Block of n^3 primal vertices at origin + [0,n)^3. Qubits sit on the block
// edges (>=1 endpoint in the block) plus the frontier edges: edges of block
// faces that are not block edges.
class FiniteLattice {
public:
    explicit FiniteLattice(int n, Vertex origin = {});
    // n-block roughly centred at the primal origin; blocks for increasing n are nested.
    static FiniteLattice centered(int n);

    int n() const { return n_; }
    Vertex origin() const { return origin_; }
    Region block() const { return {origin_, origin_ + Vertex{n_ - 1, n_ - 1, n_ - 1}}; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& block_edges() const { return block_edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Edge>& frontier_edges() const { return frontier_edges_; }

    std::size_t qubit_count() const { return qubits_.size(); }
    const Edge& qubit(std::size_t i) const { return qubits_[i]; }
    std::optional<std::size_t> index_of(const Edge& e) const;
    bool is_frontier(std::size_t i) const { return frontier_flag_[i]; }

private:
    int n_;
    Vertex origin_;
    Vertex box_min_;  // lookup box covering every qubit
    int box_side_;
    std::vector<long> lookup_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> block_edges_;
    std::vector<Face> faces_;
    std::vector<Edge> frontier_edges_;
    std::vector<Edge> qubits_;  // block edges first, then frontier
    std::vector<bool> frontier_flag_;
};

struct PauliOperator {
    BitVec x;
    BitVec z;

    static PauliOperator identity(std::size_t qubits) { return {BitVec(qubits), BitVec(qubits)}; }
    std::size_t size() const { return x.size(); }
    std::size_t weight_x() const { return x.count(); }
    std::size_t weight_z() const { return z.count(); }
    bool is_identity() const { return !x.any() && !z.any(); }

    // product up to phase
    PauliOperator& operator*=(const PauliOperator& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }
    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

// All constructors throw Error(OutOfRegion) when a needed edge is not a qubit.
PauliOperator star(const FiniteLattice& lat, Vertex v);        // v must be a block vertex
PauliOperator plaquette(const FiniteLattice& lat, const Face& f);  // f must be a block face
PauliOperator single_x(const FiniteLattice& lat, const Edge& e);
PauliOperator single_z(const FiniteLattice& lat, const Edge& e);
// Z on the primal edges of a path (charges at the ends of an open path).
PauliOperator string_op(const FiniteLattice& lat, const FinitePath& primal_path);
PauliOperator string_op(const FiniteLattice& lat, const std::vector<Edge>& primal_edges);
// X on the primal edges pierced by the dual faces; repeated faces cancel.
PauliOperator membrane_op(const FiniteLattice& lat, const std::vector<Face>& dual_faces);
PauliOperator membrane_op(const FiniteLattice& lat, const Surface& dual_surface);

// Throws Error(DimensionMismatch) on differing qubit counts.
bool symplectic_form(const PauliOperator& p, const PauliOperator& q);
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Conjugating O by a Pauli F gives +-O; only the sign carries information.
struct SignedPauli {
    bool negative = false;
    PauliOperator op;
    friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};
SignedPauli conjugate(const PauliOperator& by, const PauliOperator& observable);

// 2 x number of violated stabilizers in r. Stars count when the primal vertex
// lies in r; plaquettes count when both endpoints of their dual edge lie in r.
long syndrome_energy(const FiniteLattice& lat, const PauliOperator& flip, const Region& r);

std::size_t gauge_rank(int n);

struct SurfaceNetReport {
    int n = 0;
    std::size_t qubits = 0;
    std::size_t gauge_size = 0;       // enumerated group elements
    std::size_t distinct_nets = 0;    // distinct X-supports they produce from the vacuum
    bool orthogonal = false;          // distinct_nets == gauge_size
    std::size_t no_flux_dimension = 0;  // dim of flux-free X-configurations on block edges
    std::size_t orbit_count = 0;      // 2^(no_flux_dimension - gauge rank)
    bool stars_flux_free = false;
    std::optional<std::size_t> brute_force_no_flux;  // only for n = 1: count over all 2^6 subsets
    bool ok() const { return orthogonal && orbit_count == 1 && stars_flux_free; }
};
// Throws Error(TooLarge) for n > 2.
SurfaceNetReport surface_net_checks(int n);

// Boundary-condition sectors at n = 1. Every subset b of the 24 frontier edges
// is examined: the nets with that frontier pattern either do not exist or
// match the b = 0 nets one-to-one via XOR with a reference net.
struct BoundaryConditionReport {
    std::size_t frontier_edges = 0;
    std::size_t conditions_examined = 0;
    std::size_t admissible_conditions = 0;
    std::size_t nets_per_condition = 0;  // size of the b = 0 class
    bool sizes_match = false;
    bool bijections_ok = false;
    bool ok() const { return sizes_match && bijections_ok; }
};
BoundaryConditionReport boundary_condition_check();

// n-truncation of an operator family: keep the block edges of the n-block only.
PauliOperator restrict_to_block(const FiniteLattice& lat, const PauliOperator& p, const Region& block);

// Signs of O under conjugation by the two truncations agree.
bool truncation_stable(const PauliOperator& observable, const PauliOperator& truncated_n,
                       const PauliOperator& truncated_n_prime);

// Conjugation by the path operator and by its reversal agree on every
// single-site X and Z in the lattice.
bool orientation_independent(const FiniteLattice& lat, const FinitePath& primal_path);
bool orientation_independent(const FiniteLattice& lat, const std::vector<Face>& dual_faces);

}  // namespace tc3
