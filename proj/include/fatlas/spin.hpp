#pragma once

#include <cstdint>
#include <vector>

#include "fatlas/fatgraph.hpp"

namespace fatlas {

/// Total orientation: per edge, which of its two half-edges is the head.
/// A traversal along source half-edge h runs toward vertex_of[mate[h]], so it
/// is aligned with the orientation exactly when mate[h] is the head.
struct Orientation {
    std::vector<int> head_sel;  // per edge: 0 or 1, index into Fatgraph::edges[e]

    int head_halfedge(const Fatgraph& g, int e) const { return g.edges[e][head_sel[e]]; }
    bool aligned(const Fatgraph& g, int h) const {
        return head_halfedge(g, g.edge_of[h]) == g.mate[h];
    }
    std::uint32_t mask() const;
    static Orientation from_mask(std::uint32_t m, int num_edges);
};

/// Reverses, per incidence, every edge-end attached to v. A loop at v is
/// flipped twice and therefore unchanged.
Orientation reflect(const Fatgraph& g, const Orientation& o, int v);

struct OrientationClasses {
    long long count = 0;
    std::vector<std::uint32_t> representatives;  // canonical (minimal) masks
};

/// Partitions all 2^E orientations by the group generated by vertex
/// reflections. Exhaustive; rejects graphs with more than `max_edges` edges.
OrientationClasses orientation_classes(const Fatgraph& g, int max_edges = 20);
std::uint32_t canonical_orientation_mask(const Fatgraph& g, std::uint32_t m);

// ---------------------------------------------------------------------------
// quadratic form and intersection pairing

/// Z2 1-chain with zero boundary: an edge subset meeting every vertex in an
/// even number of incidences (a loop counts twice).
struct Z2Cycle {
    std::vector<char> edge;  // 0/1 per edge

    Z2Cycle() = default;
    explicit Z2Cycle(int num_edges) : edge(num_edges, 0) {}
    Z2Cycle operator+(const Z2Cycle& rhs) const;  // symmetric difference
    bool empty() const;
};

bool is_cycle(const Fatgraph& g, const Z2Cycle& c);

/// Value in Z2 (0 or 1, additive) of the Johnson form on a directed closed
/// path whose every turn is the immediate left or right neighbour in the
/// cyclic order. Both count formulas (left turns with aligned edges, right
/// turns with opposed edges) are computed and must agree.
int quadratic_form(const Fatgraph& g, const Orientation& o, const std::vector<int>& path);

/// Decomposes a Z2 cycle into edge-disjoint closed paths; at a vertex with
/// more than two member incidences consecutive members in cyclic order are
/// paired, which keeps the strands non-crossing.
std::vector<std::vector<int>> cycle_to_paths(const Fatgraph& g, const Z2Cycle& c);

/// q extended to Z2 cycles via the decomposition and the refinement rule
/// q(sum) = sum q(gamma_i) + sum_{i<j} gamma_i . gamma_j.
int quadratic_form(const Fatgraph& g, const Orientation& o, const Z2Cycle& c);

/// Z2 intersection number read off the ribbon structure: strands of `b` on a
/// shared edge are pushed to one side, then chord crossings are counted in
/// the cyclic order at every vertex.
int intersection_pairing(const Fatgraph& g, const Z2Cycle& a, const Z2Cycle& b);

/// Basis of the cycle space from the complement of a spanning tree.
std::vector<Z2Cycle> cycle_space_basis(const Fatgraph& g);

// ---------------------------------------------------------------------------
// puncture classification

enum class PunctureType { Ramond, NeveuSchwarz };

struct PunctureTags {
    std::vector<PunctureType> type;  // per boundary cycle
    std::vector<int> opposed;        // m_p: traversals running against the orientation
    int num_ramond = 0;
};

/// A boundary cycle is Ramond when the number of its traversals that run
/// against the orientation is even, Neveu-Schwarz when odd.
PunctureTags classify_punctures(const Fatgraph& g, const Orientation& o);

// ---------------------------------------------------------------------------
// graph connections

enum class Group { Z2, U1 };

/// Group element per edge, stored as a phase (radians) for the tail-to-head
/// traversal; the reverse traversal contributes the negated phase. Z2
/// connections restrict phases to {0, pi}.
struct GraphConnection {
    Group group = Group::U1;
    std::vector<double> phase;  // per edge

    double along(const Fatgraph& g, const Orientation& o, int h) const {
        int e = g.edge_of[h];
        return o.aligned(g, h) ? phase[e] : -phase[e];
    }
};

/// Accumulated phase of the ordered product along a directed closed path.
double monodromy(const Fatgraph& g, const Orientation& o, const GraphConnection& c,
                 const std::vector<int>& path);

bool phase_is_trivial(double phase, double tol);

/// delta cocycle of two orientations: phase pi where they disagree.
GraphConnection z2_delta(const Fatgraph& g, const Orientation& a, const Orientation& b);

}  // namespace fatlas
