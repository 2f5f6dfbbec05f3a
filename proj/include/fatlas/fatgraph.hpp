#pragma once

#include <array>
#include <string>
#include <vector>

#include "fatlas/grassmann.hpp"

namespace fatlas {

/// Half-edge fatgraph. Half-edges are dense indices 0..2E-1; `cyclic_next`
/// is the counterclockwise successor at the shared vertex and `mate` is the
/// fixed-point-free pairing of half-edges into edges.
///
/// A directed edge is identified with its source half-edge h: the traversal
/// runs from vertex_of[h] to vertex_of[mate[h]]. The face-traversal rule is
///     next(h) = cyclic_next[mate[h]],
/// and its orbits are the boundary cycles (one per puncture).
struct Fatgraph {
    std::vector<int> vertex_of;
    std::vector<int> cyclic_next;
    std::vector<int> mate;
    std::vector<std::vector<int>> vertex_halfedges;  // per vertex, one cyclic order
    std::vector<std::array<int, 2>> edges;           // edge -> its two half-edges
    std::vector<int> edge_of;                        // half-edge -> edge

    int num_halfedges() const { return static_cast<int>(vertex_of.size()); }
    int num_vertices() const { return static_cast<int>(vertex_halfedges.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int valence(int v) const { return static_cast<int>(vertex_halfedges[v].size()); }
    int cyclic_prev(int h) const;
    bool is_loop(int e) const { return vertex_of[edges[e][0]] == vertex_of[edges[e][1]]; }
    bool has_loop() const;

    /// Builds the derived tables from per-vertex cyclic orders and the edge
    /// pairing. `orders[v]` lists half-edge indices counterclockwise.
    static Fatgraph build(const std::vector<std::vector<int>>& orders,
                          const std::vector<std::array<int, 2>>& edge_pairs);
};

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};

struct BoundaryCycle {
    std::vector<int> halfedges;  // directed members in traversal order
    double perimeter = 0.0;      // filled when lengths are known
};

struct Invariants {
    int vertices = 0;
    int edges = 0;
    int punctures = 0;
    int genus = 0;
    int euler = 0;
};

struct MetricFatgraph {
    Fatgraph graph;
    std::vector<double> length;  // per edge, > 0
};

/// Checks all structural invariants and names each violation. Never throws.
Diagnostics validate(const Fatgraph& g);

/// Faces of the ribbon structure. Cycles are rotated to start at their
/// smallest member half-edge and sorted by that member, so output order is
/// reproducible. Requires a valid graph.
std::vector<BoundaryCycle> boundary_cycles(const Fatgraph& g);
std::vector<BoundaryCycle> boundary_cycles(const MetricFatgraph& mg);

/// (V, E, s, genus, euler) plus the valence identity
/// sum_j (j/2-1) V_j = 2g-2+s, which is asserted.
Invariants invariants(const Fatgraph& g);

Diagnostics validate(const MetricFatgraph& mg);

}  // namespace fatlas
