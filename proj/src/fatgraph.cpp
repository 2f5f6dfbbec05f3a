#include "fatlas/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fatlas {

int Fatgraph::cyclic_prev(int h) const {
    int cur = h;
    while (cyclic_next[cur] != h) cur = cyclic_next[cur];
    return cur;
}

bool Fatgraph::has_loop() const {
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e)) return true;
    return false;
}

Fatgraph Fatgraph::build(const std::vector<std::vector<int>>& orders,
                         const std::vector<std::array<int, 2>>& edge_pairs) {
    Fatgraph g;
    int H = 0;
    for (const auto& o : orders) H += static_cast<int>(o.size());
    g.vertex_of.assign(H, -1);
    g.cyclic_next.assign(H, -1);
    g.mate.assign(H, -1);
    g.edge_of.assign(H, -1);
    g.vertex_halfedges = orders;
    g.edges = edge_pairs;

    for (int v = 0; v < static_cast<int>(orders.size()); ++v) {
        const auto& o = orders[v];
        for (std::size_t i = 0; i < o.size(); ++i) {
            int h = o[i];
            if (h < 0 || h >= H) throw error("half-edge index out of range");
            if (g.vertex_of[h] != -1) throw error("half-edge listed twice");
            g.vertex_of[h] = v;
            g.cyclic_next[h] = o[(i + 1) % o.size()];
        }
    }
    for (int e = 0; e < static_cast<int>(edge_pairs.size()); ++e) {
        auto [a, b] = edge_pairs[e];
        if (a < 0 || a >= H || b < 0 || b >= H) throw error("edge half-edge out of range");
        g.mate[a] = b;
        g.mate[b] = a;
        g.edge_of[a] = e;
        g.edge_of[b] = e;
    }
    for (int h = 0; h < H; ++h) {
        if (g.vertex_of[h] < 0) throw error("half-edge not attached to a vertex");
        if (g.mate[h] < 0) throw error("half-edge not paired into an edge");
    }
    return g;
}

Diagnostics validate(const Fatgraph& g) {
    Diagnostics d;
    const int H = g.num_halfedges();

    for (int h = 0; h < H; ++h) {
        if (g.mate[h] == h) {
            d.fail("pairing has a fixed point at half-edge " + std::to_string(h));
            return d;
        }
        if (g.mate[g.mate[h]] != h) {
            d.fail("pairing is not an involution at half-edge " + std::to_string(h));
            return d;
        }
    }

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.valence(v) < 3) {
            d.fail("vertex " + std::to_string(v) + " has valence " +
                   std::to_string(g.valence(v)) + " < 3");
        }
        // cyclic_next restricted to the vertex must be one cycle
        const auto& hs = g.vertex_halfedges[v];
        int cur = hs[0], steps = 0;
        do {
            if (g.vertex_of[cur] != v) {
                d.fail("cyclic order at vertex " + std::to_string(v) +
                       " leaves the vertex");
                return d;
            }
            cur = g.cyclic_next[cur];
            ++steps;
        } while (cur != hs[0] && steps <= static_cast<int>(hs.size()));
        if (steps != static_cast<int>(hs.size()))
            d.fail("cyclic order at vertex " + std::to_string(v) + " is not a single cycle");
    }
    if (!d.ok) return d;

    // connectivity over vertices
    if (g.num_vertices() > 0) {
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h : g.vertex_halfedges[v]) {
                int w = g.vertex_of[g.mate[h]];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != g.num_vertices()) d.fail("graph is not connected");
    }
    return d;
}

std::vector<BoundaryCycle> boundary_cycles(const Fatgraph& g) {
    const int H = g.num_halfedges();
    std::vector<char> used(H, 0);
    std::vector<BoundaryCycle> cycles;
    for (int start = 0; start < H; ++start) {
        if (used[start]) continue;
        BoundaryCycle c;
        int h = start;
        do {
            used[h] = 1;
            c.halfedges.push_back(h);
            h = g.cyclic_next[g.mate[h]];
        } while (h != start);
        // rotate so the smallest member comes first
        auto it = std::min_element(c.halfedges.begin(), c.halfedges.end());
        std::rotate(c.halfedges.begin(), it, c.halfedges.end());
        cycles.push_back(std::move(c));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const BoundaryCycle& a, const BoundaryCycle& b) {
                  return a.halfedges.front() < b.halfedges.front();
              });
    return cycles;
}

std::vector<BoundaryCycle> boundary_cycles(const MetricFatgraph& mg) {
    auto cycles = boundary_cycles(mg.graph);
    for (auto& c : cycles) {
        c.perimeter = 0.0;
        for (int h : c.halfedges) c.perimeter += mg.length[mg.graph.edge_of[h]];
    }
    return cycles;
}

Invariants invariants(const Fatgraph& g) {
    Invariants inv;
    inv.vertices = g.num_vertices();
    inv.edges = g.num_edges();
    inv.punctures = static_cast<int>(boundary_cycles(g).size());
    inv.euler = inv.vertices - inv.edges;
    int two_minus_2g = inv.euler + inv.punctures;
    if ((2 - two_minus_2g) % 2 != 0) throw error("non-integer genus: malformed graph");
    inv.genus = (2 - two_minus_2g) / 2;

    // sum_j (j/2 - 1) V_j = 2g - 2 + s, doubled to stay integral
    int lhs2 = 0;
    for (int v = 0; v < g.num_vertices(); ++v) lhs2 += g.valence(v) - 2;
    if (lhs2 != 2 * (2 * inv.genus - 2 + inv.punctures))
        throw error("valence identity violated: malformed graph");
    return inv;
}

Diagnostics validate(const MetricFatgraph& mg) {
    Diagnostics d = validate(mg.graph);
    if (mg.length.size() != static_cast<std::size_t>(mg.graph.num_edges()))
        d.fail("length table size does not match edge count");
    else
        for (int e = 0; e < mg.graph.num_edges(); ++e)
            if (!(mg.length[e] > 0.0))
                d.fail("edge " + std::to_string(e) + " has non-positive length");
    return d;
}

}  // namespace fatlas
