#include "fatlas/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fatlas {

std::uint32_t Orientation::mask() const {
    std::uint32_t m = 0;
    for (std::size_t e = 0; e < head_sel.size(); ++e)
        if (head_sel[e]) m |= (1u << e);
    return m;
}

Orientation Orientation::from_mask(std::uint32_t m, int num_edges) {
    Orientation o;
    o.head_sel.resize(num_edges);
    for (int e = 0; e < num_edges; ++e) o.head_sel[e] = (m >> e) & 1u;
    return o;
}

Orientation reflect(const Fatgraph& g, const Orientation& o, int v) {
    if (v < 0 || v >= g.num_vertices()) throw error("reflect: unknown vertex");
    Orientation out = o;
    for (int h : g.vertex_halfedges[v]) out.head_sel[g.edge_of[h]] ^= 1;
    return out;
}

namespace {

std::vector<std::uint32_t> reflection_basis(const Fatgraph& g) {
    // XOR masks of the vertex reflections, reduced to row-echelon form
    // over GF(2), highest leading bit first.
    std::vector<std::uint32_t> basis;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::uint32_t m = 0;
        for (int h : g.vertex_halfedges[v]) m ^= (1u << g.edge_of[h]);
        for (std::uint32_t b : basis) m = std::min(m, m ^ b);
        if (m) basis.push_back(m);
        std::sort(basis.rbegin(), basis.rend());
    }
    return basis;
}

std::uint32_t reduce(std::uint32_t m, const std::vector<std::uint32_t>& basis) {
    for (std::uint32_t b : basis) m = std::min(m, m ^ b);
    return m;
}

}  // namespace

std::uint32_t canonical_orientation_mask(const Fatgraph& g, std::uint32_t m) {
    return reduce(m, reflection_basis(g));
}

OrientationClasses orientation_classes(const Fatgraph& g, int max_edges) {
    const int E = g.num_edges();
    if (E > max_edges) throw error("orientation_classes: size limit exceeded");
    auto diag = validate(g);
    if (!diag.ok) throw error("orientation_classes: " + diag.problems.front());

    auto basis = reflection_basis(g);
    OrientationClasses out;
    for (std::uint32_t m = 0; m < (1u << E); ++m)
        if (reduce(m, basis) == m) out.representatives.push_back(m);
    out.count = static_cast<long long>(out.representatives.size());
    return out;
}

// ---------------------------------------------------------------------------

Z2Cycle Z2Cycle::operator+(const Z2Cycle& rhs) const {
    if (edge.size() != rhs.edge.size()) throw error("cycle size mismatch");
    Z2Cycle out(static_cast<int>(edge.size()));
    for (std::size_t e = 0; e < edge.size(); ++e) out.edge[e] = edge[e] ^ rhs.edge[e];
    return out;
}

bool Z2Cycle::empty() const {
    return std::all_of(edge.begin(), edge.end(), [](char c) { return !c; });
}

bool is_cycle(const Fatgraph& g, const Z2Cycle& c) {
    if (c.edge.size() != static_cast<std::size_t>(g.num_edges())) return false;
    std::vector<int> inc(g.num_vertices(), 0);
    for (int h = 0; h < g.num_halfedges(); ++h)
        if (c.edge[g.edge_of[h]]) inc[g.vertex_of[h]]++;
    return std::all_of(inc.begin(), inc.end(), [](int k) { return k % 2 == 0; });
}

int quadratic_form(const Fatgraph& g, const Orientation& o, const std::vector<int>& path) {
    if (path.empty()) return 0;
    const int n = static_cast<int>(path.size());
    int left = 0, right = 0, with = 0, against = 0;
    for (int i = 0; i < n; ++i) {
        int h = path[i];
        int next = path[(i + 1) % n];
        int entry = g.mate[h];  // arrival half-edge at the next vertex
        if (g.vertex_of[next] != g.vertex_of[entry])
            throw error("quadratic_form: path is not connected/closed");
        if (next == entry) throw error("quadratic_form: U-turn in path");
        if (next == g.cyclic_next[entry])
            ++left;
        else if (next == g.cyclic_prev(entry))
            ++right;
        else
            throw error("quadratic_form: turn is neither immediate left nor right");
        (o.aligned(g, h) ? with : against)++;
    }
    int q1 = (left + with) % 2;
    int q2 = (right + against) % 2;
    if (q1 != q2) throw error("quadratic_form: the two count formulas disagree");
    return q1;
}

std::vector<std::vector<int>> cycle_to_paths(const Fatgraph& g, const Z2Cycle& c) {
    if (!is_cycle(g, c)) throw error("cycle_to_paths: not a closed Z2 cycle");

    // Pair the member incidences at each vertex: consecutive members in the
    // stored cyclic order form a chord. exit_of[arrival] gives the paired exit.
    std::vector<int> exit_of(g.num_halfedges(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> members;
        for (int h : g.vertex_halfedges[v])
            if (c.edge[g.edge_of[h]]) members.push_back(h);
        for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
            exit_of[members[i]] = members[i + 1];
            exit_of[members[i + 1]] = members[i];
        }
    }

    std::vector<char> used(g.num_halfedges(), 0);
    std::vector<std::vector<int>> paths;
    for (int start = 0; start < g.num_halfedges(); ++start) {
        if (used[start] || !c.edge[g.edge_of[start]]) continue;
        std::vector<int> path;
        int h = start;
        do {
            used[h] = 1;
            used[g.mate[h]] = 1;
            path.push_back(h);
            h = exit_of[g.mate[h]];
            if (h < 0) throw error("cycle_to_paths: dangling strand");
        } while (h != start);
        paths.push_back(std::move(path));
    }
    return paths;
}

namespace {

Z2Cycle path_support(const Fatgraph& g, const std::vector<int>& path) {
    Z2Cycle c(g.num_edges());
    for (int h : path) c.edge[g.edge_of[h]] ^= 1;
    return c;
}

}  // namespace

int quadratic_form(const Fatgraph& g, const Orientation& o, const Z2Cycle& c) {
    auto paths = cycle_to_paths(g, c);
    int q = 0;
    for (const auto& p : paths) q ^= quadratic_form(g, o, p);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            q ^= intersection_pairing(g, path_support(g, paths[i]), path_support(g, paths[j]));
    return q;
}

// ---------------------------------------------------------------------------
// intersection pairing

namespace {

struct Chord {
    double p1, p2;  // endpoint positions on the vertex circle
};

// exactly one endpoint of q inside the arc p1 -> p2 (mod m)
bool chords_cross(const Chord& a, const Chord& b, double m) {
    auto inside = [m](double lo, double hi, double x) {
        double span = hi - lo;
        if (span < 0) span += m;
        double off = x - lo;
        if (off < 0) off += m;
        return off > 0 && off < span;
    };
    bool q1in = inside(a.p1, a.p2, b.p1);
    bool q2in = inside(a.p1, a.p2, b.p2);
    return q1in != q2in;
}

// Strand passages of a cycle: per vertex a list of chords. `offset` shifts
// endpoints on edges in `shared` sideways: +delta at the strand's source end,
// -delta at its target end, which models the parallel push-off.
std::vector<std::vector<Chord>> strand_chords(const Fatgraph& g, const Z2Cycle& c,
                                              const std::vector<char>& shared,
                                              double delta) {
    std::vector<int> pos(g.num_halfedges(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (std::size_t i = 0; i < g.vertex_halfedges[v].size(); ++i)
            pos[g.vertex_halfedges[v][i]] = static_cast<int>(i);

    auto endpoint = [&](int h, bool source_end) {
        double off = 0.0;
        if (shared[g.edge_of[h]]) off = source_end ? delta : -delta;
        return pos[h] + off;
    };

    std::vector<std::vector<Chord>> chords(g.num_vertices());
    for (const auto& path : cycle_to_paths(g, c)) {
        const int n = static_cast<int>(path.size());
        for (int i = 0; i < n; ++i) {
            int h = path[i];
            int entry = g.mate[h];
            int exit = path[(i + 1) % n];
            chords[g.vertex_of[entry]].push_back(
                {endpoint(entry, false), endpoint(exit, true)});
        }
    }
    return chords;
}

}  // namespace

int intersection_pairing(const Fatgraph& g, const Z2Cycle& a, const Z2Cycle& b) {
    if (!is_cycle(g, a) || !is_cycle(g, b)) throw error("intersection_pairing: non-cycle input");
    std::vector<char> shared(g.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e) shared[e] = a.edge[e] && b.edge[e];
    std::vector<char> none(g.num_edges(), 0);

    auto ca = strand_chords(g, a, none, 0.0);
    auto cb = strand_chords(g, b, shared, 0.25);

    int crossings = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double m = static_cast<double>(g.valence(v));
        for (const auto& x : ca[v])
            for (const auto& y : cb[v])
                if (chords_cross(x, y, m)) ++crossings;
    }
    return crossings % 2;
}

std::vector<Z2Cycle> cycle_space_basis(const Fatgraph& g) {
    // spanning tree over vertices; each co-tree edge closes one basis cycle
    std::vector<int> parent_edge(g.num_vertices(), -1);
    std::vector<int> parent(g.num_vertices(), -1);
    std::vector<char> in_tree(g.num_edges(), 0);
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : g.vertex_halfedges[v]) {
            int w = g.vertex_of[g.mate[h]];
            if (!seen[w]) {
                seen[w] = 1;
                in_tree[g.edge_of[h]] = 1;
                parent[w] = v;
                parent_edge[w] = g.edge_of[h];
                stack.push_back(w);
            }
        }
    }
    std::vector<Z2Cycle> basis;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (in_tree[e]) continue;
        Z2Cycle c(g.num_edges());
        c.edge[e] = 1;
        if (!g.is_loop(e)) {
            // add the tree paths from both endpoints up to their meeting point
            std::vector<int> depth(2);
            int u = g.vertex_of[g.edges[e][0]];
            int w = g.vertex_of[g.edges[e][1]];
            auto depth_of = [&](int v) {
                int d = 0;
                while (parent[v] != -1) {
                    v = parent[v];
                    ++d;
                }
                return d;
            };
            int du = depth_of(u), dw = depth_of(w);
            while (du > dw) {
                c.edge[parent_edge[u]] ^= 1;
                u = parent[u];
                --du;
            }
            while (dw > du) {
                c.edge[parent_edge[w]] ^= 1;
                w = parent[w];
                --dw;
            }
            while (u != w) {
                c.edge[parent_edge[u]] ^= 1;
                c.edge[parent_edge[w]] ^= 1;
                u = parent[u];
                w = parent[w];
            }
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

// ---------------------------------------------------------------------------

PunctureTags classify_punctures(const Fatgraph& g, const Orientation& o) {
    PunctureTags tags;
    for (const auto& cycle : boundary_cycles(g)) {
        int m_p = 0;
        for (int h : cycle.halfedges)
            if (!o.aligned(g, h)) ++m_p;
        tags.opposed.push_back(m_p);
        bool ramond = (m_p % 2 == 0);
        tags.type.push_back(ramond ? PunctureType::Ramond : PunctureType::NeveuSchwarz);
        if (ramond) ++tags.num_ramond;
    }
    return tags;
}

double monodromy(const Fatgraph& g, const Orientation& o, const GraphConnection& c,
                 const std::vector<int>& path) {
    double acc = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int h = path[i];
        if (i + 1 < path.size() &&
            g.vertex_of[path[i + 1]] != g.vertex_of[g.mate[h]])
            throw error("monodromy: path not connected");
        acc += c.along(g, o, h);
    }
    return acc;
}

bool phase_is_trivial(double phase, double tol) {
    double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phase, two_pi);
    return std::abs(r) < tol;
}

GraphConnection z2_delta(const Fatgraph& g, const Orientation& a, const Orientation& b) {
    GraphConnection c;
    c.group = Group::Z2;
    c.phase.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        c.phase[e] = (a.head_sel[e] == b.head_sel[e]) ? 0.0 : std::numbers::pi;
    return c;
}

}  // namespace fatlas
