#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "catcol/graph.hpp"

namespace catcol {

// One backbone segment [i..j] (1-based) together with its color pattern:
// b_{i-1} gets c1, the whole segment b_i..b_j gets c2, b_{j+1} gets c3.
// c1 == 0 means "no vertex left of the segment" and is legal exactly when
// i == 1; likewise c3 == 0 exactly when j == n.
struct SubproblemKey {
    int i = 1;
    int j = 1;
    int c1 = 0;
    int c2 = 1;
    int c3 = 0;

    bool operator==(const SubproblemKey&) const = default;
};

// Structural well-formedness for backbone length n: index bounds, the
// 0-marker placement rule, and c1 != c2, c2 != c3 where both are colors.
bool validate_key(const SubproblemKey& key, int n);

// All structurally well-formed keys in canonical order: i ascending, j
// ascending, then (c1, c2, c3) lexicographic with the 0 marker first.
// Count is 3 + 12(n-1) + 6(n-1)(n-2).
std::vector<SubproblemKey> enumerate_keys(int n);

// Segment subgraph G_S: backbone b_{i-1}..b_{j+1} (existing ends only),
// the leaves anchored in [i..j], and every Y-vertex with a neighbor among
// b_i..b_j or those leaves; edges induced.  Boundary vertices' own leaves
// stay out.  Vertex order: backbone by position, then leaves by (anchor,
// declaration), then Y in declaration order.  Throws std::invalid_argument
// on a malformed key, InputError if t does not cover X.
BipartiteGraph subproblem_graph(const BipartiteGraph& g, const Caterpillar& t,
                                const SubproblemKey& key);

struct SubproblemResult {
    bool valid = false;
    Coloring partial;  // colors every vertex of G_S; empty unless valid
};

// Decides one segment subproblem and, when satisfiable, produces a proper
// list coloring of G_S honoring the key's boundary pattern.  Pipeline:
// boundary/segment list checks, backbone assignment, pruning of Y lists by
// colored backbone neighbors, unit propagation to a fixpoint, the
// largest-color drop for untouched 3-list Y-vertices, c2 for 3-list leaves
// (propagating again), and a 2SAT finish for the remaining 2-lists.  Every
// deterministic tie-break is fixed, so equal inputs give equal colorings.
SubproblemResult solve_subproblem(const BipartiteGraph& g, const Caterpillar& t,
                                  const ListAssignment& l, const SubproblemKey& key);

// Compatibility DAG over satisfiable keys plus virtual endpoints s and t.
// Arcs: s -> every key with i == 1; key with j == n -> t; and segment arcs
// (i,j,c1,c2,c3) -> (j+1,k,c2,c3,c4).  A full-span key (i == 1, j == n)
// carries both endpoint arcs.  Nodes are indices into keys(); s and t are
// kSource/kSink.
class SubproblemDag {
public:
    static constexpr int kSource = -1;
    static constexpr int kSink = -2;

    // keys must be structurally valid, unique, and in canonical order.
    SubproblemDag(std::vector<SubproblemKey> keys, int n);

    int n() const { return n_; }
    const std::vector<SubproblemKey>& keys() const { return keys_; }

    // Index of the node with the given segment and pattern, -1 if absent.
    int id_of(int i, int j, int c1, int c2, int c3) const;

    bool source_arc(int v) const { return keys_[v].i == 1; }
    bool sink_arc(int v) const { return keys_[v].j == n_; }

    // Segment-arc successors of node v, in canonical key order.
    template <class Fn>
    void for_each_successor(int v, Fn&& fn) const {
        const SubproblemKey& k = keys_[v];
        for (int e = k.j + 1; e <= n_; ++e) {
            if (e == n_) {
                int w = id_of(k.j + 1, e, k.c2, k.c3, 0);
                if (w >= 0) fn(w);
            } else {
                for (int c4 = 1; c4 <= 3; ++c4) {
                    if (c4 == k.c3) continue;
                    int w = id_of(k.j + 1, e, k.c2, k.c3, c4);
                    if (w >= 0) fn(w);
                }
            }
        }
    }

    // Materialized arc list for inspection: source arcs, then segment arcs,
    // then sink arcs, each group in node order.  Quadratic-ish; small n only.
    std::vector<std::pair<int, int>> arcs() const;

private:
    int n_ = 0;
    std::vector<SubproblemKey> keys_;
    std::vector<int> id_table_;  // (segment, pattern) -> node index or -1

    std::size_t slot(int i, int j, int c1, int c2, int c3) const;
};

SubproblemDag build_subproblem_dag(std::vector<SubproblemKey> valid_keys, int n);

// One s-t path as its key sequence (endpoints stripped), or nullopt when t
// is unreachable.  Breadth-first from s; ties fall to canonical key order,
// so the result is deterministic.
std::optional<std::vector<SubproblemKey>> find_st_path(const SubproblemDag& h);

// Union of the partial colorings of a path's subproblem results.  A vertex
// colored by several parts must agree everywhere (violation -> InternalError:
// that cannot happen for results coming from one s-t path).  Y-vertices of
// degree 0 appear in no part and get the smallest color of their list.
Coloring combine(const BipartiteGraph& g, const ListAssignment& l,
                 const std::vector<SubproblemResult>& parts);

// Full solver: decides list 3-colorability and produces a verified coloring,
// or nullopt when infeasible.  When t is absent the graph is first run
// through recognition; a graph that is not caterpillar-convex (or a supplied
// t that fails the representation check) raises UnsupportedInstance.  Lists
// must cover every vertex (InputError otherwise).
std::optional<Coloring> list3color(const BipartiteGraph& g, const ListAssignment& l,
                                   const std::optional<Caterpillar>& t = std::nullopt);

}  // namespace catcol
