#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catcol/graph.hpp"

namespace catcol {

// Twin removal log: which X-vertices were deleted and which kept vertex
// stands for them.
struct TwinLog {
    std::unordered_map<std::string, std::string> representative;  // deleted -> kept
    std::vector<std::string> deleted;                             // deletion order
};

// Pendant-only removal log.
struct PendantLog {
    std::vector<std::string> removed_x;  // removal order
    std::vector<std::string> dropped_y;  // degree <= 1 after the X removals
};

// Neighborhood containment over the X part of a twin-free graph:
// arc a -> b iff N(a) is a proper subset of N(b).
struct ContainmentDag {
    std::vector<std::string> nodes;         // X ids, declaration order
    std::vector<std::vector<int>> out;      // adjacency by node index, target ascending
    std::vector<std::pair<int, int>> arcs;  // (a, b), source-major
};

// Partition of X into neighborhood-equality classes.  Members keep
// declaration order; classes are ordered by their first member.
std::vector<std::vector<std::string>> twin_classes(const BipartiteGraph& g);

// Keeps the declaration-order-first member of every class; the rest are
// deleted in declaration order.
std::pair<BipartiteGraph, TwinLog> remove_twins(const BipartiteGraph& g);

// Repeatedly removes X-vertices all of whose Y-neighbors have degree 1
// (isolated X-vertices qualify vacuously) until none is left, then drops
// Y-vertices of degree <= 1.
std::pair<BipartiteGraph, PendantLog> remove_pendant_only(const BipartiteGraph& g);

// pre: g is twin-free.  Throws InternalError when two neighborhoods coincide
// (that would make containment cyclic).
ContainmentDag build_containment_dag(const BipartiteGraph& g);

// Sinks of the DAG become the backbone pool, everything else a leaf; both in
// declaration order.
struct BackboneSplit {
    std::vector<std::string> backbone;
    std::vector<std::string> leaves;
};
BackboneSplit backbone_and_leaves(const ContainmentDag& d);

// Orders the backbone pool so that every constraint set is consecutive;
// nullopt when impossible.  Constraint members must belong to the backbone.
std::optional<std::vector<std::string>> order_backbone(
    const std::vector<std::string>& backbone,
    const std::vector<std::vector<std::string>>& constraint_sets);

// Attaches every leaf node to the first backbone vertex (in backbone order)
// it has an arc to; nullopt when some leaf has no such arc.
std::optional<Caterpillar> assemble_caterpillar(const std::vector<std::string>& ordered_backbone,
                                                const std::vector<std::string>& leaf_nodes,
                                                const ContainmentDag& d);

// Undoes the reductions on the tree: pendant-removed vertices come back in
// reverse removal order as leaves of the first backbone vertex (the first one
// becomes the sole backbone vertex if the tree is empty); twins come back as
// leaves of their representative, or of its anchor when the representative is
// itself a leaf.
Caterpillar reinsert(const Caterpillar& t2, const PendantLog& pendants, const TwinLog& twins);

enum class NotConvexReason { c1p_failed, leaf_unattachable };

const char* to_string(NotConvexReason r);

struct RecognitionResult {
    std::optional<Caterpillar> caterpillar;
    NotConvexReason reason = NotConvexReason::c1p_failed;  // meaningful when !caterpillar
};

// Full pipeline.  A returned caterpillar has passed the verifier (checked
// internally; a verifier rejection here is a bug and raises InternalError).
RecognitionResult recognize(const BipartiteGraph& g);

}  // namespace catcol
