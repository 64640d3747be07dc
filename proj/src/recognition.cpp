#include "catcol/recognition.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "catcol/errors.hpp"
#include "catcol/pqtree.hpp"

namespace catcol {

namespace {

// Index-level twin classes; members keep declaration order, classes sorted by
// first member.
std::vector<std::vector<int>> twin_classes_idx(const BipartiteGraph& g) {
    int nx = g.x_count();
    std::vector<std::vector<int>> classes;
    if (nx == 0) return classes;
    classes.push_back(std::vector<int>(nx));
    for (int i = 0; i < nx; ++i) classes[0][i] = i;

    std::vector<char> mark(nx, 0);
    for (int yi = 0; yi < g.y_count(); ++yi) {
        for (int xi : g.y_neighbors(yi)) mark[xi] = 1;
        std::vector<std::vector<int>> next;
        next.reserve(classes.size() + 1);
        for (auto& cls : classes) {
            std::vector<int> in, out;
            for (int xi : cls)
                (mark[xi] ? in : out).push_back(xi);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        classes = std::move(next);
        for (int xi : g.y_neighbors(yi)) mark[xi] = 0;
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

BipartiteGraph induced(const BipartiteGraph& g, const std::vector<char>& keep_x,
                       const std::vector<char>& keep_y) {
    std::vector<std::string> xs, ys;
    for (int i = 0; i < g.x_count(); ++i)
        if (keep_x[i]) xs.push_back(g.x_id(i));
    for (int i = 0; i < g.y_count(); ++i)
        if (keep_y[i]) ys.push_back(g.y_id(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [xi, yi] : g.edges())
        if (keep_x[xi] && keep_y[yi]) edges.emplace_back(g.x_id(xi), g.y_id(yi));
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

// One reduction round as replayed by recognize()'s undo pass.
struct ReduceRound {
    struct ClassRec {
        std::vector<std::string> members;  // declaration order
        int kept;                          // leading members left in place
    };
    std::vector<ClassRec> classes;
    PendantLog pendants;
};

// True when some Y-row of g is exactly the member set of cls (which is
// ascending, as produced by twin_classes_idx).
bool class_owns_row(const BipartiteGraph& g, const std::vector<int>& cls) {
    for (int yi : g.x_neighbors(cls.front())) {
        const auto& row = g.y_neighbors(yi);
        if (row.size() != cls.size()) continue;
        bool all = true;
        for (int xi : row) {
            if (!std::binary_search(cls.begin(), cls.end(), xi)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace

std::vector<std::vector<std::string>> twin_classes(const BipartiteGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : twin_classes_idx(g)) {
        std::vector<std::string> ids;
        for (int xi : cls) ids.push_back(g.x_id(xi));
        out.push_back(std::move(ids));
    }
    return out;
}

std::pair<BipartiteGraph, TwinLog> remove_twins(const BipartiteGraph& g) {
    auto classes = twin_classes_idx(g);
    std::vector<int> rep_of(g.x_count(), -1);
    for (const auto& cls : classes)
        for (int xi : cls) rep_of[xi] = cls.front();

    TwinLog log;
    std::vector<char> keep_x(g.x_count(), 0);
    for (int xi = 0; xi < g.x_count(); ++xi) {
        if (rep_of[xi] == xi) {
            keep_x[xi] = 1;
        } else {
            log.deleted.push_back(g.x_id(xi));
            log.representative[g.x_id(xi)] = g.x_id(rep_of[xi]);
        }
    }
    std::vector<char> keep_y(g.y_count(), 1);
    return {induced(g, keep_x, keep_y), std::move(log)};
}

std::pair<BipartiteGraph, PendantLog> remove_pendant_only(const BipartiteGraph& g) {
    std::vector<char> alive(g.x_count(), 1);
    std::vector<int> deg_y(g.y_count(), 0);
    for (int yi = 0; yi < g.y_count(); ++yi)
        deg_y[yi] = static_cast<int>(g.y_neighbors(yi).size());

    PendantLog log;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int xi = 0; xi < g.x_count(); ++xi) {
            if (!alive[xi]) continue;
            bool all_pendant = true;
            for (int yi : g.x_neighbors(xi)) {
                if (deg_y[yi] != 1) {
                    all_pendant = false;
                    break;
                }
            }
            if (!all_pendant) continue;
            alive[xi] = 0;
            for (int yi : g.x_neighbors(xi)) --deg_y[yi];
            log.removed_x.push_back(g.x_id(xi));
            changed = true;
        }
    }
    std::vector<char> keep_y(g.y_count(), 1);
    for (int yi = 0; yi < g.y_count(); ++yi) {
        if (deg_y[yi] <= 1) {
            keep_y[yi] = 0;
            log.dropped_y.push_back(g.y_id(yi));
        }
    }
    return {induced(g, alive, keep_y), std::move(log)};
}

ContainmentDag build_containment_dag(const BipartiteGraph& g) {
    int nx = g.x_count();
    int words = (g.y_count() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> nb(nx, std::vector<std::uint64_t>(words, 0));
    for (int xi = 0; xi < nx; ++xi)
        for (int yi : g.x_neighbors(xi))
            nb[xi][yi / 64] |= std::uint64_t{1} << (yi % 64);

    auto subset = [&](int a, int b) {
        for (int w = 0; w < words; ++w)
            if (nb[a][w] & ~nb[b][w]) return false;
        return true;
    };

    ContainmentDag d;
    d.nodes = g.x_ids();
    d.out.resize(nx);
    for (int a = 0; a < nx; ++a) {
        for (int b = 0; b < nx; ++b) {
            if (a == b || !subset(a, b)) continue;
            if (subset(b, a))
                throw InternalError("build_containment_dag: equal neighborhoods for " +
                                    g.x_id(a) + " and " + g.x_id(b) + " (graph is not twin-free)");
            d.out[a].push_back(b);
            d.arcs.emplace_back(a, b);
        }
    }
    return d;
}

BackboneSplit backbone_and_leaves(const ContainmentDag& d) {
    BackboneSplit split;
    for (size_t i = 0; i < d.nodes.size(); ++i)
        (d.out[i].empty() ? split.backbone : split.leaves).push_back(d.nodes[i]);
    return split;
}

std::optional<std::vector<std::string>> order_backbone(
    const std::vector<std::string>& backbone,
    const std::vector<std::vector<std::string>>& constraint_sets) {
    std::unordered_map<std::string, int> pos;
    for (size_t i = 0; i < backbone.size(); ++i) pos[backbone[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> sets;
    sets.reserve(constraint_sets.size());
    for (const auto& s : constraint_sets) {
        std::vector<int> t;
        t.reserve(s.size());
        for (const auto& id : s) {
            auto it = pos.find(id);
            if (it == pos.end())
                throw std::invalid_argument("order_backbone: constraint member \"" + id +
                                            "\" is not a backbone vertex");
            t.push_back(it->second);
        }
        sets.push_back(std::move(t));
    }
    auto order = consecutive_ones_order(static_cast<int>(backbone.size()), sets);
    if (!order) return std::nullopt;
    std::vector<std::string> out;
    out.reserve(backbone.size());
    for (int e : *order) out.push_back(backbone[e]);
    return out;
}

std::optional<Caterpillar> assemble_caterpillar(const std::vector<std::string>& ordered_backbone,
                                                const std::vector<std::string>& leaf_nodes,
                                                const ContainmentDag& d) {
    std::unordered_map<std::string, int> node_of;
    for (size_t i = 0; i < d.nodes.size(); ++i) node_of[d.nodes[i]] = static_cast<int>(i);
    std::unordered_map<int, int> backbone_pos;  // node index -> backbone position
    for (size_t p = 0; p < ordered_backbone.size(); ++p) {
        auto it = node_of.find(ordered_backbone[p]);
        if (it == node_of.end())
            throw std::invalid_argument("assemble_caterpillar: unknown backbone vertex \"" +
                                        ordered_backbone[p] + "\"");
        backbone_pos[it->second] = static_cast<int>(p);
    }

    Caterpillar t;
    t.backbone = ordered_backbone;
    t.leaves.assign(ordered_backbone.size(), {});
    for (const auto& id : leaf_nodes) {
        auto it = node_of.find(id);
        if (it == node_of.end())
            throw std::invalid_argument("assemble_caterpillar: unknown leaf vertex \"" + id + "\"");
        int best = -1;
        for (int b : d.out[it->second]) {
            auto bp = backbone_pos.find(b);
            if (bp == backbone_pos.end()) continue;
            if (best < 0 || bp->second < best) best = bp->second;
        }
        if (best < 0) return std::nullopt;  // no arc into the backbone
        t.leaves[best].push_back(id);
    }
    return t;
}

Caterpillar reinsert(const Caterpillar& t2, const PendantLog& pendants, const TwinLog& twins) {
    Caterpillar t = t2;
    for (auto it = pendants.removed_x.rbegin(); it != pendants.removed_x.rend(); ++it) {
        if (t.backbone.empty()) {
            t.backbone.push_back(*it);
            t.leaves.push_back({});
        } else {
            t.leaves[0].push_back(*it);
        }
    }
    std::unordered_map<std::string, int> anchor;  // id -> backbone position of/above it
    for (size_t p = 0; p < t.backbone.size(); ++p) {
        anchor[t.backbone[p]] = static_cast<int>(p);
        for (const auto& id : t.leaves[p]) anchor[id] = static_cast<int>(p);
    }
    for (const auto& id : twins.deleted) {
        const auto& rep = twins.representative.at(id);
        auto it = anchor.find(rep);
        if (it == anchor.end())
            throw InternalError("reinsert: representative \"" + rep + "\" missing from tree");
        t.leaves[it->second].push_back(id);
        anchor[id] = it->second;
    }
    return t;
}

const char* to_string(NotConvexReason r) {
    switch (r) {
        case NotConvexReason::c1p_failed: return "c1p-failed";
        case NotConvexReason::leaf_unattachable: return "leaf-unattachable";
    }
    return "unknown";
}

RecognitionResult recognize(const BipartiteGraph& g) {
    // Reduction loop.  Twin classes collapse to one member, except classes
    // that are some Y-vertex's exact neighborhood: those keep two.  Such a
    // row forces two class members to be tree-adjacent, which a lone survivor
    // cannot express — once the row shrinks to degree 1 it is dropped and any
    // reattachment of the deleted twins as leaves of a shared anchor leaves
    // them pairwise disconnected.  Keeping the pair holds the row at degree 2
    // so the constraint reaches the containment core.  Dropping low-degree
    // rows can merge neighborhoods and surface fresh twins (e.g. y1-x2,
    // y2-x1, y2-x2: dropping y1 makes x1, x2 twins), so the reductions
    // iterate to a joint fixpoint and are undone round by round in reverse.
    std::vector<ReduceRound> rounds;
    BipartiteGraph cur = g;
    while (true) {
        ReduceRound round;
        std::vector<char> keep_x(cur.x_count(), 1);
        bool collapsed = false;
        for (const auto& cls : twin_classes_idx(cur)) {
            if (cls.size() < 2) continue;
            ReduceRound::ClassRec rec;
            for (int xi : cls) rec.members.push_back(cur.x_id(xi));
            rec.kept = class_owns_row(cur, cls) ? 2 : 1;
            for (size_t k = rec.kept; k < cls.size(); ++k) {
                keep_x[cls[k]] = 0;
                collapsed = true;
            }
            round.classes.push_back(std::move(rec));
        }
        BipartiteGraph g1 =
            collapsed ? induced(cur, keep_x, std::vector<char>(cur.y_count(), 1)) : cur;
        auto [g2, pendants] = remove_pendant_only(g1);
        bool changed =
            collapsed || !pendants.removed_x.empty() || !pendants.dropped_y.empty();
        if (!changed) break;
        round.pendants = std::move(pendants);
        rounds.push_back(std::move(round));
        cur = std::move(g2);
    }

    // At the fixpoint the only surviving twin classes are the kept pairs.
    // Split each with a synthetic private row on its first member: that
    // member becomes a sink (hence backbone), and the partner's only arc
    // points at it, so assembly anchors the partner right there — exactly
    // the adjacency the pair's witnessing row demands.
    std::vector<int> pinned;
    for (const auto& cls : twin_classes_idx(cur))
        if (cls.size() >= 2) pinned.push_back(cls.front());
    BipartiteGraph core = [&] {
        if (pinned.empty()) return cur;
        auto ys = cur.y_ids();
        std::unordered_set<std::string> used(ys.begin(), ys.end());
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [xi, yi] : cur.edges())
            edges.emplace_back(cur.x_id(xi), cur.y_id(yi));
        int tag = 0;
        for (int xi : pinned) {
            std::string id;
            do id = "__pin" + std::to_string(tag++); while (used.count(id));
            used.insert(id);
            ys.push_back(id);
            edges.emplace_back(cur.x_id(xi), id);
        }
        return BipartiteGraph(cur.x_ids(), std::move(ys), edges);
    }();

    ContainmentDag dag = build_containment_dag(core);
    BackboneSplit split = backbone_and_leaves(dag);

    std::vector<char> in_backbone(cur.x_count(), 0);
    for (const auto& id : split.backbone) in_backbone[*cur.x_index(id)] = 1;
    std::vector<std::vector<std::string>> sets;  // real rows only; the synthetic
                                                 // singletons never constrain an order
    sets.reserve(cur.y_count());
    for (int yi = 0; yi < cur.y_count(); ++yi) {
        std::vector<std::string> s;
        for (int xi : cur.y_neighbors(yi))
            if (in_backbone[xi]) s.push_back(cur.x_id(xi));
        sets.push_back(std::move(s));
    }

    auto ordered = order_backbone(split.backbone, sets);
    if (!ordered) return {std::nullopt, NotConvexReason::c1p_failed};
    auto t2 = assemble_caterpillar(*ordered, split.leaves, dag);
    if (!t2) return {std::nullopt, NotConvexReason::leaf_unattachable};

    Caterpillar t = *t2;
    for (auto round = rounds.rbegin(); round != rounds.rend(); ++round) {
        // Pendant-removed vertices return as fresh backbone ends: every row
        // they touched had degree <= 1 at removal time, so their placement is
        // unconstrained, and extending the path disturbs no existing row.
        // Being backbone also makes them safe anchors for the twin pass.
        for (auto it = round->pendants.removed_x.rbegin();
             it != round->pendants.removed_x.rend(); ++it) {
            t.backbone.push_back(*it);
            t.leaves.push_back({});
        }
        std::unordered_map<std::string, int> pos;     // backbone id -> position
        std::unordered_map<std::string, int> anchor;  // leaf id -> position above it
        for (size_t p = 0; p < t.backbone.size(); ++p) {
            pos[t.backbone[p]] = static_cast<int>(p);
            for (const auto& id : t.leaves[p]) anchor[id] = static_cast<int>(p);
        }
        for (const auto& rec : round->classes) {
            if (rec.members.size() <= static_cast<size_t>(rec.kept)) continue;
            // Deleted twins reattach as leaves of a backbone vertex lying in
            // all their rows: a kept member when one is backbone (for a kept
            // pair the pinned first member always is), otherwise the kept
            // member's own anchor, which every row with two survivors
            // contains.
            int at = -1;
            for (int k = 0; k < rec.kept && at < 0; ++k) {
                auto it = pos.find(rec.members[k]);
                if (it != pos.end()) at = it->second;
            }
            if (at < 0) {
                auto it = anchor.find(rec.members[0]);
                if (it == anchor.end())
                    throw InternalError("recognize: twin representative \"" + rec.members[0] +
                                        "\" missing from the assembled tree");
                at = it->second;
            }
            for (size_t k = rec.kept; k < rec.members.size(); ++k) {
                t.leaves[at].push_back(rec.members[k]);
                anchor[rec.members[k]] = at;
            }
        }
    }

    auto verdict = verify_caterpillar_representation(g, t);
    if (!verdict.accepted)
        throw InternalError("recognize: assembled caterpillar rejected by the verifier (witness " +
                            verdict.witness_y + ")");
    return {std::move(t), NotConvexReason::c1p_failed};
}

}  // namespace catcol
