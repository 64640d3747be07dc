#include "catcol/graph.hpp"

#include <algorithm>
#include <sstream>

#include "catcol/errors.hpp"

namespace catcol {

std::vector<int> ColorSet::colors() const {
    std::vector<int> out;
    for (int c = 1; c <= 3; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

static std::string quoted(const std::string& s) { return "\"" + s + "\""; }

BipartiteGraph::BipartiteGraph(std::vector<std::string> x_ids, std::vector<std::string> y_ids,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : x_ids_(std::move(x_ids)), y_ids_(std::move(y_ids)) {
    for (int i = 0; i < static_cast<int>(x_ids_.size()); ++i)
        if (!x_index_.emplace(x_ids_[i], i).second)
            throw InputError("duplicate vertex id " + quoted(x_ids_[i]));
    for (int i = 0; i < static_cast<int>(y_ids_.size()); ++i) {
        if (x_index_.count(y_ids_[i]))
            throw InputError("duplicate vertex id " + quoted(y_ids_[i]));
        if (!y_index_.emplace(y_ids_[i], i).second)
            throw InputError("duplicate vertex id " + quoted(y_ids_[i]));
    }

    adj_x_.resize(x_ids_.size());
    adj_y_.resize(y_ids_.size());
    std::vector<std::vector<char>> seen(x_ids_.size(), std::vector<char>(y_ids_.size(), 0));
    int k = 0;
    for (const auto& [a, b] : edges) {
        auto xa = x_index_.find(a);
        auto ya = y_index_.find(a);
        auto xb = x_index_.find(b);
        auto yb = y_index_.find(b);
        std::ostringstream at;
        at << "edge " << k << " [" << quoted(a) << "," << quoted(b) << "]";
        if (xa == x_index_.end() && ya == y_index_.end())
            throw InputError(at.str() + ": unknown vertex id " + quoted(a));
        if (xb == x_index_.end() && yb == y_index_.end())
            throw InputError(at.str() + ": unknown vertex id " + quoted(b));
        int xi, yi;
        if (xa != x_index_.end() && yb != y_index_.end()) {
            xi = xa->second;
            yi = yb->second;
        } else if (ya != y_index_.end() && xb != x_index_.end()) {
            xi = xb->second;
            yi = ya->second;
        } else {
            throw InputError(at.str() + ": edge inside partition");
        }
        if (seen[xi][yi]) throw InputError("duplicate edge [" + quoted(x_ids_[xi]) + "," + quoted(y_ids_[yi]) + "]");
        seen[xi][yi] = 1;
        edges_.emplace_back(xi, yi);
        adj_x_[xi].push_back(yi);
        adj_y_[yi].push_back(xi);
        ++k;
    }
}

std::optional<int> BipartiteGraph::x_index(const std::string& id) const {
    auto it = x_index_.find(id);
    if (it == x_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> BipartiteGraph::y_index(const std::string& id) const {
    auto it = y_index_.find(id);
    if (it == y_index_.end()) return std::nullopt;
    return it->second;
}

bool BipartiteGraph::has_vertex(const std::string& id) const {
    return x_index_.count(id) != 0 || y_index_.count(id) != 0;
}

CaterpillarIndex::CaterpillarIndex(const BipartiteGraph& g, const Caterpillar& t) {
    if (t.leaves.size() != t.backbone.size())
        throw InputError("caterpillar: leaves list does not parallel the backbone");
    int nx = g.x_count();
    is_backbone_.assign(nx, 0);
    position_.assign(nx, 0);
    std::vector<char> used(nx, 0);
    auto claim = [&](const std::string& id) {
        auto xi = g.x_index(id);
        if (!xi) throw InputError("caterpillar: " + quoted(id) + " is not an X-vertex");
        if (used[*xi]) throw InputError("caterpillar: vertex " + quoted(id) + " used twice");
        used[*xi] = 1;
        return *xi;
    };
    for (int p = 0; p < static_cast<int>(t.backbone.size()); ++p) {
        int xi = claim(t.backbone[p]);
        backbone_.push_back(xi);
        is_backbone_[xi] = 1;
        position_[xi] = p + 1;
    }
    leaves_.resize(t.backbone.size());
    for (int p = 0; p < static_cast<int>(t.backbone.size()); ++p) {
        for (const auto& id : t.leaves[p]) {
            int xi = claim(id);
            leaves_[p].push_back(xi);
            position_[xi] = p + 1;
        }
    }
    for (int xi = 0; xi < nx; ++xi)
        if (!used[xi])
            throw InputError("caterpillar: X-vertex " + quoted(g.x_id(xi)) + " not covered");
}

void validate_lists_cover(const BipartiteGraph& g, const ListAssignment& l) {
    for (const auto& id : g.x_ids())
        if (!l.has(id)) throw InputError("lists: no entry for vertex " + quoted(id));
    for (const auto& id : g.y_ids())
        if (!l.has(id)) throw InputError("lists: no entry for vertex " + quoted(id));
    if (l.lists.size() != static_cast<size_t>(g.x_count() + g.y_count()))
        for (const auto& [id, cs] : l.lists)
            if (!g.has_vertex(id)) throw InputError("lists: entry for unknown vertex " + quoted(id));
}

RepresentationVerdict verify_caterpillar_representation(const BipartiteGraph& g,
                                                        const Caterpillar& t) {
    CaterpillarIndex idx(g, t);
    for (int yi = 0; yi < g.y_count(); ++yi) {
        const auto& nb = g.y_neighbors(yi);
        if (nb.size() <= 1) continue;
        // Positions of backbone neighbors; all are distinct vertices, so the
        // run is contiguous iff its span equals its cardinality.
        int lo = 0, hi = 0, backbone_cnt = 0;
        for (int xi : nb) {
            if (!idx.is_backbone(xi)) continue;
            int p = idx.position(xi);
            if (backbone_cnt == 0) {
                lo = hi = p;
            } else {
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            ++backbone_cnt;
        }
        bool ok;
        if (backbone_cnt == 0) {
            // Two or more leaves with no backbone vertex can never be connected.
            ok = false;
        } else {
            ok = (hi - lo + 1 == backbone_cnt);
            if (ok) {
                // Every leaf must hang off a backbone vertex inside the run,
                // i.e. its anchor is itself a neighbor of y.
                for (int xi : nb) {
                    if (idx.is_backbone(xi)) continue;
                    int p = idx.position(xi);
                    if (p < lo || p > hi) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) return {false, g.y_id(yi)};
    }
    return {true, {}};
}

ColoringVerdict verify_coloring(const BipartiteGraph& g, const ListAssignment& l,
                                const Coloring& c) {
    validate_lists_cover(g, l);
    auto color_of = [&](const std::string& id) {
        auto it = c.colors.find(id);
        if (it == c.colors.end()) throw InputError("coloring: no entry for vertex " + quoted(id));
        return it->second;
    };
    for (const auto& [id, col] : c.colors) {
        (void)col;
        if (!g.has_vertex(id)) throw InputError("coloring: entry for unknown vertex " + quoted(id));
    }
    ColoringVerdict v;
    auto in_list = [&](const std::string& id) {
        int col = color_of(id);
        return col >= 1 && col <= 3 && l.at(id).contains(col);
    };
    for (const auto& id : g.x_ids()) {
        if (!in_list(id)) {
            v.bad_vertex = id;
            return v;
        }
    }
    for (const auto& id : g.y_ids()) {
        if (!in_list(id)) {
            v.bad_vertex = id;
            return v;
        }
    }
    for (const auto& [xi, yi] : g.edges()) {
        if (color_of(g.x_id(xi)) == color_of(g.y_id(yi))) {
            v.bad_edge = {g.x_id(xi), g.y_id(yi)};
            return v;
        }
    }
    v.accepted = true;
    return v;
}

}  // namespace catcol
