#include "catcol/coloring.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

#include "catcol/errors.hpp"
#include "catcol/recognition.hpp"
#include "catcol/twosat.hpp"

namespace catcol {

namespace {

std::uint8_t color_bit(int c) { return static_cast<std::uint8_t>(1u << (c - 1)); }

int pattern_slot(int c1, int c2, int c3) { return c1 * 12 + (c2 - 1) * 4 + c3; }

// Which painted neighbors a Y-vertex sees in a segment context.
constexpr std::uint8_t kLeft = 1;   // adjacent to b_{i-1}
constexpr std::uint8_t kMid = 2;    // adjacent to some b_i..b_j
constexpr std::uint8_t kRight = 4;  // adjacent to b_{j+1}

bool has_pos(const std::vector<int>& sorted, int p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

bool has_pos_in(const std::vector<int>& sorted, int lo, int hi) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
    return it != sorted.end() && *it <= hi;
}

// One not-yet-painted vertex of a segment instance: a leaf or a Y-vertex.
struct LocalV {
    int global = 0;         // x index for leaves, y index for Y-vertices
    bool is_y = false;
    std::uint8_t list = 0;  // current admissible colors
    int color = 0;          // 0 while uncolored
};

// Everything past the backbone painting: unit propagation to a fixpoint, the
// two 3-list rules, and the 2SAT finish.  verts holds leaves first (nleaf of
// them), then Y-vertices; lists already reflect painted backbone neighbors.
// adj_leaf maps a leaf slot to Y offsets (add nleaf), adj_y the reverse.
// Returns false as soon as a list empties or the 2SAT is unsatisfiable;
// otherwise every vertex ends up colored.
bool run_pipeline(std::vector<LocalV>& verts, int nleaf,
                  const std::vector<std::vector<int>>& adj_leaf,
                  const std::vector<std::vector<int>>& adj_y, int c2) {
    const int m = static_cast<int>(verts.size());
    std::vector<int> queue;
    queue.reserve(m);
    std::size_t head = 0;
    bool ok = true;

    auto for_neighbors = [&](int v, auto&& fn) {
        if (v < nleaf)
            for (int r : adj_leaf[v]) fn(nleaf + r);
        else
            for (int s : adj_y[v - nleaf]) fn(s);
    };
    auto prune = [&](int v, int c) {
        for_neighbors(v, [&](int w) {
            LocalV& t = verts[w];
            if (t.color || !(t.list & color_bit(c))) return;
            t.list = static_cast<std::uint8_t>(t.list & ~color_bit(c));
            if (t.list == 0)
                ok = false;
            else if (__builtin_popcount(t.list) == 1)
                queue.push_back(w);
        });
    };
    auto drain = [&]() {
        while (ok && head < queue.size()) {
            int v = queue[head++];
            LocalV& s = verts[v];
            if (s.color) continue;
            s.color = ColorSet::from_mask(s.list).smallest();
            prune(v, s.color);
        }
    };

    // forced singletons first
    for (int v = 0; v < m; ++v) {
        if (verts[v].list == 0) return false;
        if (__builtin_popcount(verts[v].list) == 1) queue.push_back(v);
    }
    drain();
    if (!ok) return false;

    // an untouched Y-vertex still holding all three colors loses the largest
    for (auto& s : verts)
        if (!s.color && s.is_y && s.list == 0b111) s.list = 0b011;

    // a leaf still holding all three colors can safely take the segment color
    for (int v = 0; v < nleaf && ok; ++v) {
        LocalV& s = verts[v];
        if (s.color || s.list != 0b111) continue;
        s.color = c2;
        prune(v, c2);
        drain();
    }
    if (!ok) return false;

    // what's left carries exactly two colors each
    std::vector<int> sat_of(m, -1);
    std::vector<int> members;
    std::vector<ColorSet> lists;
    for (int v = 0; v < m; ++v) {
        if (verts[v].color) continue;
        if (__builtin_popcount(verts[v].list) != 2)
            throw InternalError("segment solve: non-2 list reached the 2SAT stage");
        sat_of[v] = static_cast<int>(members.size());
        members.push_back(v);
        lists.push_back(ColorSet::from_mask(verts[v].list));
    }
    if (members.empty()) return true;
    std::vector<std::pair<int, int>> edges;
    for (int v : members) {
        if (v >= nleaf) break;  // leaf-major traversal covers each pair once
        for_neighbors(v, [&](int w) {
            if (sat_of[w] >= 0) edges.emplace_back(sat_of[v], sat_of[w]);
        });
    }
    auto sol = two_list_color(lists, edges);
    if (!sol) return false;
    for (std::size_t k = 0; k < members.size(); ++k) verts[members[k]].color = (*sol)[k];
    return true;
}

// Shared precomputation for solving many segment subproblems against one
// (graph, caterpillar, lists) triple.
class SegmentWorkspace {
public:
    SegmentWorkspace(const BipartiteGraph& g, const CaterpillarIndex& idx,
                     const ListAssignment& l)
        : g_(g), idx_(idx), n_(idx.length()) {
        bb_mask_.resize(n_);
        for (int p = 1; p <= n_; ++p)
            bb_mask_[p - 1] = l.at(g.x_id(idx.backbone_at(p))).mask();
        xmask_.resize(g.x_count());
        for (int xi = 0; xi < g.x_count(); ++xi) xmask_[xi] = l.at(g.x_id(xi)).mask();
        ymask_.resize(g.y_count());
        for (int yi = 0; yi < g.y_count(); ++yi) ymask_[yi] = l.at(g.y_id(yi)).mask();
        ypos_bb_.resize(g.y_count());
        ypos_leaf_.resize(g.y_count());
        for (int yi = 0; yi < g.y_count(); ++yi) {
            for (int xi : g.y_neighbors(yi))
                (idx.is_backbone(xi) ? ypos_bb_ : ypos_leaf_)[yi].push_back(idx.position(xi));
            std::sort(ypos_bb_[yi].begin(), ypos_bb_[yi].end());
            std::sort(ypos_leaf_[yi].begin(), ypos_leaf_[yi].end());
        }
        // a one-color row whose entire neighborhood is a single x-vertex is a
        // standing veto on that color; fold those into the vertex's own list
        effx_ = xmask_;
        for (int yi = 0; yi < g.y_count(); ++yi)
            if (g.y_neighbors(yi).size() == 1 && __builtin_popcount(ymask_[yi] & 7) == 1)
                effx_[g.y_neighbors(yi)[0]] &= static_cast<std::uint8_t>(~ymask_[yi]);
        // nextbad_[c-1][p]: first position >= p whose backbone list lacks c
        for (int c = 1; c <= 3; ++c) {
            auto& nb = nextbad_[c - 1];
            nb.assign(n_ + 2, n_ + 1);
            for (int p = n_; p >= 1; --p)
                nb[p] = (bb_mask_[p - 1] & color_bit(c)) ? nb[p + 1] : p;
        }
    }

    // Decides one key; with want_coloring also paints all of G_S.
    SubproblemResult solve(const SubproblemKey& key, bool want_coloring) {
        if (!validate_key(key, n_)) throw std::invalid_argument("bad subproblem key");
        SubproblemResult res;
        if (!step1_ok(key)) return res;
        const int i = key.i, j = key.j;

        std::vector<LocalV> verts;
        std::vector<std::vector<int>> adj_leaf, adj_y;
        for (int p = i; p <= j; ++p)
            for (int xi : idx_.leaves_at(p)) {
                adj_leaf.emplace_back();
                verts.push_back({xi, false, xmask_[xi], 0});
            }
        const int nleaf = static_cast<int>(verts.size());
        std::vector<int> ymap(g_.y_count(), -1);
        for (int yi = 0; yi < g_.y_count(); ++yi) {
            bool mid = has_pos_in(ypos_bb_[yi], i, j);
            if (!mid && !has_pos_in(ypos_leaf_[yi], i, j)) continue;
            std::uint8_t removed = 0;
            if (mid) removed |= color_bit(key.c2);
            if (i > 1 && has_pos(ypos_bb_[yi], i - 1)) removed |= color_bit(key.c1);
            if (j < n_ && has_pos(ypos_bb_[yi], j + 1)) removed |= color_bit(key.c3);
            ymap[yi] = static_cast<int>(adj_y.size());
            adj_y.emplace_back();
            verts.push_back({yi, true, static_cast<std::uint8_t>(ymask_[yi] & ~removed), 0});
        }
        for (int s = 0; s < nleaf; ++s)
            for (int yi : g_.x_neighbors(verts[s].global)) {
                if (ymap[yi] < 0) throw InternalError("leaf neighbor missing from segment");
                adj_leaf[s].push_back(ymap[yi]);
                adj_y[ymap[yi]].push_back(s);
            }

        if (!run_pipeline(verts, nleaf, adj_leaf, adj_y, key.c2)) return res;
        res.valid = true;
        if (want_coloring) {
            for (int p = std::max(1, i - 1); p <= std::min(n_, j + 1); ++p) {
                int c = p < i ? key.c1 : (p > j ? key.c3 : key.c2);
                res.partial.colors[g_.x_id(idx_.backbone_at(p))] = c;
            }
            for (const LocalV& s : verts)
                res.partial.colors[s.is_y ? g_.y_id(s.global) : g_.x_id(s.global)] = s.color;
        }
        return res;
    }

    // Satisfiability of every structurally valid key at once, as a 48-bit
    // pattern mask per segment slot (i-1)*n + (j-1).  One sweep per left end
    // maintains Y-side membership and profiles incrementally, so the per-key
    // cost stays far below a fresh |G_S| scan.
    std::vector<std::uint64_t> validity_table() {
        std::vector<std::uint64_t> out(static_cast<std::size_t>(n_) * n_, 0);
        const int ny = g_.y_count();
        std::vector<int> stamp(ny, 0), resid_stamp(ny, 0), resid_id(ny, -1);
        std::vector<std::uint8_t> prof(ny, 0);
        int cnt[8][8];
        std::vector<int> resid_leaves, resid_ys;
        std::vector<std::vector<int>> adj_leaf, adj_y;
        std::vector<LocalV> verts;

        for (int i = 1; i <= n_; ++i) {
            std::memset(cnt, 0, sizeof cnt);
            resid_leaves.clear();
            resid_ys.clear();
            adj_leaf.clear();
            adj_y.clear();
            const int sweep = i;
            int miss[3] = {0, 0, 0};  // zone leaves whose effx_ lacks color c

            // (Re)derives yi's membership and profile for segment [i..j] and
            // folds the change into cnt.  Only vertices whose profile may
            // have moved get touched, so a whole sweep costs O(|E| log).
            auto touch = [&](int yi, int j) {
                std::uint8_t np = 0;
                if (has_pos_in(ypos_bb_[yi], i, j))
                    np |= kMid;
                else if (!has_pos_in(ypos_leaf_[yi], i, j))
                    return;  // not a member of Y_S yet
                if (i > 1 && has_pos(ypos_bb_[yi], i - 1)) np |= kLeft;
                if (j < n_ && has_pos(ypos_bb_[yi], j + 1)) np |= kRight;
                const int lm = ymask_[yi] & 7;
                if (stamp[yi] != sweep) {
                    stamp[yi] = sweep;
                    prof[yi] = np;
                    ++cnt[np][lm];
                } else if (prof[yi] != np) {
                    --cnt[prof[yi]][lm];
                    ++cnt[np][lm];
                    prof[yi] = np;
                }
            };

            for (int j = i; j <= n_; ++j) {
                if (nextbad_[0][i] <= j && nextbad_[1][i] <= j && nextbad_[2][i] <= j)
                    break;  // no color survives this segment, nor any longer one

                // profile updates: new zone member b_j, the moved boundary, new leaves
                for (int yi : g_.x_neighbors(idx_.backbone_at(j))) touch(yi, j);
                if (j + 1 <= n_)
                    for (int yi : g_.x_neighbors(idx_.backbone_at(j + 1)))
                        if (stamp[yi] == sweep) touch(yi, j);
                for (int xi : idx_.leaves_at(j)) {
                    for (int c = 0; c < 3; ++c)
                        if (!(effx_[xi] >> c & 1)) ++miss[c];
                    const int ls = static_cast<int>(resid_leaves.size());
                    resid_leaves.push_back(xi);
                    adj_leaf.emplace_back();
                    for (int yi : g_.x_neighbors(xi)) {
                        touch(yi, j);
                        if (resid_stamp[yi] != sweep) {
                            resid_stamp[yi] = sweep;
                            resid_id[yi] = static_cast<int>(resid_ys.size());
                            resid_ys.push_back(yi);
                            adj_y.emplace_back();
                        }
                        adj_leaf[ls].push_back(resid_id[yi]);
                        adj_y[resid_id[yi]].push_back(ls);
                    }
                }

                // a pattern dies if some list is contained in its removal mask
                auto counter_kill = [&](int c1, int c2, int c3) {
                    for (int p = 0; p < 8; ++p) {
                        if ((p & kLeft) && i == 1) continue;   // row provably empty
                        if ((p & kRight) && j == n_) continue;
                        std::uint8_t m = 0;
                        if (p & kLeft) m |= color_bit(c1);
                        if (p & kMid) m |= color_bit(c2);
                        if (p & kRight) m |= color_bit(c3);
                        for (int sub = m;; sub = (sub - 1) & m) {
                            if (cnt[p][sub] > 0) return true;
                            if (sub == 0) break;
                        }
                    }
                    return false;
                };
                // leaves and their Y-neighbors still need the full treatment
                auto resid_ok = [&](int c1, int c2, int c3) {
                    if (resid_leaves.empty()) return true;
                    verts.clear();
                    for (int xi : resid_leaves) verts.push_back({xi, false, xmask_[xi], 0});
                    for (int yi : resid_ys) {
                        std::uint8_t removed = 0;
                        if (prof[yi] & kLeft) removed |= color_bit(c1);
                        if (prof[yi] & kMid) removed |= color_bit(c2);
                        if (prof[yi] & kRight) removed |= color_bit(c3);
                        verts.push_back(
                            {yi, true, static_cast<std::uint8_t>(ymask_[yi] & ~removed), 0});
                    }
                    return run_pipeline(verts, static_cast<int>(resid_leaves.size()),
                                        adj_leaf, adj_y, c2);
                };

                std::uint64_t bits = 0;
                const int c1lo = i == 1 ? 0 : 1, c1hi = i == 1 ? 0 : 3;
                const int c3lo = j == n_ ? 0 : 1, c3hi = j == n_ ? 0 : 3;
                for (int c1 = c1lo; c1 <= c1hi; ++c1) {
                    if (c1 > 0 && !(bb_mask_[i - 2] & color_bit(c1))) continue;
                    for (int c2 = 1; c2 <= 3; ++c2) {
                        if (c2 == c1 || nextbad_[c2 - 1][i] <= j) continue;
                        for (int c3 = c3lo; c3 <= c3hi; ++c3) {
                            if (c3 == c2) continue;
                            if (c3 > 0 && !(bb_mask_[j] & color_bit(c3))) continue;
                            if (counter_kill(c1, c2, c3)) continue;
                            // when every zone leaf can still take c2, painting
                            // them all c2 settles the leaf side outright: a
                            // surviving row owning backbone in the zone already
                            // counts c2 removed, and one that doesn't is (per
                            // the verifier) a single-leaf row effx_ folded in
                            if (miss[c2 - 1] > 0 && !resid_ok(c1, c2, c3)) continue;
                            bits |= std::uint64_t{1} << pattern_slot(c1, c2, c3);
                        }
                    }
                }
                out[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = bits;
            }
        }
        return out;
    }

private:
    bool step1_ok(const SubproblemKey& k) const {
        if (k.i > 1 && !(bb_mask_[k.i - 2] & color_bit(k.c1))) return false;
        if (k.j < n_ && !(bb_mask_[k.j] & color_bit(k.c3))) return false;
        return nextbad_[k.c2 - 1][k.i] > k.j;
    }

    const BipartiteGraph& g_;
    const CaterpillarIndex& idx_;
    int n_;
    std::vector<std::uint8_t> bb_mask_;       // pos-1 -> backbone list mask
    std::vector<std::uint8_t> xmask_, ymask_; // per vertex index
    std::vector<std::uint8_t> effx_;          // xmask_ minus singleton-row vetoes
    std::vector<std::vector<int>> ypos_bb_;   // yi -> sorted backbone positions
    std::vector<std::vector<int>> ypos_leaf_; // yi -> sorted leaf anchor positions
    std::vector<int> nextbad_[3];
};

}  // namespace

bool validate_key(const SubproblemKey& key, int n) {
    if (n < 1 || key.i < 1 || key.j < key.i || key.j > n) return false;
    if (key.c2 < 1 || key.c2 > 3) return false;
    if (key.i == 1 ? key.c1 != 0 : (key.c1 < 1 || key.c1 > 3 || key.c1 == key.c2))
        return false;
    if (key.j == n ? key.c3 != 0 : (key.c3 < 1 || key.c3 > 3 || key.c3 == key.c2))
        return false;
    return true;
}

std::vector<SubproblemKey> enumerate_keys(int n) {
    std::vector<SubproblemKey> out;
    if (n < 1) return out;
    out.reserve(static_cast<std::size_t>(3) + 12 * (n - 1) + 6 * (n - 1) * (n - 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int c1lo = i == 1 ? 0 : 1, c1hi = i == 1 ? 0 : 3;
            const int c3lo = j == n ? 0 : 1, c3hi = j == n ? 0 : 3;
            for (int c1 = c1lo; c1 <= c1hi; ++c1)
                for (int c2 = 1; c2 <= 3; ++c2) {
                    if (c2 == c1) continue;
                    for (int c3 = c3lo; c3 <= c3hi; ++c3) {
                        if (c3 == c2) continue;
                        out.push_back({i, j, c1, c2, c3});
                    }
                }
        }
    return out;
}

BipartiteGraph subproblem_graph(const BipartiteGraph& g, const Caterpillar& t,
                                const SubproblemKey& key) {
    CaterpillarIndex idx(g, t);
    const int n = idx.length();
    if (!validate_key(key, n)) throw std::invalid_argument("bad subproblem key");
    const int i = key.i, j = key.j;

    std::vector<std::string> xs;
    std::vector<char> in_x(g.x_count(), 0);
    auto take_x = [&](int xi) {
        in_x[xi] = 1;
        xs.push_back(g.x_id(xi));
    };
    for (int p = std::max(1, i - 1); p <= std::min(n, j + 1); ++p)
        take_x(idx.backbone_at(p));
    for (int p = i; p <= j; ++p)
        for (int xi : idx.leaves_at(p)) take_x(xi);

    std::vector<std::string> ys;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int yi = 0; yi < g.y_count(); ++yi) {
        // a member must meet the segment zone itself, not just a boundary vertex
        bool member = false;
        for (int xi : g.y_neighbors(yi)) {
            const int p = idx.position(xi);
            if (p >= i && p <= j) {
                member = true;
                break;
            }
        }
        if (!member) continue;
        ys.push_back(g.y_id(yi));
        for (int xi : g.y_neighbors(yi))
            if (in_x[xi]) edges.emplace_back(g.x_id(xi), g.y_id(yi));
    }
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

SubproblemResult solve_subproblem(const BipartiteGraph& g, const Caterpillar& t,
                                  const ListAssignment& l, const SubproblemKey& key) {
    validate_lists_cover(g, l);
    CaterpillarIndex idx(g, t);
    SegmentWorkspace ws(g, idx, l);
    return ws.solve(key, true);
}

SubproblemDag::SubproblemDag(std::vector<SubproblemKey> keys, int n)
    : n_(n), keys_(std::move(keys)) {
    if (n < 1) throw std::invalid_argument("subproblem dag needs a nonempty backbone");
    id_table_.assign(static_cast<std::size_t>(n) * n * 48, -1);
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t v = 0; v < keys_.size(); ++v) {
        const SubproblemKey& k = keys_[v];
        if (!validate_key(k, n)) throw std::invalid_argument("malformed dag key");
        const std::size_t s = slot(k.i, k.j, k.c1, k.c2, k.c3);
        if (!first && s <= prev) throw std::invalid_argument("dag keys out of canonical order");
        first = false;
        prev = s;
        id_table_[s] = static_cast<int>(v);
    }
}

std::size_t SubproblemDag::slot(int i, int j, int c1, int c2, int c3) const {
    return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * 48 + pattern_slot(c1, c2, c3);
}

int SubproblemDag::id_of(int i, int j, int c1, int c2, int c3) const {
    if (!validate_key({i, j, c1, c2, c3}, n_)) return -1;
    return id_table_[slot(i, j, c1, c2, c3)];
}

std::vector<std::pair<int, int>> SubproblemDag::arcs() const {
    std::vector<std::pair<int, int>> out;
    const int m = static_cast<int>(keys_.size());
    for (int v = 0; v < m; ++v)
        if (source_arc(v)) out.emplace_back(kSource, v);
    for (int v = 0; v < m; ++v)
        for_each_successor(v, [&](int w) { out.emplace_back(v, w); });
    for (int v = 0; v < m; ++v)
        if (sink_arc(v)) out.emplace_back(v, kSink);
    return out;
}

SubproblemDag build_subproblem_dag(std::vector<SubproblemKey> valid_keys, int n) {
    return SubproblemDag(std::move(valid_keys), n);
}

std::optional<std::vector<SubproblemKey>> find_st_path(const SubproblemDag& h) {
    const int m = static_cast<int>(h.keys().size());
    std::vector<char> seen(m, 0);
    std::vector<int> parent(m, -1);
    std::vector<int> queue;
    queue.reserve(m);
    for (int v = 0; v < m; ++v)
        if (h.source_arc(v)) {
            seen[v] = 1;
            queue.push_back(v);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (h.sink_arc(v)) {
            std::vector<SubproblemKey> path;
            for (int u = v; u >= 0; u = parent[u]) path.push_back(h.keys()[u]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        h.for_each_successor(v, [&](int w) {
            if (seen[w]) return;
            seen[w] = 1;
            parent[w] = v;
            queue.push_back(w);
        });
    }
    return std::nullopt;
}

Coloring combine(const BipartiteGraph& g, const ListAssignment& l,
                 const std::vector<SubproblemResult>& parts) {
    Coloring out;
    for (const SubproblemResult& r : parts) {
        if (!r.valid) throw InternalError("combine fed an unsatisfiable part");
        for (const auto& [id, c] : r.partial.colors) {
            auto [it, fresh] = out.colors.emplace(id, c);
            if (!fresh && it->second != c)
                throw InternalError("combine: parts disagree on " + id);
        }
    }
    // degree-0 Y-vertices belong to no segment
    for (int yi = 0; yi < g.y_count(); ++yi) {
        if (!g.y_neighbors(yi).empty()) continue;
        const std::string& id = g.y_id(yi);
        if (out.colors.count(id)) continue;
        if (!l.has(id)) throw InputError("no list for isolated vertex " + id);
        const ColorSet s = l.at(id);
        if (s.empty()) throw InputError("empty list for isolated vertex " + id);
        out.colors[id] = s.smallest();
    }
    return out;
}

std::optional<Coloring> list3color(const BipartiteGraph& g, const ListAssignment& l,
                                   const std::optional<Caterpillar>& t) {
    validate_lists_cover(g, l);
    Caterpillar rep;
    if (t) {
        const RepresentationVerdict v = verify_caterpillar_representation(g, *t);
        if (!v.accepted)
            throw UnsupportedInstance("caterpillar is not a valid representation (vertex " +
                                      v.witness_y + " has a disconnected neighborhood)");
        rep = *t;
    } else {
        RecognitionResult r = recognize(g);
        if (!r.caterpillar)
            throw UnsupportedInstance(std::string("graph is not caterpillar-convex (") +
                                      to_string(r.reason) + ")");
        rep = std::move(*r.caterpillar);
    }
    for (int xi = 0; xi < g.x_count(); ++xi)
        if (l.at(g.x_id(xi)).empty()) return std::nullopt;
    for (int yi = 0; yi < g.y_count(); ++yi)
        if (l.at(g.y_id(yi)).empty()) return std::nullopt;

    const CaterpillarIndex idx(g, rep);
    const int n = idx.length();
    Coloring out;
    if (n == 0) {
        // no X side at all: every Y-vertex is isolated
        for (int yi = 0; yi < g.y_count(); ++yi)
            out.colors[g.y_id(yi)] = l.at(g.y_id(yi)).smallest();
    } else {
        SegmentWorkspace ws(g, idx, l);
        const std::vector<std::uint64_t> table = ws.validity_table();
        std::vector<SubproblemKey> valid;
        for (const SubproblemKey& k : enumerate_keys(n)) {
            const std::uint64_t bits = table[static_cast<std::size_t>(k.i - 1) * n + (k.j - 1)];
            if (bits >> pattern_slot(k.c1, k.c2, k.c3) & 1) valid.push_back(k);
        }
        SubproblemDag dag(std::move(valid), n);
        const auto path = find_st_path(dag);
        if (!path) return std::nullopt;
        std::vector<SubproblemResult> parts;
        parts.reserve(path->size());
        for (const SubproblemKey& k : *path) {
            SubproblemResult r = ws.solve(k, true);
            if (!r.valid) throw InternalError("satisfiable segment failed its re-solve");
            parts.push_back(std::move(r));
        }
        out = combine(g, l, parts);
    }
    ColoringVerdict vd;
    try {
        vd = verify_coloring(g, l, out);
    } catch (const InputError& e) {
        throw InternalError(std::string("combined coloring is malformed: ") + e.what());
    }
    if (!vd.accepted) throw InternalError("combined coloring failed verification");
    return out;
}

}  // namespace catcol
