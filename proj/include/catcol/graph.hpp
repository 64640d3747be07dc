#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catcol {

// Subset of the color palette {1,2,3}, stored as a bit mask (bit c-1 <-> color c).
class ColorSet {
public:
    ColorSet() = default;

    static ColorSet full() { return ColorSet(0b111); }
    static ColorSet single(int c) {
        ColorSet s;
        s.add(c);
        return s;
    }
    static ColorSet from_mask(std::uint8_t m) { return ColorSet(m); }

    void add(int c) { mask_ |= bit(c); }
    void remove(int c) { mask_ &= static_cast<std::uint8_t>(~bit(c)); }
    bool contains(int c) const { return (mask_ & bit(c)) != 0; }
    bool empty() const { return mask_ == 0; }
    int size() const { return __builtin_popcount(mask_); }
    std::uint8_t mask() const { return mask_; }

    // pre: not empty
    int smallest() const { return __builtin_ctz(mask_) + 1; }
    int largest() const { return 32 - __builtin_clz(static_cast<unsigned>(mask_)); }

    std::vector<int> colors() const;  // ascending

    bool operator==(const ColorSet&) const = default;

private:
    explicit ColorSet(std::uint8_t m) : mask_(m) {}
    static std::uint8_t bit(int c) { return static_cast<std::uint8_t>(1u << (c - 1)); }

    std::uint8_t mask_ = 0;
};

// Bipartite graph with named vertices in two fixed parts X and Y.  Vertex and
// edge declaration order is preserved; every deterministic choice downstream
// leans on it.  Immutable once constructed.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Validates: ids unique across both parts, edge endpoints known and in
    // opposite parts, no duplicate edges.  Edges may be given in either
    // orientation and are normalized to (x, y).  Throws InputError.
    BipartiteGraph(std::vector<std::string> x_ids, std::vector<std::string> y_ids,
                   const std::vector<std::pair<std::string, std::string>>& edges);

    int x_count() const { return static_cast<int>(x_ids_.size()); }
    int y_count() const { return static_cast<int>(y_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& x_id(int xi) const { return x_ids_[xi]; }
    const std::string& y_id(int yi) const { return y_ids_[yi]; }
    const std::vector<std::string>& x_ids() const { return x_ids_; }
    const std::vector<std::string>& y_ids() const { return y_ids_; }

    std::optional<int> x_index(const std::string& id) const;
    std::optional<int> y_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const;

    // Neighbor lists hold indices into the opposite part, in edge order.
    const std::vector<int>& x_neighbors(int xi) const { return adj_x_[xi]; }
    const std::vector<int>& y_neighbors(int yi) const { return adj_y_[yi]; }

    // (x index, y index) pairs in declaration order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::vector<std::string> x_ids_;
    std::vector<std::string> y_ids_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_x_;
    std::vector<std::vector<int>> adj_y_;
    std::unordered_map<std::string, int> x_index_;
    std::unordered_map<std::string, int> y_index_;
};

// Caterpillar tree over the X part: an ordered backbone path plus, per
// backbone vertex, an ordered set of attached leaves.  leaves[p] belongs to
// backbone[p]; a backbone vertex without leaves has an empty entry.
struct Caterpillar {
    std::vector<std::string> backbone;
    std::vector<std::vector<std::string>> leaves;

    bool operator==(const Caterpillar&) const = default;
};

// Index structure binding a caterpillar to a graph's X part.  Construction
// checks that backbone plus leaves use only X ids and cover X exactly once.
// Positions are 1-based along the backbone.
class CaterpillarIndex {
public:
    CaterpillarIndex(const BipartiteGraph& g, const Caterpillar& t);

    int length() const { return static_cast<int>(backbone_.size()); }  // n
    int backbone_at(int pos) const { return backbone_[pos - 1]; }      // x index
    const std::vector<int>& leaves_at(int pos) const { return leaves_[pos - 1]; }
    bool is_backbone(int x) const { return is_backbone_[x]; }
    // Backbone position of x itself, or of its anchor if x is a leaf.
    int position(int x) const { return position_[x]; }

private:
    std::vector<int> backbone_;              // pos-1 -> x index
    std::vector<std::vector<int>> leaves_;   // pos-1 -> x indices
    std::vector<char> is_backbone_;          // by x index
    std::vector<int> position_;              // by x index
};

// Color lists, one entry per vertex id.
struct ListAssignment {
    std::unordered_map<std::string, ColorSet> lists;

    bool has(const std::string& id) const { return lists.count(id) != 0; }
    ColorSet at(const std::string& id) const { return lists.at(id); }

    bool operator==(const ListAssignment&) const = default;
};

// Total color assignment, one entry per vertex id.
struct Coloring {
    std::unordered_map<std::string, int> colors;

    bool operator==(const Coloring&) const = default;
};

// A problem instance: graph, optional lists, optional caterpillar witness.
struct Instance {
    BipartiteGraph graph;
    std::optional<ListAssignment> lists;
    std::optional<Caterpillar> caterpillar;

    bool operator==(const Instance&) const = default;
};

// Throws InputError unless every vertex of g has a list entry and no entry
// names an unknown vertex.
void validate_lists_cover(const BipartiteGraph& g, const ListAssignment& l);

struct RepresentationVerdict {
    bool accepted = false;
    std::string witness_y;  // first Y-vertex whose neighborhood is not connected
};

// Checks that every Y-neighborhood induces a connected subgraph (subtree) of
// the caterpillar.  Throws InputError if t does not cover X exactly.
RepresentationVerdict verify_caterpillar_representation(const BipartiteGraph& g,
                                                        const Caterpillar& t);

struct ColoringVerdict {
    bool accepted = false;
    std::optional<std::string> bad_vertex;                       // color not in its list
    std::optional<std::pair<std::string, std::string>> bad_edge; // monochromatic edge
};

// Throws InputError if some vertex has no color entry or an entry names an
// unknown vertex (the candidate is malformed, not merely wrong); rejects with
// a witness when a color falls outside its list or an edge is monochromatic.
ColoringVerdict verify_coloring(const BipartiteGraph& g, const ListAssignment& l,
                                const Coloring& c);

}  // namespace catcol
