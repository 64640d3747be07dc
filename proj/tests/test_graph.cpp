#include "doctest.h"

#include "catcol/errors.hpp"
#include "catcol/graph.hpp"
#include "support/oracles.hpp"

using namespace catcol;

namespace {

// Six backbone-or-leaf X vertices, four Y vertices whose neighborhoods are
// subtrees of the comb over {x1,x3,x5}.
BipartiteGraph comb_graph() {
    return BipartiteGraph({"x1", "x2", "x3", "x4", "x5", "x6"}, {"y1", "y2", "y3", "y4"},
                          {{"x1", "y1"},
                           {"x2", "y1"},
                           {"x3", "y1"},
                           {"x1", "y2"},
                           {"x3", "y2"},
                           {"x4", "y2"},
                           {"x1", "y3"},
                           {"x3", "y3"},
                           {"x5", "y3"},
                           {"x3", "y4"},
                           {"x5", "y4"},
                           {"x6", "y4"}});
}

Caterpillar comb_tree() { return {{"x1", "x3", "x5"}, {{"x2"}, {"x4"}, {"x6"}}}; }

ListAssignment full_lists(const BipartiteGraph& g) {
    ListAssignment l;
    for (const auto& id : g.x_ids()) l.lists[id] = ColorSet::full();
    for (const auto& id : g.y_ids()) l.lists[id] = ColorSet::full();
    return l;
}

}  // namespace

TEST_CASE("color set basics") {
    ColorSet s;
    CHECK(s.empty());
    CHECK(s.size() == 0);
    s.add(2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.size() == 1);
    CHECK(s.smallest() == 2);
    CHECK(s.largest() == 2);
    s.add(3);
    CHECK(s.smallest() == 2);
    CHECK(s.largest() == 3);
    s.remove(2);
    CHECK(s == ColorSet::single(3));

    CHECK(ColorSet::full().size() == 3);
    CHECK(ColorSet::full().mask() == 0b111);
    CHECK(ColorSet::from_mask(0b101).colors() == std::vector<int>{1, 3});
    CHECK(ColorSet::full().smallest() == 1);
    CHECK(ColorSet::full().largest() == 3);
    CHECK(ColorSet::single(1).colors() == std::vector<int>{1});
}

TEST_CASE("graph construction preserves declaration order") {
    auto g = comb_graph();
    CHECK(g.x_count() == 6);
    CHECK(g.y_count() == 4);
    CHECK(g.edge_count() == 12);
    CHECK(g.x_id(0) == "x1");
    CHECK(g.y_id(3) == "y4");
    CHECK(g.x_index("x3") == 2);
    CHECK(g.y_index("y2") == 1);
    CHECK_FALSE(g.x_index("y1").has_value());
    CHECK_FALSE(g.y_index("nope").has_value());
    CHECK(g.has_vertex("x6"));
    CHECK(g.has_vertex("y1"));
    CHECK_FALSE(g.has_vertex("z"));

    // neighbor lists follow edge declaration order
    CHECK(g.y_neighbors(0) == std::vector<int>{0, 1, 2});
    CHECK(g.y_neighbors(3) == std::vector<int>{2, 4, 5});
    CHECK(g.x_neighbors(0) == std::vector<int>{0, 1, 2});  // x1: y1, y2, y3
    CHECK(g.x_neighbors(2) == std::vector<int>{0, 1, 2, 3});
    CHECK(g.edges().front() == std::pair<int, int>{0, 0});
}

TEST_CASE("edges normalize to (x, y) regardless of orientation") {
    BipartiteGraph g({"a"}, {"u"}, {{"u", "a"}});
    CHECK(g.edge_count() == 1);
    CHECK(g.edges().front() == std::pair<int, int>{0, 0});
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(BipartiteGraph({"a", "a"}, {"u"}, {}), InputError);
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"a"}, {}), InputError);
    CHECK_THROWS_AS(BipartiteGraph({"a", "b"}, {"u"}, {{"a", "b"}}), InputError);
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"u"}, {{"a", "w"}}), InputError);
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"u"}, {{"a", "u"}, {"a", "u"}}), InputError);
    // duplicate after normalization
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"u"}, {{"a", "u"}, {"u", "a"}}), InputError);
}

TEST_CASE("caterpillar index positions and anchors") {
    auto g = comb_graph();
    CaterpillarIndex idx(g, comb_tree());
    CHECK(idx.length() == 3);
    CHECK(g.x_id(idx.backbone_at(1)) == "x1");
    CHECK(g.x_id(idx.backbone_at(3)) == "x5");
    CHECK(idx.leaves_at(2) == std::vector<int>{3});  // x4
    CHECK(idx.is_backbone(*g.x_index("x3")));
    CHECK_FALSE(idx.is_backbone(*g.x_index("x4")));
    CHECK(idx.position(*g.x_index("x5")) == 3);
    CHECK(idx.position(*g.x_index("x6")) == 3);  // leaf reports its anchor's position
}

TEST_CASE("caterpillar index rejects trees that do not cover X exactly") {
    auto g = comb_graph();
    CHECK_THROWS_AS(CaterpillarIndex(g, {{"x1", "x3"}, {{"x2"}, {"x4"}}}), InputError);
    CHECK_THROWS_AS(CaterpillarIndex(g, {{"x1", "x3", "x9"}, {{"x2"}, {"x4"}, {"x6"}}}),
                    InputError);
    CHECK_THROWS_AS(CaterpillarIndex(g, {{"x1", "x3", "x5"}, {{"x2"}, {"x4"}, {"x2"}}}),
                    InputError);
    CHECK_THROWS_AS(CaterpillarIndex(g, {{"x1", "x3", "x5"}, {{"x2"}, {"x4"}}}), InputError);
    CHECK_THROWS_AS(CaterpillarIndex(g, {{"x1", "x3", "y1"}, {{"x2"}, {"x4"}, {"x6"}}}),
                    InputError);
}

TEST_CASE("list cover validation") {
    auto g = comb_graph();
    auto l = full_lists(g);
    CHECK_NOTHROW(validate_lists_cover(g, l));
    auto missing = l;
    missing.lists.erase("y2");
    CHECK_THROWS_AS(validate_lists_cover(g, missing), InputError);
    auto extra = l;
    extra.lists["ghost"] = ColorSet::full();
    CHECK_THROWS_AS(validate_lists_cover(g, extra), InputError);
}

TEST_CASE("representation verifier accepts the comb") {
    auto g = comb_graph();
    auto v = verify_caterpillar_representation(g, comb_tree());
    CHECK(v.accepted);
    CHECK(v.witness_y.empty());
    CHECK(testoracle::tree_rep_accepts(g, comb_tree()));
}

TEST_CASE("representation verifier rejects the bare path with the first bad Y") {
    auto g = comb_graph();
    Caterpillar path{{"x1", "x2", "x3", "x4", "x5", "x6"}, {{}, {}, {}, {}, {}, {}}};
    auto v = verify_caterpillar_representation(g, path);
    CHECK_FALSE(v.accepted);
    // y2 = {x1,x3,x4} sits at positions {1,3,4}; y3 fails too but comes later.
    CHECK(v.witness_y == "y2");
    CHECK_FALSE(testoracle::tree_rep_accepts(g, path));
}

TEST_CASE("representation verifier rejects a leaf hanging outside the run") {
    auto g = comb_graph();
    Caterpillar t{{"x1", "x3"}, {{"x2", "x5", "x6"}, {"x4"}}};
    auto v = verify_caterpillar_representation(g, t);
    CHECK_FALSE(v.accepted);
    CHECK(v.witness_y == "y4");  // {x3,x5,x6}: x5 and x6 hang off x1
    CHECK_FALSE(testoracle::tree_rep_accepts(g, t));
}

TEST_CASE("representation verifier rejects two leaves with no backbone member") {
    BipartiteGraph g({"a", "b", "c"}, {"y"}, {{"b", "y"}, {"c", "y"}});
    Caterpillar t{{"a"}, {{"b", "c"}}};
    auto v = verify_caterpillar_representation(g, t);
    CHECK_FALSE(v.accepted);
    CHECK(v.witness_y == "y");
    CHECK_FALSE(testoracle::tree_rep_accepts(g, t));
}

TEST_CASE("representation verifier passes tiny neighborhoods trivially") {
    BipartiteGraph g({"a", "b"}, {"y1", "y2"}, {{"b", "y2"}});
    Caterpillar t{{"a"}, {{"b"}}};
    CHECK(verify_caterpillar_representation(g, t).accepted);  // |N(y1)|=0, |N(y2)|=1
    CHECK(testoracle::tree_rep_accepts(g, t));
}

TEST_CASE("coloring verifier accepts a proper list coloring") {
    auto g = comb_graph();
    auto l = full_lists(g);
    Coloring c;
    c.colors = {{"x1", 1}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 2},
                {"y1", 3}, {"y2", 3}, {"y3", 3}, {"y4", 3}};
    auto v = verify_coloring(g, l, c);
    CHECK(v.accepted);
    CHECK_FALSE(v.bad_vertex.has_value());
    CHECK_FALSE(v.bad_edge.has_value());
}

TEST_CASE("coloring verifier flags a color outside its list") {
    auto g = comb_graph();
    auto l = full_lists(g);
    l.lists["x4"] = ColorSet::single(1);
    Coloring c;
    c.colors = {{"x1", 1}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 2},
                {"y1", 3}, {"y2", 3}, {"y3", 3}, {"y4", 3}};
    auto v = verify_coloring(g, l, c);
    CHECK_FALSE(v.accepted);
    CHECK(v.bad_vertex == "x4");
}

TEST_CASE("coloring verifier flags a monochromatic edge") {
    auto g = comb_graph();
    auto l = full_lists(g);
    Coloring c;
    c.colors = {{"x1", 3}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 2},
                {"y1", 3}, {"y2", 3}, {"y3", 3}, {"y4", 3}};
    auto v = verify_coloring(g, l, c);
    CHECK_FALSE(v.accepted);
    REQUIRE(v.bad_edge.has_value());
    CHECK(v.bad_edge->first == "x1");
    CHECK(v.bad_edge->second == "y1");  // first offending edge in declaration order
}

TEST_CASE("coloring verifier treats missing or unknown entries as malformed") {
    auto g = comb_graph();
    auto l = full_lists(g);
    Coloring partial;
    partial.colors = {{"x1", 1}};
    CHECK_THROWS_AS(verify_coloring(g, l, partial), InputError);
    Coloring alien;
    alien.colors = {{"x1", 1}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 2},
                    {"y1", 3}, {"y2", 3}, {"y3", 3}, {"y4", 3}, {"zz", 1}};
    CHECK_THROWS_AS(verify_coloring(g, l, alien), InputError);
}
