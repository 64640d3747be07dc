#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>

#include "catcol/generator.hpp"
#include "catcol/json_io.hpp"
#include "catcol/recognition.hpp"
#include "support/oracles.hpp"

using namespace catcol;

TEST_CASE("list mode names round trip") {
    for (auto m : {ListMode::full, ListMode::random_nonempty, ListMode::random_allow_empty})
        CHECK(list_mode_from_string(to_string(m)) == m);
    CHECK(std::string(to_string(ListMode::random_nonempty)) == "random-nonempty");
    CHECK_FALSE(list_mode_from_string("garbage").has_value());
}

TEST_CASE("caterpillar generation: naming, comb mode, and guards") {
    GenSpec spec;
    spec.backbone_len = 3;
    spec.comb_mode = true;
    auto comb = gen_caterpillar(spec);
    CHECK(comb == Caterpillar{{"x1", "x2", "x3"}, {{"x4"}, {"x5"}, {"x6"}}});
    spec.seed = 555;  // comb mode never draws, so the seed is irrelevant
    CHECK(gen_caterpillar(spec) == comb);

    GenSpec bare;
    bare.backbone_len = 4;
    CHECK(gen_caterpillar(bare) ==
          Caterpillar{{"x1", "x2", "x3", "x4"}, {{}, {}, {}, {}}});

    GenSpec hairy;
    hairy.backbone_len = 5;
    hairy.leaf_rate = 2.0;
    hairy.seed = 9;
    auto a = gen_caterpillar(hairy);
    auto b = gen_caterpillar(hairy);
    CHECK(a == b);
    CHECK(a.leaves.size() == 5);
    int total = 0;
    for (const auto& bucket : a.leaves) total += static_cast<int>(bucket.size());
    CHECK(a.backbone.size() == 5);
    // leaves continue the numbering right after the backbone
    if (total > 0) {
        bool found_x6 = false;
        for (const auto& bucket : a.leaves)
            for (const auto& id : bucket)
                if (id == "x6") found_x6 = true;
        CHECK(found_x6);
    }

    GenSpec bad;
    bad.backbone_len = 0;
    CHECK_THROWS_AS(gen_caterpillar(bad), std::invalid_argument);
    GenSpec negrate;
    negrate.backbone_len = 1;
    negrate.leaf_rate = -0.5;
    CHECK_THROWS_AS(gen_caterpillar(negrate), std::invalid_argument);
}

TEST_CASE("convex instances always pass both verifiers") {
    std::vector<Caterpillar> shapes{
        {{"x1"}, {{}}},
        {{"x1", "x2"}, {{"x3"}, {}}},
        {{"x1", "x2", "x3"}, {{"x4"}, {"x5", "x6"}, {}}},
        {{"x1", "x2", "x3", "x4", "x5"}, {{}, {"x6"}, {}, {"x7", "x8"}, {"x9"}}},
    };
    for (const auto& t : shapes) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto g = gen_convex_instance(t, 6, seed);
            CHECK(g.y_count() == 6);
            for (int yi = 0; yi < g.y_count(); ++yi)
                CHECK(g.y_neighbors(yi).size() >= 1);
            REQUIRE(verify_caterpillar_representation(g, t).accepted);
            REQUIRE(testoracle::tree_rep_accepts(g, t));
        }
    }
    // X declaration order is backbone then leaves, in tree order
    auto g = gen_convex_instance(shapes[2], 2, 1);
    CHECK(g.x_ids() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "x6"});
    CHECK(g.y_ids() == std::vector<std::string>{"y1", "y2"});

    CHECK_THROWS_AS(gen_convex_instance(Caterpillar{}, 1, 0), std::invalid_argument);
}

TEST_CASE("list generation modes") {
    auto g = gen_convex_instance({{"x1", "x2", "x3"}, {{}, {}, {}}}, 5, 3);

    auto full_a = gen_lists(g, ListMode::full, 1);
    auto full_b = gen_lists(g, ListMode::full, 999);
    CHECK(full_a == full_b);  // no draws in full mode
    for (const auto& [id, set] : full_a.lists) CHECK(set == ColorSet::full());
    CHECK(full_a.lists.size() == static_cast<std::size_t>(g.x_count() + g.y_count()));

    bool saw_partial = false;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto l = gen_lists(g, ListMode::random_nonempty, seed);
        for (const auto& [id, set] : l.lists) {
            CHECK_FALSE(set.empty());
            if (set.size() < 3) saw_partial = true;
        }
    }
    CHECK(saw_partial);

    bool saw_empty = false;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto l = gen_lists(g, ListMode::random_allow_empty, seed);
        for (const auto& [id, set] : l.lists)
            if (set.empty()) saw_empty = true;
    }
    CHECK(saw_empty);

    CHECK(gen_lists(g, ListMode::random_nonempty, 7) == gen_lists(g, ListMode::random_nonempty, 7));
}

TEST_CASE("arbitrary bipartite generation") {
    auto none = gen_arbitrary_bipartite(3, 4, 0.0, 11);
    CHECK(none.x_count() == 3);
    CHECK(none.y_count() == 4);
    CHECK(none.edge_count() == 0);
    CHECK(none.x_ids() == std::vector<std::string>{"x1", "x2", "x3"});

    auto all = gen_arbitrary_bipartite(3, 4, 1.0, 11);
    CHECK(all.edge_count() == 12);

    CHECK(gen_arbitrary_bipartite(5, 5, 0.4, 2) == gen_arbitrary_bipartite(5, 5, 0.4, 2));

    CHECK_THROWS_AS(gen_arbitrary_bipartite(-1, 4, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_arbitrary_bipartite(3, -4, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_arbitrary_bipartite(3, 4, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_arbitrary_bipartite(3, 4, -0.5, 0), std::invalid_argument);
}

TEST_CASE("packaged instances compose the stage draws with offset seeds") {
    GenSpec spec;
    spec.backbone_len = 4;
    spec.leaf_rate = 1.0;
    spec.y_count = 7;
    spec.list_mode = ListMode::random_nonempty;
    spec.seed = 31337;
    auto inst = gen_instance(spec);

    auto t = gen_caterpillar(spec);
    REQUIRE(inst.caterpillar.has_value());
    CHECK(*inst.caterpillar == t);
    CHECK(inst.graph == gen_convex_instance(t, spec.y_count, spec.seed + 1));
    REQUIRE(inst.lists.has_value());
    CHECK(*inst.lists == gen_lists(inst.graph, spec.list_mode, spec.seed + 2));
}

TEST_CASE("packaged instances are byte-identical per spec and vary across seeds") {
    GenSpec spec;
    spec.backbone_len = 5;
    spec.leaf_rate = 0.8;
    spec.y_count = 6;
    spec.list_mode = ListMode::random_allow_empty;
    std::set<std::string> distinct;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        spec.seed = seed;
        auto once = serialize_instance(gen_instance(spec));
        auto twice = serialize_instance(gen_instance(spec));
        CHECK(once == twice);
        distinct.insert(once);
    }
    CHECK(distinct.size() >= 10);
}

TEST_CASE("generated instances are recognized, comb mode included") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenSpec spec;
        spec.backbone_len = 1 + static_cast<int>(seed % 6);
        spec.leaf_rate = 0.7;
        spec.y_count = 1 + static_cast<int>(seed % 7);
        spec.seed = seed * 13;
        spec.comb_mode = (seed % 3 == 0);
        auto inst = gen_instance(spec);
        auto r = recognize(inst.graph);
        REQUIRE(r.caterpillar.has_value());
        CHECK(testoracle::tree_rep_accepts(inst.graph, *r.caterpillar));
    }
}
