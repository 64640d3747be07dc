#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "catcol/graph.hpp"
#include "catcol/twosat.hpp"

using namespace catcol;

namespace {

ColorSet pair_set(int a, int b) {
    ColorSet s;
    s.add(a);
    s.add(b);
    return s;
}

// slow reference: try all 2^n choices
bool satisfiable_bruteforce(const std::vector<ColorSet>& lists,
                            const std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(lists.size());
    std::vector<std::vector<int>> choices;
    for (const auto& l : lists) choices.push_back(l.colors());
    for (unsigned m = 0; m < (1u << n); ++m) {
        bool ok = true;
        std::vector<int> c(n);
        for (int v = 0; v < n; ++v) c[v] = choices[v][(m >> v) & 1];
        for (auto [u, v] : edges)
            if (c[u] == c[v]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("single edge with shared pair splits the colors") {
    std::vector<ColorSet> lists{pair_set(1, 2), pair_set(1, 2)};
    auto r = two_list_color(lists, {{0, 1}});
    REQUIRE(r.has_value());
    CHECK((*r)[0] != (*r)[1]);
    CHECK(lists[0].contains((*r)[0]));
    CHECK(lists[1].contains((*r)[1]));
}

TEST_CASE("triangle on one shared pair is unsatisfiable") {
    std::vector<ColorSet> lists{pair_set(1, 2), pair_set(1, 2), pair_set(1, 2)};
    CHECK_FALSE(two_list_color(lists, {{0, 1}, {1, 2}, {0, 2}}).has_value());
}

TEST_CASE("disjoint pairs make every edge vacuous") {
    std::vector<ColorSet> lists{pair_set(1, 2), pair_set(3, 1)};
    auto r = two_list_color(lists, {{0, 1}});
    REQUIRE(r.has_value());
    // still proper even on the overlapping color
    CHECK((*r)[0] != (*r)[1]);
}

TEST_CASE("isolated vertices take the smaller color of their pair") {
    std::vector<ColorSet> lists{pair_set(2, 3), pair_set(1, 3)};
    auto r = two_list_color(lists, {});
    REQUIRE(r.has_value());
    CHECK((*r)[0] == 2);
    CHECK((*r)[1] == 1);
}

TEST_CASE("lists must have exactly two colors") {
    CHECK_THROWS_AS(two_list_color({ColorSet::single(1)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(two_list_color({ColorSet::full()}, {}), std::invalid_argument);
    CHECK_THROWS_AS(two_list_color({}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(two_list_color({pair_set(1, 2)}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("verdicts and properness match brute force on random instances") {
    std::mt19937 rng(987123);
    int sat = 0, unsat = 0;
    for (int iter = 0; iter < 20000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<ColorSet> lists;
        for (int v = 0; v < n; ++v) {
            int a = 1 + static_cast<int>(rng() % 3);
            int b = 1 + static_cast<int>(rng() % 3);
            while (b == a) b = 1 + static_cast<int>(rng() % 3);
            lists.push_back(pair_set(a, b));
        }
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        auto r = two_list_color(lists, edges);
        REQUIRE(r.has_value() == satisfiable_bruteforce(lists, edges));
        if (r) {
            ++sat;
            for (int v = 0; v < n; ++v) CHECK(lists[v].contains((*r)[v]));
            for (auto [u, v] : edges) CHECK((*r)[u] != (*r)[v]);
        } else {
            ++unsat;
        }
    }
    CHECK(sat > 1000);
    CHECK(unsat > 1000);
}

TEST_CASE("deterministic across repeated calls") {
    std::vector<ColorSet> lists{pair_set(1, 2), pair_set(2, 3), pair_set(1, 3)};
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    auto a = two_list_color(lists, edges);
    auto b = two_list_color(lists, edges);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}
