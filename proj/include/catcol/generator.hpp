#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "catcol/graph.hpp"

namespace catcol {

enum class ListMode { full, random_nonempty, random_allow_empty };

const char* to_string(ListMode m);
std::optional<ListMode> list_mode_from_string(const std::string& s);

// Everything a reproducible instance draw depends on.  Identical specs give
// byte-identical serialized instances.
struct GenSpec {
    int backbone_len = 1;
    double leaf_rate = 0.0;  // expected leaves per backbone vertex
    int y_count = 0;
    ListMode list_mode = ListMode::full;
    bool comb_mode = false;  // exactly one leaf per backbone vertex, no draw
    std::uint64_t seed = 0;

    bool operator==(const GenSpec&) const = default;
};

// All randomness below runs on mt19937_64 with fixed, hand-pinned draw
// procedures (rejection sampling for bounded integers, 53-bit mantissa for
// unit doubles, Knuth's product method for Poisson counts), so outputs are
// reproducible anywhere this generator algorithm is reimplemented.

// Backbone x1..xn; leaf counts per backbone vertex are Poisson(leaf_rate)
// draws in position order (exactly 1 each under comb_mode, with no draw),
// and leaves continue the xK numbering.  Throws std::invalid_argument when
// backbone_len < 1.  Uses spec.seed; leaf_rate, comb_mode, backbone_len are
// the only other inputs read.
Caterpillar gen_caterpillar(const GenSpec& spec);

// y1..y{y_count}, each with a random subtree of t as its neighborhood: two
// uniform endpoints give a backbone subpath, each leaf hanging off it joins
// with probability 1/2, and with probability 1/10 the draw collapses to one
// uniform member of that subtree.  Per-y draw order: endpoints, leaf coins,
// collapse coin, collapse pick.  Output X order is backbone then leaves in
// t order; edges are emitted y-major.  Always verifier-accepted against t.
// Throws std::invalid_argument when t has an empty backbone.
BipartiteGraph gen_convex_instance(const Caterpillar& t, int y_count, std::uint64_t seed);

// Lists for every vertex, X part first, then Y, in declaration order.
// full: {1,2,3} everywhere (no draws); random_nonempty: uniform over the 7
// nonempty subsets; random_allow_empty: uniform over all 8 subsets.
ListAssignment gen_lists(const BipartiteGraph& g, ListMode mode, std::uint64_t seed);

// x1..x{nx} vs y1..y{ny}; every pair carries an edge independently with
// probability edge_prob, drawn x-major.  Throws std::invalid_argument when
// edge_prob is outside [0,1] or a count is negative.
BipartiteGraph gen_arbitrary_bipartite(int nx, int ny, double edge_prob,
                                       std::uint64_t seed);

// The packaged pipeline: caterpillar from spec.seed, Y side from seed+1,
// lists from seed+2; the instance embeds both the lists and the caterpillar.
Instance gen_instance(const GenSpec& spec);

}  // namespace catcol
