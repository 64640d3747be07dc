#include "catcol/generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace catcol {

namespace {

// Bounded draws via rejection so results do not depend on a library's
// distribution internals.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("rng_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double rng_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1), 53-bit mantissa
}

bool rng_chance(std::mt19937_64& rng, double p) { return rng_unit(rng) < p; }

int rng_poisson(std::mt19937_64& rng, double mean) {
    if (mean <= 0.0) return 0;
    // Knuth: count multiplications until the product drops under e^-mean
    const double cutoff = std::exp(-mean);
    int k = 0;
    double prod = 1.0;
    for (;;) {
        prod *= rng_unit(rng);
        if (prod < cutoff) return k;
        ++k;
    }
}

std::string xname(int k) { return "x" + std::to_string(k); }
std::string yname(int k) { return "y" + std::to_string(k); }

}  // namespace

const char* to_string(ListMode m) {
    switch (m) {
        case ListMode::full: return "full";
        case ListMode::random_nonempty: return "random-nonempty";
        case ListMode::random_allow_empty: return "random-allow-empty";
    }
    return "?";
}

std::optional<ListMode> list_mode_from_string(const std::string& s) {
    if (s == "full") return ListMode::full;
    if (s == "random-nonempty") return ListMode::random_nonempty;
    if (s == "random-allow-empty") return ListMode::random_allow_empty;
    return std::nullopt;
}

Caterpillar gen_caterpillar(const GenSpec& spec) {
    if (spec.backbone_len < 1)
        throw std::invalid_argument("gen_caterpillar: backbone_len must be >= 1");
    if (spec.leaf_rate < 0.0)
        throw std::invalid_argument("gen_caterpillar: leaf_rate must be >= 0");
    std::mt19937_64 rng(spec.seed);
    Caterpillar t;
    const int n = spec.backbone_len;
    for (int p = 1; p <= n; ++p) t.backbone.push_back(xname(p));
    t.leaves.resize(n);
    int next = n + 1;
    for (int p = 0; p < n; ++p) {
        const int count = spec.comb_mode ? 1 : rng_poisson(rng, spec.leaf_rate);
        for (int k = 0; k < count; ++k) t.leaves[p].push_back(xname(next++));
    }
    return t;
}

BipartiteGraph gen_convex_instance(const Caterpillar& t, int y_count, std::uint64_t seed) {
    const int n = static_cast<int>(t.backbone.size());
    if (n < 1) throw std::invalid_argument("gen_convex_instance: empty backbone");
    if (y_count < 0) throw std::invalid_argument("gen_convex_instance: negative y_count");
    std::mt19937_64 rng(seed);

    std::vector<std::string> xs = t.backbone;
    for (const auto& ls : t.leaves) xs.insert(xs.end(), ls.begin(), ls.end());
    std::vector<std::string> ys;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<const std::string*> members;
    for (int yi = 1; yi <= y_count; ++yi) {
        ys.push_back(yname(yi));
        const int a = static_cast<int>(rng_below(rng, n));
        const int b = static_cast<int>(rng_below(rng, n));
        const int lo = std::min(a, b), hi = std::max(a, b);
        members.clear();
        for (int p = lo; p <= hi; ++p) members.push_back(&t.backbone[p]);
        for (int p = lo; p <= hi; ++p)
            for (const std::string& leaf : t.leaves[p])
                if (rng_chance(rng, 0.5)) members.push_back(&leaf);
        if (rng_chance(rng, 0.1)) {
            const std::string* pick = members[rng_below(rng, members.size())];
            edges.emplace_back(*pick, ys.back());
        } else {
            for (const std::string* m : members) edges.emplace_back(*m, ys.back());
        }
    }
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

ListAssignment gen_lists(const BipartiteGraph& g, ListMode mode, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ListAssignment l;
    auto draw = [&]() -> ColorSet {
        switch (mode) {
            case ListMode::full: return ColorSet::full();
            case ListMode::random_nonempty:
                return ColorSet::from_mask(static_cast<std::uint8_t>(1 + rng_below(rng, 7)));
            case ListMode::random_allow_empty:
                return ColorSet::from_mask(static_cast<std::uint8_t>(rng_below(rng, 8)));
        }
        return ColorSet::full();
    };
    for (int xi = 0; xi < g.x_count(); ++xi) l.lists[g.x_id(xi)] = draw();
    for (int yi = 0; yi < g.y_count(); ++yi) l.lists[g.y_id(yi)] = draw();
    return l;
}

BipartiteGraph gen_arbitrary_bipartite(int nx, int ny, double edge_prob,
                                       std::uint64_t seed) {
    if (nx < 0 || ny < 0)
        throw std::invalid_argument("gen_arbitrary_bipartite: negative part size");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("gen_arbitrary_bipartite: edge_prob outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= nx; ++i) xs.push_back(xname(i));
    for (int i = 1; i <= ny; ++i) ys.push_back(yname(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (rng_chance(rng, edge_prob)) edges.emplace_back(xs[i], ys[j]);
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

Instance gen_instance(const GenSpec& spec) {
    Instance inst;
    Caterpillar t = gen_caterpillar(spec);
    inst.graph = gen_convex_instance(t, spec.y_count, spec.seed + 1);
    inst.lists = gen_lists(inst.graph, spec.list_mode, spec.seed + 2);
    inst.caterpillar = std::move(t);
    return inst;
}

}  // namespace catcol
