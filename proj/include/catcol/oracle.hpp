#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "catcol/graph.hpp"

namespace catcol {

// Hard limits for the exhaustive oracles.  They exist to fail loudly instead
// of silently running forever.
struct SizeBudget {
    std::uint64_t max_assignments = 14348907;  // 3^15
    int max_x = 8;
    int max_y = 8;
};

/// Exhaustive list coloring: walks the Cartesian product of the lists in
// declaration order (X part first, then Y; rightmost digit fastest) and
// returns the first proper coloring.  No pruning beyond the size guard.
// Throws BudgetExceeded when the product exceeds budget.max_assignments.
std::optional<Coloring> brute_force_list_color(const BipartiteGraph& g, const ListAssignment& l,
                                               const SizeBudget& budget = {});

// Streams every caterpillar over the given ids: every nonempty subset as
// backbone (subsets by ascending bitmask), in every order (lexicographic by
// id position), with every attachment of the remaining ids (mixed-radix,
// rightmost fastest).  Reversed backbones are both produced.  fn returning
// false stops the walk.  Empty ids yields the single empty tree.
// Throws BudgetExceeded when ids.size() > 8.
void for_each_caterpillar(const std::vector<std::string>& ids,
                          const std::function<bool(const Caterpillar&)>& fn);

// First enumerated caterpillar accepted by verify_caterpillar_representation,
// or nullopt when none exists.  Throws BudgetExceeded when |X| > budget.max_x
// or |Y| > budget.max_y (the verifier sweep scales with the Y side).
std::optional<Caterpillar> brute_force_recognize(const BipartiteGraph& g,
                                                 const SizeBudget& budget = {});

}  // namespace catcol
