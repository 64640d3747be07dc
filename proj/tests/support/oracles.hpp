#pragma once

// Independent cross-checks used by the tests.  Everything here is written the
// slow, obvious way on purpose: tree BFS instead of position arithmetic, full
// permutation / assignment sweeps instead of clever data structures.  When one
// of these disagrees with the library, the library is wrong.

#include <optional>
#include <string>
#include <vector>

#include "catcol/coloring.hpp"
#include "catcol/graph.hpp"

namespace catcol::testoracle {

// Builds the caterpillar as an explicit tree and BFS-checks that every N(y)
// induces a connected subgraph of it.  Neighborhoods of size <= 1 pass
// trivially.  Returns false if backbone plus leaves do not partition the X ids.
bool tree_rep_accepts(const BipartiteGraph& g, const Caterpillar& t);

// Does some order of the m columns make every row a contiguous block?
// Tries all m! orders; m <= 8.
bool c1p_exists_bruteforce(int m, const std::vector<std::vector<int>>& rows);

// Exhaustive check of one segment subproblem: backbone positions key.i..key.j
// are pinned to key.c2, the flanking backbone vertices (when present) to
// key.c1 / key.c3, and every other segment vertex sweeps its full list.
// Returns the first proper list coloring of the segment graph in odometer
// order, or nullopt.  Pins violating their own lists make it infeasible.
std::optional<Coloring> brute_force_segment(const BipartiteGraph& g, const ListAssignment& l,
                                            const Caterpillar& t, const SubproblemKey& key);

// Reversal-invariant serialization: equal strings iff the two caterpillars
// are the same tree drawing up to flipping the backbone end-for-end.
std::string caterpillar_fingerprint(const Caterpillar& t);

}  // namespace catcol::testoracle
