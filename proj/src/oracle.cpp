#include "catcol/oracle.hpp"

#include <algorithm>
#include <string>

#include "catcol/errors.hpp"

namespace catcol {

std::optional<Coloring> brute_force_list_color(const BipartiteGraph& g, const ListAssignment& l,
                                               const SizeBudget& budget) {
    validate_lists_cover(g, l);
    int nx = g.x_count(), ny = g.y_count(), n = nx + ny;
    std::vector<std::vector<int>> choices(n);
    for (int i = 0; i < nx; ++i) choices[i] = l.at(g.x_id(i)).colors();
    for (int i = 0; i < ny; ++i) choices[nx + i] = l.at(g.y_id(i)).colors();

    for (const auto& c : choices)
        if (c.empty()) return std::nullopt;  // true product is zero: nothing to enumerate
    std::uint64_t product = 1;
    for (const auto& c : choices) {
        auto s = static_cast<std::uint64_t>(c.size());
        if (product > budget.max_assignments / s)
            throw BudgetExceeded("brute_force_list_color: assignment count exceeds budget of " +
                                 std::to_string(budget.max_assignments));
        product *= s;
    }

    std::vector<int> digit(n, 0);
    std::vector<int> color(n);
    while (true) {
        for (int i = 0; i < n; ++i) color[i] = choices[i][digit[i]];
        bool proper = true;
        for (const auto& [xi, yi] : g.edges()) {
            if (color[xi] == color[nx + yi]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            Coloring out;
            for (int i = 0; i < nx; ++i) out.colors[g.x_id(i)] = color[i];
            for (int i = 0; i < ny; ++i) out.colors[g.y_id(i)] = color[nx + i];
            return out;
        }
        int pos = n - 1;
        while (pos >= 0 && digit[pos] + 1 == static_cast<int>(choices[pos].size())) {
            digit[pos] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++digit[pos];
    }
}

void for_each_caterpillar(const std::vector<std::string>& ids,
                          const std::function<bool(const Caterpillar&)>& fn) {
    int n = static_cast<int>(ids.size());
    if (n > 8) throw BudgetExceeded("for_each_caterpillar: more than 8 vertices");
    if (n == 0) {
        fn(Caterpillar{});
        return;
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members, rest;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1u ? members : rest).push_back(i);
        int k = static_cast<int>(members.size());
        std::vector<int> perm = members;  // ascending start for lexicographic walk
        do {
            std::vector<int> digit(rest.size(), 0);
            while (true) {
                Caterpillar t;
                t.backbone.reserve(k);
                for (int i : perm) t.backbone.push_back(ids[i]);
                t.leaves.assign(k, {});
                for (size_t r = 0; r < rest.size(); ++r)
                    t.leaves[digit[r]].push_back(ids[rest[r]]);
                if (!fn(t)) return;
                int pos = static_cast<int>(rest.size()) - 1;
                while (pos >= 0 && digit[pos] + 1 == k) {
                    digit[pos] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++digit[pos];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

std::optional<Caterpillar> brute_force_recognize(const BipartiteGraph& g,
                                                 const SizeBudget& budget) {
    if (g.x_count() > budget.max_x)
        throw BudgetExceeded("brute_force_recognize: |X| exceeds budget of " +
                             std::to_string(budget.max_x));
    if (g.y_count() > budget.max_y)
        throw BudgetExceeded("brute_force_recognize: |Y| exceeds budget of " +
                             std::to_string(budget.max_y));
    std::optional<Caterpillar> found;
    for_each_caterpillar(g.x_ids(), [&](const Caterpillar& t) {
        if (verify_caterpillar_representation(g, t).accepted) {
            found = t;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace catcol
