#include "catcol/twosat.hpp"

#include <algorithm>
#include <stdexcept>

namespace catcol {

namespace {

// Iterative Tarjan; component ids come out in reverse topological order of
// the condensation (a component can only reach components with smaller ids).
class Scc {
public:
    explicit Scc(const std::vector<std::vector<int>>& adj)
        : adj_(adj), idx_(adj.size(), -1), low_(adj.size(), 0), comp_(adj.size(), -1),
          on_(adj.size(), 0) {
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (idx_[v] < 0) run(v);
    }

    int comp(int v) const { return comp_[v]; }

private:
    void run(int start) {
        frames_.push_back({start, 0});
        open(start);
        while (!frames_.empty()) {
            auto& [v, next] = frames_.back();
            if (next < static_cast<int>(adj_[v].size())) {
                int w = adj_[v][next++];
                if (idx_[w] < 0) {
                    frames_.push_back({w, 0});
                    open(w);
                } else if (on_[w]) {
                    low_[v] = std::min(low_[v], idx_[w]);
                }
                continue;
            }
            int done = v;
            frames_.pop_back();
            if (!frames_.empty())
                low_[frames_.back().first] = std::min(low_[frames_.back().first], low_[done]);
            if (low_[done] == idx_[done]) {
                while (true) {
                    int w = stack_.back();
                    stack_.pop_back();
                    on_[w] = 0;
                    comp_[w] = comps_;
                    if (w == done) break;
                }
                ++comps_;
            }
        }
    }

    void open(int v) {
        idx_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_[v] = 1;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> idx_, low_, comp_;
    std::vector<char> on_;
    std::vector<int> stack_;
    std::vector<std::pair<int, int>> frames_;
    int counter_ = 0, comps_ = 0;
};

}  // namespace

std::optional<std::vector<int>> two_list_color(const std::vector<ColorSet>& lists,
                                               const std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(lists.size());
    for (const auto& l : lists)
        if (l.size() != 2) throw std::invalid_argument("two_list_color: list must have two colors");

    // Variable i is true when vertex i takes the smaller color of its list.
    // Literal encoding: 2i = "true", 2i+1 = "false".
    auto lit = [](int v, bool val) { return 2 * v + (val ? 0 : 1); };
    std::vector<std::vector<int>> imp(2 * static_cast<size_t>(n));
    auto add_clause = [&](int a, int b) {  // a or b
        imp[a ^ 1].push_back(b);
        imp[b ^ 1].push_back(a);
    };

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("two_list_color: edge endpoint out of range");
        for (int c = 1; c <= 3; ++c) {
            if (!lists[u].contains(c) || !lists[v].contains(c)) continue;
            // not (u=c and v=c)
            int lu = lit(u, c == lists[u].smallest());
            int lv = lit(v, c == lists[v].smallest());
            add_clause(lu ^ 1, lv ^ 1);
        }
    }

    Scc scc(imp);
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) {
        int ct = scc.comp(lit(v, true));
        int cf = scc.comp(lit(v, false));
        if (ct == cf) return std::nullopt;
        // Pick the literal whose component sits later in topological order,
        // i.e. the smaller Tarjan id.
        out[v] = (ct < cf) ? lists[v].smallest() : lists[v].largest();
    }
    return out;
}

}  // namespace catcol
