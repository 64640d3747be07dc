#include "catcol/pqtree.hpp"

#include <algorithm>
#include <deque>

#include "catcol/errors.hpp"

namespace catcol {

namespace {

// PQ-tree over a ground set.  P-node children may be permuted freely, Q-node
// children only reversed as a block.  Each reduce() restricts the represented
// orderings to those keeping one set consecutive.
//
// This implementation relabels the whole tree per reduction instead of the
// classic bottom-up bubble pass, which keeps the template logic small.  After
// a failed reduce the tree is unusable; callers bail out immediately.
class PQTree {
public:
    explicit PQTree(int m) {
        leaf_.reserve(m);
        for (int e = 0; e < m; ++e) leaf_.push_back(make(Kind::Leaf, e));
        if (m == 1) {
            root_ = leaf_[0];
        } else {
            root_ = make(Kind::P);
            root_->ch.assign(leaf_.begin(), leaf_.end());
        }
        in_set_.assign(m, 0);
    }

    bool reduce(const std::vector<int>& set) {
        ++epoch_;
        for (int e : set) in_set_[e] = epoch_;
        relabel(root_);
        int k = static_cast<int>(set.size());
        if (root_->full != k) throw InternalError("pqtree: marked leaf count mismatch");

        // Descend to the lowest node containing all marked leaves.
        path_.clear();
        Node* v = root_;
        while (v->full < v->size) {
            Node* next = nullptr;
            int idx = -1;
            for (int i = 0; i < static_cast<int>(v->ch.size()); ++i) {
                if (v->ch[i]->full == k) {
                    next = v->ch[i];
                    idx = i;
                    break;
                }
            }
            if (!next) break;
            path_.push_back({v, idx});
            v = next;
        }
        if (v->full == v->size) return true;  // the set is exactly this subtree

        Node* rep = transform_root(v);
        if (!rep) return false;
        if (rep != v) {
            if (path_.empty())
                root_ = rep;
            else
                path_.back().first->ch[path_.back().second] = rep;
        }
        return true;
    }

    std::vector<int> frontier() const {
        std::vector<int> out;
        collect(root_, out);
        return out;
    }

private:
    enum class Kind { Leaf, P, Q };

    struct Node {
        Kind kind;
        int elem = -1;
        std::vector<Node*> ch;
        int size = 0;  // leaves below
        int full = 0;  // marked leaves below, per current epoch
    };

    enum class Cls { E, M, F };  // empty / partial / full

    Node* make(Kind k, int elem = -1) {
        pool_.push_back(Node{k, elem, {}, 0, 0});
        return &pool_.back();
    }

    void relabel(Node* v) {
        if (v->kind == Kind::Leaf) {
            v->size = 1;
            v->full = (in_set_[v->elem] == epoch_) ? 1 : 0;
            return;
        }
        v->size = v->full = 0;
        for (Node* c : v->ch) {
            relabel(c);
            v->size += c->size;
            v->full += c->full;
        }
    }

    static Cls cls(const Node* c) {
        if (c->full == 0) return Cls::E;
        if (c->full == c->size) return Cls::F;
        return Cls::M;
    }

    // Groups nodes under a fresh P-node; a single node stays itself.
    Node* group(const std::vector<Node*>& nodes) {
        if (nodes.size() == 1) return nodes[0];
        Node* p = make(Kind::P);
        p->ch = nodes;
        return p;
    }

    // Restructures a partial non-root node into a Q whose frontier reads
    // empties-then-fulls left to right.  Returns nullptr when impossible.
    Node* transform_nonroot(Node* v) {
        if (v->kind == Kind::Leaf) throw InternalError("pqtree: partial leaf");
        if (v->kind == Kind::P) {
            std::vector<Node*> e, f, m;
            for (Node* c : v->ch) {
                switch (cls(c)) {
                    case Cls::E: e.push_back(c); break;
                    case Cls::F: f.push_back(c); break;
                    case Cls::M: m.push_back(c); break;
                }
            }
            if (m.size() > 1) return nullptr;
            Node* q = make(Kind::Q);
            if (m.empty()) {
                q->ch = {group(e), group(f)};  // both nonempty: v is partial
            } else {
                Node* t = transform_nonroot(m[0]);
                if (!t) return nullptr;
                if (!e.empty()) q->ch.push_back(group(e));
                q->ch.insert(q->ch.end(), t->ch.begin(), t->ch.end());
                if (!f.empty()) q->ch.push_back(group(f));
            }
            return q;
        }
        // Q node: children must read E* M? F*, possibly after reversal.
        if (!match_one_sided(v->ch)) {
            std::reverse(v->ch.begin(), v->ch.end());
            if (!match_one_sided(v->ch)) return nullptr;
        }
        for (size_t i = 0; i < v->ch.size(); ++i) {
            if (cls(v->ch[i]) != Cls::M) continue;
            Node* t = transform_nonroot(v->ch[i]);
            if (!t) return nullptr;
            splice(v->ch, i, t->ch, false);
            break;
        }
        return v;
    }

    static bool match_one_sided(const std::vector<Node*>& ch) {
        int state = 0;  // 0 = in E run, 1 = past partial, 2 = in F run
        for (const Node* c : ch) {
            switch (cls(c)) {
                case Cls::E:
                    if (state != 0) return false;
                    break;
                case Cls::M:
                    if (state != 0) return false;
                    state = 1;
                    break;
                case Cls::F: state = 2; break;
            }
        }
        return true;
    }

    static void splice(std::vector<Node*>& ch, size_t at, const std::vector<Node*>& sub,
                       bool reversed) {
        std::vector<Node*> tmp = sub;
        if (reversed) std::reverse(tmp.begin(), tmp.end());
        ch.erase(ch.begin() + static_cast<long>(at));
        ch.insert(ch.begin() + static_cast<long>(at), tmp.begin(), tmp.end());
    }

    // Restructures the lowest node covering all marked leaves so that the
    // marked leaves can sit consecutively somewhere in its frontier.  Returns
    // the replacement node (often v itself), or nullptr when impossible.
    Node* transform_root(Node* v) {
        if (v->kind == Kind::Leaf) throw InternalError("pqtree: partial leaf at root");
        if (v->kind == Kind::P) {
            std::vector<Node*> e, f, m;
            for (Node* c : v->ch) {
                switch (cls(c)) {
                    case Cls::E: e.push_back(c); break;
                    case Cls::F: f.push_back(c); break;
                    case Cls::M: m.push_back(c); break;
                }
            }
            if (m.size() > 2) return nullptr;
            if (m.empty()) {
                if (f.size() <= 1) return v;  // already consecutive
                std::vector<Node*> ch = e;
                ch.push_back(group(f));
                if (ch.size() == 1) return ch[0];
                v->ch = std::move(ch);
                return v;
            }
            Node* left = transform_nonroot(m[0]);
            if (!left) return nullptr;
            Node* middle;
            if (m.size() == 1) {
                if (!f.empty()) left->ch.push_back(group(f));
                middle = left;
            } else {
                Node* right = transform_nonroot(m[1]);
                if (!right) return nullptr;
                if (!f.empty()) left->ch.push_back(group(f));
                left->ch.insert(left->ch.end(), right->ch.rbegin(), right->ch.rend());
                middle = left;
            }
            if (e.empty()) return middle;
            v->ch = e;
            v->ch.push_back(middle);
            return v;
        }
        // Q node: non-empty children must form one contiguous segment whose
        // interior is all full; a partial child may sit only at either end of
        // the segment.
        int r = static_cast<int>(v->ch.size());
        int lo = -1, hi = -1, partials = 0;
        for (int i = 0; i < r; ++i) {
            Cls c = cls(v->ch[i]);
            if (c == Cls::M) ++partials;
            if (c != Cls::E) {
                if (lo < 0) lo = i;
                hi = i;
            }
        }
        if (partials > 2) return nullptr;
        for (int i = lo; i <= hi; ++i) {
            Cls c = cls(v->ch[i]);
            if (c == Cls::E) return nullptr;
            if (c == Cls::M && i != lo && i != hi) return nullptr;
        }
        if (hi > lo && cls(v->ch[hi]) == Cls::M) {
            Node* t = transform_nonroot(v->ch[hi]);
            if (!t) return nullptr;
            splice(v->ch, static_cast<size_t>(hi), t->ch, true);  // fulls face the block
        }
        if (cls(v->ch[lo]) == Cls::M) {
            Node* t = transform_nonroot(v->ch[lo]);
            if (!t) return nullptr;
            splice(v->ch, static_cast<size_t>(lo), t->ch, false);
        }
        return v;
    }

    void collect(const Node* v, std::vector<int>& out) const {
        if (v->kind == Kind::Leaf) {
            out.push_back(v->elem);
            return;
        }
        for (const Node* c : v->ch) collect(c, out);
    }

    std::deque<Node> pool_;
    Node* root_ = nullptr;
    std::vector<Node*> leaf_;
    std::vector<int> in_set_;
    int epoch_ = 0;
    std::vector<std::pair<Node*, int>> path_;
};

}  // namespace

std::optional<std::vector<int>> consecutive_ones_order(int m,
                                                       const std::vector<std::vector<int>>& sets) {
    if (m == 0) {
        for (const auto& s : sets)
            if (!s.empty()) throw InternalError("consecutive_ones_order: set over empty ground");
        return std::vector<int>{};
    }
    PQTree tree(m);
    for (const auto& s : sets) {
        if (static_cast<int>(s.size()) <= 1 || static_cast<int>(s.size()) >= m) {
            if (static_cast<int>(s.size()) > m)
                throw InternalError("consecutive_ones_order: set larger than ground");
            continue;
        }
        if (!tree.reduce(s)) return std::nullopt;
    }
    return tree.frontier();
}

}  // namespace catcol
