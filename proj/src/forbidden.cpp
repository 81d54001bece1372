#include "gentle/forbidden.hpp"

#include <algorithm>

namespace gentle {

namespace {

bool chain_left_maximal(const BoundQuiver& bq, int first) {
    return bq.relations_before(first).empty();
}

bool chain_right_maximal(const BoundQuiver& bq, int last) {
    return bq.relations_after(last).empty();
}

void set_flags(const BoundQuiver& bq, ForbiddenPath& p) {
    if (p.is_zero_length()) {
        p.left_maximal = p.right_maximal = true;
    } else {
        p.left_maximal = chain_left_maximal(bq, p.arrows.front());
        p.right_maximal = chain_right_maximal(bq, p.arrows.back());
    }
}

std::vector<ForbiddenPath> zero_length_paths(const BoundQuiver& bq) {
    std::vector<ForbiddenPath> out;
    const Quiver& q = bq.quiver();
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (q.in_arrows(v).size() != 1 || q.out_arrows(v).size() != 1) continue;
        int a = q.in_arrows(v)[0], b = q.out_arrows(v)[0];
        if (!bq.has_relation(a, b)) continue;
        ForbiddenPath p;
        p.vertex = v;
        p.zl_in = a;
        p.zl_out = b;
        set_flags(bq, p);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

ForbiddenPathList forbidden_paths(const BoundQuiver& bq, int cap) {
    ForbiddenPathList result;
    for (ForbiddenPath& p : zero_length_paths(bq)) result.paths.push_back(std::move(p));
    // Every forbidden path is determined by its first arrow and length; grow
    // each chain forward through relations (branching only on non-gentle
    // input).
    for (int a = 0; a < bq.num_arrows(); ++a) {
        std::vector<std::vector<int>> frontier{{a}};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& chain : frontier) {
                ForbiddenPath p;
                p.arrows = chain;
                set_flags(bq, p);
                result.paths.push_back(p);
                if (static_cast<int>(chain.size()) >= cap) {
                    if (!bq.relations_after(chain.back()).empty()) result.truncated = true;
                    continue;
                }
                for (int b : bq.relations_after(chain.back())) {
                    auto ext = chain;
                    ext.push_back(b);
                    next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
        }
    }
    return result;
}

std::vector<ForbiddenPath> maximal_forbidden_paths(const BoundQuiver& bq) {
    std::vector<ForbiddenPath> out = zero_length_paths(bq);
    // A both-maximal chain is the full relation-closure of any left-maximal
    // seed arrow; chains entering a forbidden cycle never terminate and are
    // excluded.
    for (int a = 0; a < bq.num_arrows(); ++a) {
        if (!chain_left_maximal(bq, a)) continue;
        std::vector<std::vector<int>> frontier{{a}};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& chain : frontier) {
                if (static_cast<int>(chain.size()) > bq.num_arrows()) continue;  // cycle wrap
                if (chain_right_maximal(bq, chain.back())) {
                    ForbiddenPath p;
                    p.arrows = chain;
                    set_flags(bq, p);
                    out.push_back(std::move(p));
                    continue;
                }
                for (int b : bq.relations_after(chain.back())) {
                    auto ext = chain;
                    ext.push_back(b);
                    next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
        }
    }
    return out;
}

std::vector<std::vector<int>> forbidden_cycles(const BoundQuiver& bq) {
    std::vector<std::vector<int>> cycles;
    const int n = bq.num_arrows();
    // Enumerate simple cycles in the relation digraph, each reported from its
    // least arrow; out-degrees are <= 1 for a gentle pair but the DFS below
    // handles the general case.
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        std::vector<bool> on_path(n, false);
        on_path[start] = true;
        // iterative DFS restricted to arrows >= start
        std::vector<std::size_t> idx{0};
        while (!path.empty()) {
            int cur = path.back();
            const auto& succ = bq.relations_after(cur);
            if (idx.back() < succ.size()) {
                int b = succ[idx.back()++];
                if (b == start) {
                    cycles.push_back(path);
                    continue;
                }
                if (b > start && !on_path[b]) {
                    path.push_back(b);
                    on_path[b] = true;
                    idx.push_back(0);
                }
            } else {
                on_path[cur] = false;
                path.pop_back();
                idx.pop_back();
            }
        }
    }
    return cycles;
}

Dim global_dimension(const BoundQuiver& bq) {
    if (!forbidden_cycles(bq).empty()) return Dim::infinite();
    int sup = 0;
    for (const ForbiddenPath& p : forbidden_paths(bq, bq.num_arrows()).paths)
        sup = std::max(sup, p.length());
    return Dim(sup);
}

int finitistic_dimension(const BoundQuiver& bq) {
    int sup = 0;
    for (const ForbiddenPath& p : maximal_forbidden_paths(bq)) sup = std::max(sup, p.length());
    return sup;
}

Continuation forbidden_continuation(const BoundQuiver& bq, int v, ContinuationSide side,
                                    std::optional<Letter> compat) {
    const Quiver& q = bq.quiver();
    Continuation best;
    auto consider = [&](ForbiddenPath p, bool unbounded) {
        if (unbounded) {
            best.unbounded = true;
            best.path = std::move(p);
        } else if (!best.unbounded &&
                   (!best.path || p.length() > best.path->length())) {
            best.path = std::move(p);
        }
    };
    if (side == ContinuationSide::Into) {
        for (int f : q.in_arrows(v)) {
            // junction: the chain's last arrow followed by the exit letter
            if (compat && !two_letter_valid(bq, Letter{f, false}, *compat)) continue;
            std::vector<int> chain{f};
            bool unbounded = false;
            for (;;) {
                const auto& pred = bq.relations_before(chain.front());
                if (pred.empty()) break;
                if (static_cast<int>(chain.size()) > bq.num_arrows()) {
                    unbounded = true;
                    break;
                }
                chain.insert(chain.begin(), pred.front());
            }
            ForbiddenPath p;
            p.arrows = std::move(chain);
            set_flags(bq, p);
            consider(std::move(p), unbounded);
        }
    } else {
        for (int f : q.out_arrows(v)) {
            // junction: the chain's first arrow, inverted, followed by the exit letter
            if (compat && !two_letter_valid(bq, Letter{f, true}, *compat)) continue;
            std::vector<int> chain{f};
            bool unbounded = false;
            for (;;) {
                const auto& succ = bq.relations_after(chain.back());
                if (succ.empty()) break;
                if (static_cast<int>(chain.size()) > bq.num_arrows()) {
                    unbounded = true;
                    break;
                }
                chain.push_back(succ.front());
            }
            ForbiddenPath p;
            p.arrows = std::move(chain);
            set_flags(bq, p);
            consider(std::move(p), unbounded);
        }
    }
    return best;
}

}  // namespace gentle
