#include "gentle/quiver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gentle {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
    for (int v = 0; v < num_vertices(); ++v) {
        if (vertex_names_[v].empty())
            throw std::invalid_argument("empty vertex name");
        if (!vertex_by_name_.emplace(vertex_names_[v], v).second)
            throw std::invalid_argument("duplicate vertex name: " + vertex_names_[v]);
    }
    out_.assign(num_vertices(), {});
    in_.assign(num_vertices(), {});
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows_[a];
        if (ar.name.empty())
            throw std::invalid_argument("empty arrow name");
        if (!arrow_by_name_.emplace(ar.name, a).second)
            throw std::invalid_argument("duplicate arrow name: " + ar.name);
        if (ar.source < 0 || ar.source >= num_vertices() || ar.target < 0 ||
            ar.target >= num_vertices())
            throw std::invalid_argument("arrow " + ar.name + " references undeclared vertex");
        out_[ar.source].push_back(a);
        in_[ar.target].push_back(a);
    }
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    if (it == arrow_by_name_.end()) return std::nullopt;
    return it->second;
}

BoundQuiver::BoundQuiver(Quiver quiver, std::vector<std::pair<int, int>> relations,
                         std::vector<std::vector<int>> long_generators)
    : quiver_(std::move(quiver)), long_generators_(std::move(long_generators)) {
    rel_after_.assign(quiver_.num_arrows(), {});
    rel_before_.assign(quiver_.num_arrows(), {});
    for (auto [a, b] : relations) {
        if (a < 0 || a >= quiver_.num_arrows() || b < 0 || b >= quiver_.num_arrows())
            throw std::invalid_argument("relation references undeclared arrow");
        if (quiver_.target(a) != quiver_.source(b))
            throw std::invalid_argument("relation (" + quiver_.arrow(a).name + ", " +
                                        quiver_.arrow(b).name + ") is not composable");
        if (relation_set_.insert(key(a, b)).second) {
            relations_.emplace_back(a, b);
            rel_after_[a].push_back(b);
            rel_before_[b].push_back(a);
        }
    }
    for (const auto& gen : long_generators_) {
        if (gen.size() < 3)
            throw std::invalid_argument("long generator must have length >= 3");
        for (size_t i = 0; i + 1 < gen.size(); ++i)
            if (quiver_.target(gen[i]) != quiver_.source(gen[i + 1]))
                throw std::invalid_argument("long generator is not a path");
    }
}

std::vector<int> BoundQuiver::relation_free_after(int a) const {
    std::vector<int> result;
    for (int b : quiver_.out_arrows(quiver_.target(a)))
        if (!has_relation(a, b)) result.push_back(b);
    return result;
}

std::vector<int> BoundQuiver::relation_free_before(int a) const {
    std::vector<int> result;
    for (int c : quiver_.in_arrows(quiver_.source(a)))
        if (!has_relation(c, a)) result.push_back(c);
    return result;
}

const char* to_string(GentleViolationCode code) {
    switch (code) {
        case GentleViolationCode::G1: return "G1";
        case GentleViolationCode::G2: return "G2";
        case GentleViolationCode::G3: return "G3";
        case GentleViolationCode::G4: return "G4";
        case GentleViolationCode::FD: return "FD";
    }
    return "?";
}

namespace {

// A cycle in the arrow digraph whose edges are the relation-free
// compositions; such a cycle makes the quotient algebra infinite-dimensional.
std::optional<std::vector<int>> find_relation_free_cycle(const BoundQuiver& bq) {
    const int n = bq.num_arrows();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> stack, pos_in_stack(n, -1);
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        // iterative DFS
        std::vector<std::pair<int, int>> frames;  // (arrow, next successor idx)
        frames.emplace_back(start, 0);
        state[start] = 1;
        pos_in_stack[start] = static_cast<int>(stack.size());
        stack.push_back(start);
        while (!frames.empty()) {
            auto& [a, idx] = frames.back();
            std::vector<int> succ = bq.relation_free_after(a);
            if (idx < static_cast<int>(succ.size())) {
                int b = succ[idx++];
                if (state[b] == 1) {
                    std::vector<int> cycle(stack.begin() + pos_in_stack[b], stack.end());
                    return cycle;
                }
                if (state[b] == 0) {
                    state[b] = 1;
                    pos_in_stack[b] = static_cast<int>(stack.size());
                    stack.push_back(b);
                    frames.emplace_back(b, 0);
                }
            } else {
                state[a] = 2;
                pos_in_stack[a] = -1;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

GentleReport validate_gentle(const BoundQuiver& bq) {
    GentleReport report;
    const Quiver& q = bq.quiver();
    auto add = [&](GentleViolationCode code, std::vector<std::string> witness,
                   std::string message) {
        report.violations.push_back({code, std::move(witness), std::move(message)});
    };

    for (int v = 0; v < q.num_vertices(); ++v) {
        if (q.out_arrows(v).size() > 2)
            add(GentleViolationCode::G1, {q.vertex_name(v)},
                "vertex " + q.vertex_name(v) + " is the source of more than two arrows");
        if (q.in_arrows(v).size() > 2)
            add(GentleViolationCode::G1, {q.vertex_name(v)},
                "vertex " + q.vertex_name(v) + " is the target of more than two arrows");
    }

    for (int a = 0; a < q.num_arrows(); ++a) {
        const std::string& an = q.arrow(a).name;
        auto names = [&](const std::vector<int>& arrows) {
            std::vector<std::string> result{an};
            for (int x : arrows) result.push_back(q.arrow(x).name);
            return result;
        };
        std::vector<int> free_after = bq.relation_free_after(a);
        if (free_after.size() > 1)
            add(GentleViolationCode::G2, names(free_after),
                "arrow " + an + " has more than one relation-free continuation");
        std::vector<int> free_before = bq.relation_free_before(a);
        if (free_before.size() > 1)
            add(GentleViolationCode::G2, names(free_before),
                "arrow " + an + " has more than one relation-free predecessor");
        if (bq.relations_after(a).size() > 1)
            add(GentleViolationCode::G3, names(bq.relations_after(a)),
                "arrow " + an + " starts more than one relation");
        if (bq.relations_before(a).size() > 1)
            add(GentleViolationCode::G3, names(bq.relations_before(a)),
                "arrow " + an + " ends more than one relation");
    }

    for (const auto& gen : bq.long_generators()) {
        std::vector<std::string> witness;
        for (int a : gen) witness.push_back(q.arrow(a).name);
        add(GentleViolationCode::G4, witness,
            "relation generator of length " + std::to_string(gen.size()) +
                " (only paths of length two are admitted)");
    }

    if (auto cycle = find_relation_free_cycle(bq)) {
        std::vector<std::string> witness;
        for (int a : *cycle) witness.push_back(q.arrow(a).name);
        add(GentleViolationCode::FD, witness,
            "relation-free oriented cycle makes the algebra infinite-dimensional");
    }

    report.is_gentle = report.violations.empty();
    return report;
}

BoundQuiver opposite(const BoundQuiver& bq) {
    const Quiver& q = bq.quiver();
    std::vector<Arrow> arrows;
    arrows.reserve(q.num_arrows());
    for (int a = 0; a < q.num_arrows(); ++a)
        arrows.push_back({q.arrow(a).name + "_op", q.target(a), q.source(a)});
    Quiver opq(q.vertex_names(), std::move(arrows));
    std::vector<std::pair<int, int>> relations;
    for (auto [a, b] : bq.relations()) relations.emplace_back(b, a);
    std::vector<std::vector<int>> longs;
    for (const auto& gen : bq.long_generators())
        longs.emplace_back(gen.rbegin(), gen.rend());
    return BoundQuiver(std::move(opq), std::move(relations), std::move(longs));
}

std::vector<int> strong_sources(const BoundQuiver& bq) {
    std::vector<int> result;
    const Quiver& q = bq.quiver();
    for (int v = 0; v < q.num_vertices(); ++v)
        if (q.in_arrows(v).empty() && q.out_arrows(v).size() <= 1) result.push_back(v);
    return result;
}

std::vector<int> strong_sinks(const BoundQuiver& bq) {
    std::vector<int> result;
    const Quiver& q = bq.quiver();
    for (int v = 0; v < q.num_vertices(); ++v)
        if (q.out_arrows(v).empty() && q.in_arrows(v).size() <= 1) result.push_back(v);
    return result;
}

bool vertex_with_relation(const BoundQuiver& bq, int v) {
    for (int a : bq.quiver().in_arrows(v))
        if (!bq.relations_after(a).empty()) return true;
    return false;
}

BoundQuiver random_gentle(std::uint64_t seed, int max_vertices, int max_arrows) {
    if (max_vertices < 1 || max_arrows < 0)
        throw std::invalid_argument("random_gentle: bounds must allow one vertex");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        int nv = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
        std::vector<std::string> vertex_names;
        for (int v = 0; v < nv; ++v) vertex_names.push_back("v" + std::to_string(v + 1));

        int na_target = max_arrows == 0
                            ? 0
                            : static_cast<int>(rng() % static_cast<std::uint64_t>(max_arrows + 1));
        std::vector<Arrow> arrows;
        std::vector<int> outdeg(nv, 0), indeg(nv, 0);
        int tries = 4 * (na_target + 1);
        while (static_cast<int>(arrows.size()) < na_target && tries-- > 0) {
            int s = static_cast<int>(rng() % nv);
            int t = static_cast<int>(rng() % nv);
            if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
            outdeg[s]++;
            indeg[t]++;
            arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t});
        }

        // Per vertex, split the composable (in, out) pairs into relation /
        // non-relation slots; with two arrows on a side the split is forced
        // up to the choice of matching.
        Quiver q(vertex_names, arrows);
        std::vector<std::pair<int, int>> relations;
        for (int v = 0; v < nv; ++v) {
            const auto& ins = q.in_arrows(v);
            const auto& outs = q.out_arrows(v);
            if (ins.empty() || outs.empty()) continue;
            if (ins.size() == 1 && outs.size() == 1) {
                if (rng() % 2) relations.emplace_back(ins[0], outs[0]);
            } else if (ins.size() == 2 && outs.size() == 1) {
                relations.emplace_back(ins[rng() % 2], outs[0]);
            } else if (ins.size() == 1 && outs.size() == 2) {
                relations.emplace_back(ins[0], outs[rng() % 2]);
            } else {
                int flip = static_cast<int>(rng() % 2);
                relations.emplace_back(ins[0], outs[flip]);
                relations.emplace_back(ins[1], outs[1 - flip]);
            }
        }

        BoundQuiver bq(std::move(q), std::move(relations));
        // FD repair: delete one arrow on a relation-free cycle and rebuild.
        for (;;) {
            auto cycle = find_relation_free_cycle(bq);
            if (!cycle) break;
            int victim = (*cycle)[rng() % cycle->size()];
            std::vector<Arrow> kept;
            std::vector<int> remap(bq.num_arrows(), -1);
            for (int a = 0; a < bq.num_arrows(); ++a) {
                if (a == victim) continue;
                remap[a] = static_cast<int>(kept.size());
                kept.push_back(bq.quiver().arrow(a));
            }
            std::vector<std::pair<int, int>> kept_rel;
            for (auto [a, b] : bq.relations())
                if (a != victim && b != victim) kept_rel.emplace_back(remap[a], remap[b]);
            bq = BoundQuiver(Quiver(vertex_names, std::move(kept)), std::move(kept_rel));
        }

        if (validate_gentle(bq).is_gentle) return bq;
    }
    throw std::runtime_error("random_gentle: failed to generate within retry budget");
}

}  // namespace gentle
