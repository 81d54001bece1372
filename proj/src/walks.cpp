#include "gentle/walks.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gentle {

int letter_source(const BoundQuiver& bq, Letter l) {
    return l.inverse ? bq.target(l.arrow) : bq.source(l.arrow);
}

int letter_target(const BoundQuiver& bq, Letter l) {
    return l.inverse ? bq.source(l.arrow) : bq.target(l.arrow);
}

int word_source(const BoundQuiver& bq, const StringWord& w) {
    return w.is_trivial() ? w.trivial_vertex() : letter_source(bq, w.front());
}

int word_target(const BoundQuiver& bq, const StringWord& w) {
    return w.is_trivial() ? w.trivial_vertex() : letter_target(bq, w.back());
}

int word_vertex_at(const BoundQuiver& bq, const StringWord& w, std::size_t i) {
    if (w.is_trivial()) return w.trivial_vertex();
    if (i == 0) return letter_source(bq, w.letters()[0]);
    return letter_target(bq, w.letters()[i - 1]);
}

bool two_letter_valid(const BoundQuiver& bq, Letter x, Letter y) {
    if (letter_target(bq, x) != letter_source(bq, y)) return false;  // S1
    if (!x.inverse && !y.inverse) return !bq.has_relation(x.arrow, y.arrow);      // S2
    if (x.inverse && y.inverse) return !bq.has_relation(y.arrow, x.arrow);        // S2
    return x.arrow != y.arrow;                                                    // S3
}

StringCheck is_valid_string(const BoundQuiver& bq, const StringWord& w) {
    if (w.is_trivial()) {
        if (w.trivial_vertex() < 0 || w.trivial_vertex() >= bq.num_vertices())
            throw std::out_of_range("trivial string at undeclared vertex");
        return {};
    }
    const auto& ls = w.letters();
    for (const Letter& l : ls)
        if (l.arrow < 0 || l.arrow >= bq.num_arrows())
            throw std::out_of_range("letter references undeclared arrow");
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        Letter x = ls[i], y = ls[i + 1];
        if (letter_target(bq, x) != letter_source(bq, y))
            return {false, StringAxiom::S1, i + 1};
        if (x.inverse == y.inverse) {
            bool rel = x.inverse ? bq.has_relation(y.arrow, x.arrow)
                                 : bq.has_relation(x.arrow, y.arrow);
            if (rel) return {false, StringAxiom::S2, i + 1};
        } else if (x.arrow == y.arrow) {
            return {false, StringAxiom::S3, i + 1};
        }
    }
    return {};
}

StringWord inverse(const StringWord& w) {
    if (w.is_trivial()) return w;
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : letters) l = inverse(l);
    return StringWord(std::move(letters));
}

StringWord canonical_string(const StringWord& w) {
    if (w.is_trivial()) return w;
    StringWord inv = inverse(w);
    return inv < w ? inv : w;
}

BandCheck is_band(const BoundQuiver& bq, const StringWord& w) {
    if (w.is_trivial() || w.length() < 1) return {false, "band words have length >= 1"};
    StringCheck sc = is_valid_string(bq, w);
    if (!sc.ok) return {false, "not a valid string"};
    if (word_source(bq, w) != word_target(bq, w)) return {false, "not closed"};
    const auto& ls = w.letters();
    std::size_t n = ls.size();
    // proper power test: periodic with period d | n, d < n
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + d < n && periodic; ++i)
            if (!(ls[i] == ls[i + d])) periodic = false;
        if (periodic) return {false, "proper power of a shorter word"};
    }
    // w·w must be a string, which reduces to the wrap junction
    if (!two_letter_valid(bq, ls.back(), ls.front()))
        return {false, "square is not a string (wrap junction invalid)"};
    return {true, ""};
}

namespace {

StringWord rotate(const StringWord& w, std::size_t t) {
    const auto& ls = w.letters();
    std::vector<Letter> out;
    out.reserve(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) out.push_back(ls[(i + t) % ls.size()]);
    return StringWord(std::move(out));
}

}  // namespace

BandWord canonical_band(const BoundQuiver& bq, const StringWord& w) {
    BandCheck bc = is_band(bq, w);
    if (!bc.is_band) throw std::invalid_argument("canonical_band: not a band: " + bc.reason);
    std::size_t n = w.length();
    StringWord best = w;
    int best_base = 0;
    for (std::size_t t = 0; t < n; ++t) {
        StringWord r = rotate(w, t);
        if (r < best) {
            best = r;
            best_base = static_cast<int>(t);
        }
        StringWord ri = rotate(inverse(w), t);
        if (ri < best) {
            best = ri;
            best_base = static_cast<int>(t);
        }
    }
    return {best, best_base};
}

std::vector<StringWord> enumerate_strings(const BoundQuiver& bq, std::size_t max_len,
                                          std::size_t cap) {
    std::set<StringWord> seen;
    for (int v = 0; v < bq.num_vertices(); ++v) seen.insert(StringWord::trivial(v));
    if (max_len >= 1) {
        TransitionGraph tg(bq);
        std::deque<std::vector<Letter>> queue;
        for (int a = 0; a < bq.num_arrows(); ++a) {
            for (bool inv : {false, true}) {
                std::vector<Letter> ls{Letter{a, inv}};
                StringWord w = canonical_string(StringWord(ls));
                if (seen.insert(w).second && seen.size() > cap)
                    throw EnumerationCapExceeded("enumerate_strings: cap exceeded");
                queue.push_back(std::move(ls));
            }
        }
        std::size_t expanded = 0;
        while (!queue.empty()) {
            std::vector<Letter> ls = std::move(queue.front());
            queue.pop_front();
            if (ls.size() >= max_len) continue;
            if (++expanded > 4 * cap)
                throw EnumerationCapExceeded("enumerate_strings: expansion cap exceeded");
            for (Letter next : tg.successors(ls.back())) {
                std::vector<Letter> ext = ls;
                ext.push_back(next);
                StringWord w = canonical_string(StringWord(ext));
                if (seen.insert(std::move(w)).second && seen.size() > cap)
                    throw EnumerationCapExceeded("enumerate_strings: cap exceeded");
                queue.push_back(std::move(ext));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<StringWord> enumerate_bands(const BoundQuiver& bq, std::size_t max_len,
                                        std::size_t cap) {
    std::set<StringWord> bands;
    for (const StringWord& w : enumerate_strings(bq, max_len, cap)) {
        if (w.is_trivial()) continue;
        if (is_band(bq, w).is_band) bands.insert(canonical_band(bq, w).word);
    }
    return {bands.begin(), bands.end()};
}

TransitionGraph::TransitionGraph(const BoundQuiver& bq) {
    succ_.assign(2 * static_cast<std::size_t>(bq.num_arrows()), {});
    for (int xa = 0; xa < bq.num_arrows(); ++xa) {
        for (bool xi : {false, true}) {
            Letter x{xa, xi};
            for (int ya = 0; ya < bq.num_arrows(); ++ya) {
                for (bool yi : {false, true}) {
                    Letter y{ya, yi};
                    if (two_letter_valid(bq, x, y)) succ_[node_of(x)].push_back(node_of(y));
                }
            }
        }
    }
}

std::vector<Letter> TransitionGraph::successors(Letter l) const {
    std::vector<Letter> out;
    for (int n : succ_.at(node_of(l))) out.push_back(letter_of(n));
    return out;
}

bool TransitionGraph::reach(Letter from, Letter to) const {
    std::vector<bool> visited(succ_.size(), false);
    std::deque<int> queue(succ_.at(node_of(from)).begin(), succ_.at(node_of(from)).end());
    while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        if (n == node_of(to)) return true;
        if (visited[n]) continue;
        visited[n] = true;
        for (int m : succ_[n]) queue.push_back(m);
    }
    return false;
}

bool TransitionGraph::has_cycle() const {
    return shortest_cycle().has_value();
}

std::optional<std::vector<Letter>> TransitionGraph::shortest_cycle() const {
    std::optional<std::vector<Letter>> best;
    for (int start = 0; start < num_nodes(); ++start) {
        // BFS back to start
        std::vector<int> parent(num_nodes(), -2);
        std::deque<int> queue;
        for (int m : succ_[start])
            if (parent[m] == -2) {
                parent[m] = start == m ? -1 : start;
                queue.push_back(m);
            }
        bool found = false;
        while (!queue.empty() && !found) {
            int n = queue.front();
            queue.pop_front();
            for (int m : succ_[n]) {
                if (m == start) {
                    std::vector<int> nodes{start};
                    for (int c = n; c != start && c != -1; c = parent[c]) nodes.push_back(c);
                    std::reverse(nodes.begin() + 1, nodes.end());
                    std::vector<Letter> cycle;
                    for (int node : nodes) cycle.push_back(letter_of(node));
                    if (!best || cycle.size() < best->size()) best = cycle;
                    found = true;
                    break;
                }
                if (parent[m] == -2) {
                    parent[m] = n;
                    queue.push_back(m);
                }
            }
        }
    }
    return best;
}

}  // namespace gentle
