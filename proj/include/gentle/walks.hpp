#ifndef GENTLE_WALKS_HPP
#define GENTLE_WALKS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

/// An arrow or its formal inverse. Letters are totally ordered by
/// (arrow declaration index, forward < inverse); this order drives every
/// canonical form.
struct Letter {
    int arrow = -1;
    bool inverse = false;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& x, const Letter& y) {
        if (auto c = x.arrow <=> y.arrow; c != 0) return c;
        return (x.inverse ? 1 : 0) <=> (y.inverse ? 1 : 0);
    }
};

inline Letter inverse(Letter l) { return {l.arrow, !l.inverse}; }

int letter_source(const BoundQuiver& bq, Letter l);
int letter_target(const BoundQuiver& bq, Letter l);

/// A reduced walk: either the trivial string at a vertex or a nonempty
/// letter sequence. Purely combinatorial; validity is checked against a
/// bound quiver by is_valid_string.
class StringWord {
public:
    StringWord() = default;
    static StringWord trivial(int v) {
        StringWord w;
        w.trivial_vertex_ = v;
        return w;
    }
    explicit StringWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw std::invalid_argument("empty letter sequence");
    }

    bool is_trivial() const { return letters_.empty(); }
    int trivial_vertex() const { return trivial_vertex_; }
    std::size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    friend bool operator==(const StringWord&, const StringWord&) = default;
    friend auto operator<=>(const StringWord& a, const StringWord& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        if (a.is_trivial()) return a.trivial_vertex_ <=> b.trivial_vertex_;
        return a.letters_ <=> b.letters_;
    }

private:
    int trivial_vertex_ = -1;
    std::vector<Letter> letters_;
};

int word_source(const BoundQuiver& bq, const StringWord& w);
int word_target(const BoundQuiver& bq, const StringWord& w);
/// Vertex at walk position i (0 <= i <= length).
int word_vertex_at(const BoundQuiver& bq, const StringWord& w, std::size_t i);

enum class StringAxiom { S1, S2, S3 };

struct StringCheck {
    bool ok = true;
    StringAxiom violated = StringAxiom::S1;
    std::size_t index = 0;  // position of the offending letter pair's second letter
};

/// True iff the two-letter juxtaposition x y is a valid string.
bool two_letter_valid(const BoundQuiver& bq, Letter x, Letter y);

/// First violated axiom with its position, or ok. Trivial words are ok.
/// Throws std::out_of_range for letters referencing undeclared arrows.
StringCheck is_valid_string(const BoundQuiver& bq, const StringWord& w);

StringWord inverse(const StringWord& w);

/// Lexicographically smaller of {w, inverse(w)}; idempotent.
StringWord canonical_string(const StringWord& w);

struct BandCheck {
    bool is_band = false;
    std::string reason;
};

/// Checks closure, primitivity, and validity of w·w (including the wrap
/// junction). w must be a valid string of length >= 1.
BandCheck is_band(const BoundQuiver& bq, const StringWord& w);

/// A band word together with the rotation offset that produced it from the
/// originally supplied word.
struct BandWord {
    StringWord word;
    int base = 0;
};

/// Lexicographic minimum over all rotations of w and of inverse(w).
BandWord canonical_band(const BoundQuiver& bq, const StringWord& w);

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All canonical string representatives of length <= max_len, including
/// every trivial string, sorted by (length, letters). Throws
/// EnumerationCapExceeded when more than `cap` words would be produced.
std::vector<StringWord> enumerate_strings(const BoundQuiver& bq, std::size_t max_len,
                                          std::size_t cap = 2'000'000);

/// All canonical band representatives of length <= max_len.
std::vector<StringWord> enumerate_bands(const BoundQuiver& bq, std::size_t max_len,
                                        std::size_t cap = 2'000'000);

/// Nodes are all letters; there is an edge (x, y) iff x y is a valid
/// two-letter string. For a gentle pair every node has out-degree <= 2.
class TransitionGraph {
public:
    explicit TransitionGraph(const BoundQuiver& bq);

    static int node_of(Letter l) { return 2 * l.arrow + (l.inverse ? 1 : 0); }
    static Letter letter_of(int node) { return {node / 2, node % 2 == 1}; }

    int num_nodes() const { return static_cast<int>(succ_.size()); }
    const std::vector<int>& successors(int node) const { return succ_.at(node); }
    std::vector<Letter> successors(Letter l) const;

    /// Reachability along paths with at least one edge.
    bool reach(Letter from, Letter to) const;

    /// True iff the graph contains a cycle (equivalently, the pair admits a
    /// band).
    bool has_cycle() const;

    /// A shortest cycle through some node, as a letter sequence forming a
    /// closed valid word; nullopt when acyclic.
    std::optional<std::vector<Letter>> shortest_cycle() const;

private:
    std::vector<std::vector<int>> succ_;
};

}  // namespace gentle

#endif
