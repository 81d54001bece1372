#ifndef GENTLE_QUIVER_HPP
#define GENTLE_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gentle {

/// An arrow of a quiver. Vertices are referred to by index into the
/// declaration order of the owning Quiver.
struct Arrow {
    std::string name;
    int source = -1;
    int target = -1;
};

/// Finite quiver with named vertices and arrows. Declaration order is
/// significant: it fixes the total order used everywhere downstream
/// (canonical forms, sorted result sets, letter ordering).
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

    /// Arrows with the given source/target, in declaration order.
    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

    int source(int a) const { return arrows_.at(a).source; }
    int target(int a) const { return arrows_.at(a).target; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_by_name_;
    std::unordered_map<std::string, int> arrow_by_name_;
    std::vector<std::vector<int>> out_, in_;
};

/// A quiver bound by a set of length-two monomial relations (a, b) with
/// t(a) = s(b); the path a·b (left-to-right composition) is a relation.
/// `long_generators` records any longer monomial generators carried by the
/// input format; they are rejected by gentle validation (G4) but kept so
/// the validator can report them.
class BoundQuiver {
public:
    BoundQuiver() = default;
    BoundQuiver(Quiver quiver, std::vector<std::pair<int, int>> relations,
                std::vector<std::vector<int>> long_generators = {});

    const Quiver& quiver() const { return quiver_; }
    const std::vector<std::pair<int, int>>& relations() const { return relations_; }
    const std::vector<std::vector<int>>& long_generators() const { return long_generators_; }

    bool has_relation(int a, int b) const {
        return relation_set_.count(key(a, b)) > 0;
    }

    /// Arrows b with (a, b) a relation, in declaration order (at most one
    /// for a gentle pair, but validation must see all of them).
    const std::vector<int>& relations_after(int a) const { return rel_after_.at(a); }
    /// Arrows c with (c, a) a relation.
    const std::vector<int>& relations_before(int a) const { return rel_before_.at(a); }

    /// Composable continuations b of a (t(a) = s(b)) with a·b not a relation.
    std::vector<int> relation_free_after(int a) const;
    /// Composable predecessors c of a with c·a not a relation.
    std::vector<int> relation_free_before(int a) const;

    int num_vertices() const { return quiver_.num_vertices(); }
    int num_arrows() const { return quiver_.num_arrows(); }
    int source(int a) const { return quiver_.source(a); }
    int target(int a) const { return quiver_.target(a); }

private:
    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }

    Quiver quiver_;
    std::vector<std::pair<int, int>> relations_;
    std::vector<std::vector<int>> long_generators_;
    std::unordered_set<std::uint64_t> relation_set_;
    std::vector<std::vector<int>> rel_after_, rel_before_;
};

enum class GentleViolationCode { G1, G2, G3, G4, FD };

const char* to_string(GentleViolationCode code);

struct GentleViolation {
    GentleViolationCode code;
    std::vector<std::string> witness;  // vertex or arrow names
    std::string message;
};

struct GentleReport {
    bool is_gentle = true;
    std::vector<GentleViolation> violations;
};

/// Checks the gentle axioms G1-G4 plus finite-dimensionality (FD: no
/// oriented cycle whose cyclically consecutive compositions all avoid the
/// relation set). All violations are accumulated, not short-circuited.
GentleReport validate_gentle(const BoundQuiver& bq);

/// Opposite bound quiver: arrows reversed, names suffixed "_op", each
/// relation (a, b) becomes (b_op, a_op). An involution up to renaming.
BoundQuiver opposite(const BoundQuiver& bq);

/// Strong source: in-degree 0 and out-degree <= 1 (the degenerate
/// out-degree-0 vertex counts). Strong sink dually. Sorted by declaration
/// order.
std::vector<int> strong_sources(const BoundQuiver& bq);
std::vector<int> strong_sinks(const BoundQuiver& bq);

/// True iff some relation (a1, a2) sits at v, i.e. t(a1) = v = s(a2).
bool vertex_with_relation(const BoundQuiver& bq, int v);

/// Deterministic random gentle pair; the result always passes
/// validate_gentle. Throws std::runtime_error after bounded retries if the
/// bounds are unsatisfiable.
BoundQuiver random_gentle(std::uint64_t seed, int max_vertices, int max_arrows);

}  // namespace gentle

#endif
