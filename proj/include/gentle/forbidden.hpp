#ifndef GENTLE_FORBIDDEN_HPP
#define GENTLE_FORBIDDEN_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gentle/walks.hpp"

namespace gentle {

/// Extended natural number: a finite dimension value or infinity.
/// Infinity is absorbing under + and greatest under the order.
class Dim {
public:
    constexpr Dim() = default;
    constexpr explicit Dim(int n) : finite_(true), value_(n) {}
    static constexpr Dim infinite() { return Dim(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr int value() const { return value_; }  // meaningful only when finite

    friend constexpr bool operator==(Dim a, Dim b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Dim a, Dim b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend constexpr Dim operator+(Dim a, Dim b) {
        if (!a.finite_ || !b.finite_) return infinite();
        return Dim(a.value_ + b.value_);
    }
    friend constexpr Dim operator+(int n, Dim d) { return Dim(n) + d; }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    bool finite_ = false;
    int value_ = 0;
};

constexpr Dim max(Dim a, Dim b) { return a < b ? b : a; }

/// A forbidden path: a chain of arrows whose consecutive compositions are
/// all relations (single arrows included), or the degenerate length-zero
/// path at a vertex with exactly one incoming arrow a, one outgoing arrow
/// b, and a·b a relation.
struct ForbiddenPath {
    std::vector<int> arrows;  // empty for the zero-length case
    int vertex = -1;          // zero-length: the carrying vertex
    int zl_in = -1, zl_out = -1;
    bool left_maximal = false;
    bool right_maximal = false;

    bool is_zero_length() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    bool is_maximal() const {
        return is_zero_length() || (left_maximal && right_maximal);
    }
};

struct ForbiddenPathList {
    std::vector<ForbiddenPath> paths;
    bool truncated = false;  // some chain wraps a forbidden cycle past the cap
};

/// All forbidden paths of length <= cap, with maximality flags set.
ForbiddenPathList forbidden_paths(const BoundQuiver& bq, int cap);

/// Both-maximal chains plus all zero-length forbidden paths.
std::vector<ForbiddenPath> maximal_forbidden_paths(const BoundQuiver& bq);

/// Oriented cycles whose cyclic consecutive compositions are all relations,
/// reported up to rotation (each cycle starts at its least arrow index).
std::vector<std::vector<int>> forbidden_cycles(const BoundQuiver& bq);

/// Infinite iff a forbidden cycle exists, else the supremum of forbidden
/// path lengths (0 for an arrowless quiver).
Dim global_dimension(const BoundQuiver& bq);

/// Supremum of maximal forbidden path lengths; always finite.
int finitistic_dimension(const BoundQuiver& bq);

enum class ContinuationSide { Into, OutOf };

struct Continuation {
    std::optional<ForbiddenPath> path;
    bool unbounded = false;  // the chain wraps a forbidden cycle
    /// Chain length; 0 when absent. Meaningless when unbounded.
    int length() const { return path ? path->length() : 0; }
};

/// The maximal relation-chain ending at v (side Into) or starting at v
/// (side OutOf) whose junction with the exit letter `compat` forms a valid
/// two-letter configuration. `compat` is the string's first letter at the
/// left end, and the inverse of its last letter at the right end; pass
/// nullopt to disable the junction filter (the longest chain is returned
/// when several candidates exist, which cannot happen for a gentle pair
/// with a compat letter). Unbounded chains (wrapping a forbidden cycle)
/// are flagged instead of assigned a length.
Continuation forbidden_continuation(const BoundQuiver& bq, int v, ContinuationSide side,
                                    std::optional<Letter> compat);

}  // namespace gentle

#endif
