#ifndef GENTLE_QUASI_TILTED_HPP
#define GENTLE_QUASI_TILTED_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gentle/homology.hpp"

namespace gentle {

enum class QtCondition { Qt1, Qt2, Qt3, Qt4 };

/// End-configuration classification of a string against the four
/// quasi-tilted conditions. Meaningful for gl.dim = 2.
struct QtClass {
    std::set<QtCondition> satisfied;
    int shape = 0;  // 1..4: end configuration (outgoing/outgoing, incoming/incoming, mixed)
};

enum class QtStatus { QuasiTilted, NotQuasiTilted, Hereditary, NotApplicable };

struct QtVerdict {
    QtStatus status = QtStatus::NotApplicable;
    std::optional<StringWord> witness;  // NotQuasiTilted: a string with pd = id = 2
    std::string reason;                 // NotApplicable: why
    bool via_fast_path = false;         // decided by the strong-source/sink hypotheses
};

/// Evaluates (Qt1)-(Qt4) literally. Requires gl.dim = 2 (throws otherwise).
QtClass classify_string_qt(HomologyContext& ctx, const StringWord& w);

/// Quasi-tilted decision: Hereditary for gl.dim <= 1; fast path by the
/// bound hypotheses; otherwise an exact scan for a string with
/// pd = 2 and id = 2 (the definitional witness), covering lengths 0..2,
/// the projective/injective strings, and all longer strings through their
/// end-letter pairs. NotApplicable for gl.dim >= 3 or infinite.
QtVerdict is_quasi_tilted(HomologyContext& ctx);

struct QtCrossCheck {
    bool all_within_bound = true;       // pd + id <= 3 for every scanned module
    std::optional<StringWord> offender;
    Dim max_sum;
    bool consistent = true;             // agrees with is_quasi_tilted
};

/// Independent verification: pd + id <= 3 over all strings up to max_len
/// (bands contribute 2). Requires gl.dim = 2.
QtCrossCheck qt_cross_check(HomologyContext& ctx, std::size_t max_len = 8);

}  // namespace gentle

#endif
