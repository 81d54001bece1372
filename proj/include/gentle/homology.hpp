#ifndef GENTLE_HOMOLOGY_HPP
#define GENTLE_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gentle/forbidden.hpp"
#include "gentle/walks.hpp"

namespace gentle {

/// Reference to an indecomposable module over the algebra of a bound
/// quiver.
struct ModuleRef {
    enum class Kind { String, Band, ProjectiveAt, InjectiveAt, SimpleAt };
    Kind kind = Kind::String;
    StringWord word;   // String: the word; Band: the band word
    int vertex = -1;   // ProjectiveAt / InjectiveAt / SimpleAt
    int band_n = 1;    // Band: Jordan block size

    static ModuleRef string(StringWord w) { return {Kind::String, std::move(w), -1, 1}; }
    static ModuleRef band(StringWord b, int n = 1) { return {Kind::Band, std::move(b), -1, n}; }
    static ModuleRef projective_at(int v) { return {Kind::ProjectiveAt, {}, v, 1}; }
    static ModuleRef injective_at(int v) { return {Kind::InjectiveAt, {}, v, 1}; }
    static ModuleRef simple_at(int v) { return {Kind::SimpleAt, {}, v, 1}; }
};

/// Sources (tops) and sinks (socs) of the walk, as vertex multisets keyed
/// by walk position order.
std::vector<int> tops(const BoundQuiver& bq, const StringWord& w);
std::vector<int> socs(const BoundQuiver& bq, const StringWord& w);

/// The string word of the indecomposable projective P(v): the walk
/// p^-1 · q over the two maximal relation-free paths p, q out of v (either
/// branch may be empty). injective_string dually (paths into v).
StringWord projective_string(const BoundQuiver& bq, int v);
StringWord injective_string(const BoundQuiver& bq, int v);

/// Shape of the kernel of the minimal projective cover (or dually the
/// cokernel of the injective envelope): two direct-string overhangs plus
/// one projective (injective) per interior sink (source) of the walk.
/// Empty decomposition <=> the module is projective (injective).
struct SyzygyParts {
    std::optional<StringWord> left, right;
    std::vector<int> interior;  // vertex per interior sink position

    bool empty() const { return !left && !right && interior.empty(); }
};

SyzygyParts syzygy(const BoundQuiver& bq, const StringWord& w);

/// Cosyzygy shape: syzygy over the opposite quiver with the transported
/// word, transported back (interior entries are injectives at the listed
/// vertices).
SyzygyParts cosyzygy(const BoundQuiver& bq, const StringWord& w);

/// Transport of a word to the opposite bound quiver: same walk, every
/// letter's direction flipped (arrow indices are preserved by opposite()).
StringWord transport_to_opposite(const StringWord& w);

/// Endpoint profile of a string: lengths of the compatible maximal
/// forbidden chains at its two ends (0 = absent).
struct EndpointValue {
    int value = 0;
    bool present = false;
    bool unbounded = false;
};

struct EndpointProfile {
    EndpointValue u_left, d_left, u_right, d_right;
};

struct ClosedFormDims {
    Dim pd, id;
    bool applicable = false;  // both per-dimension hypotheses hold
    bool pd_applicable = false;
    bool id_applicable = false;
    EndpointProfile profile;
};

struct HomReport {
    Dim pd, id, sum;
    std::string method;  // "iteration" | "closed_form" | "band_rule"
    bool oracle_checked = false;
};

struct BoundCheck {
    bool sources_ok = true;
    bool sinks_ok = true;
    std::vector<ForbiddenPath> source_witnesses, sink_witnesses;
};

/// sources_ok iff every maximal forbidden path of length >= 2 starts at a
/// strong source; sinks_ok dually.
BoundCheck check_bound_hypotheses(const BoundQuiver& bq);

struct HbResult {
    Dim value;
    std::optional<ModuleRef> witness;
    bool exact = true;
};

struct BoundReport {
    Dim gldim;
    int findim = 0;
    HbResult hb;
    BoundCheck hypotheses;
    bool asserted = false;   // some hypothesis held and the precondition applied
    Dim bound;               // the asserted right-hand side, when asserted
    bool holds = true;       // hb <= bound, when asserted
};

/// Memoizing dimension engine for one bound quiver. Projective dimensions
/// iterate the syzygy decomposition over the finite set of direct strings;
/// a revisit of an in-progress word certifies an infinite resolution.
/// Injective dimensions are computed over the opposite quiver.
class HomologyContext {
public:
    explicit HomologyContext(const BoundQuiver& bq);

    const BoundQuiver& bq() const { return bq_; }
    const BoundQuiver& opposite_bq() const { return op_; }

    Dim proj_dim(const StringWord& w);
    Dim inj_dim(const StringWord& w);
    Dim proj_dim(const ModuleRef& m);
    Dim inj_dim(const ModuleRef& m);
    HomReport dims(const ModuleRef& m);

    bool is_projective_word(const StringWord& w);
    bool is_injective_word(const StringWord& w);

    EndpointProfile endpoint_profile(const StringWord& w) const;
    ClosedFormDims closed_form_dims(const StringWord& w) const;

    /// hb.dim by exhaustive enumeration of strings up to max_len. Exact iff
    /// max_len provably covers every realizable (pd, id) value (see
    /// hb_dim_exact).
    HbResult hb_dim_exhaustive(std::size_t max_len, std::size_t cap = 2'000'000);

    /// Exact hb.dim: lengths 0..2 exhaustively; longer strings through
    /// their (first, last) letter pairs, with the finitely many projective
    /// and injective strings handled individually.
    HbResult hb_dim_exact();

    BoundReport verify_bound();

private:
    struct PdEngine {
        const BoundQuiver* bq = nullptr;
        std::map<StringWord, Dim> memo;
        std::set<StringWord> in_progress;
        Dim pd(const StringWord& w);
    };

    Dim pair_generic_pd(Letter first, Letter last);
    Dim pair_generic_id(Letter first, Letter last);

    BoundQuiver bq_, op_;
    PdEngine pd_engine_, op_pd_engine_;
    std::set<StringWord> projective_words_, injective_words_;
};

}  // namespace gentle

#endif
