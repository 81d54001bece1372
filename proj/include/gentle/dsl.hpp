#ifndef GENTLE_DSL_HPP
#define GENTLE_DSL_HPP

#include <stdexcept>
#include <string>

#include "gentle/quiver.hpp"
#include "gentle/walks.hpp"

namespace gentle {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::size_t offset = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message)
        : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) +
                             ": " + message),
          span_(span),
          message_(message) {}
    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }

private:
    SourceSpan span_;
    std::string message_;
};

/// Line-oriented bound-quiver description:
///   vertices <id>+
///   arrow <name> <src> <tgt>
///   rel <a> <b>        # the path a·b (t(a) = s(b)) is a relation
/// `#` starts a comment. A `rel` with three or more arrows is accepted as a
/// long generator and reported by gentle validation as a G4 violation.
BoundQuiver parse_bound_quiver(const std::string& text);

/// Canonical printer; parse(print(bq)) == bq.
std::string print_bound_quiver(const BoundQuiver& bq);

/// Walk literal: whitespace-separated letters, inverse marked `^-1`
/// (alias trailing `-`); trivial string `e(v)`. Example: "b2 b1^-1 b2".
StringWord parse_word(const BoundQuiver& bq, const std::string& text);
std::string print_word(const BoundQuiver& bq, const StringWord& w);

}  // namespace gentle

#endif
