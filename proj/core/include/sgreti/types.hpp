#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sgreti {

// Part-of-speech tag as embedded in synset identifiers.
enum class Pos : char {
    Noun = 'n',
    Verb = 'v',
    Adjective = 'a',
    Adverb = 'r',
};

std::optional<Pos> parse_pos(char c);

// Identifier of a lexical sense, e.g. "girl.n.01". The value is validated on
// construction: `head.pos.nn` where head is non-empty lowercase
// [a-z0-9_.-]+, pos is one of n/v/a/r and nn is two digits.
class SynsetId {
public:
    SynsetId() = default;
    explicit SynsetId(std::string value);

    static bool valid(std::string_view value);

    const std::string& str() const { return value_; }
    Pos pos() const;

    // The lemma-shaped head of the id ("girl" for "girl.n.01").
    std::string_view head() const;

    bool empty() const { return value_.empty(); }

    auto operator<=>(const SynsetId&) const = default;

private:
    std::string value_;
};

inline std::ostream& operator<<(std::ostream& os, const SynsetId& id) { return os << id.str(); }

}  // namespace sgreti
