#include "sgreti/types.hpp"

#include "sgreti/errors.hpp"

namespace sgreti {

std::optional<Pos> parse_pos(char c) {
    switch (c) {
        case 'n': return Pos::Noun;
        case 'v': return Pos::Verb;
        case 'a': return Pos::Adjective;
        case 'r': return Pos::Adverb;
        default: return std::nullopt;
    }
}

namespace {

bool head_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

}  // namespace

bool SynsetId::valid(std::string_view value) {
    // head '.' pos '.' dd  => minimum length 6 ("x.n.01")
    if (value.size() < 6) return false;
    const auto n = value.size();
    if (value[n - 3] != '.' || value[n - 5] != '.') return false;
    if (!parse_pos(value[n - 4])) return false;
    if (value[n - 2] < '0' || value[n - 2] > '9') return false;
    if (value[n - 1] < '0' || value[n - 1] > '9') return false;
    const auto head = value.substr(0, n - 5);
    if (head.empty()) return false;
    for (char c : head) {
        if (!head_char(c)) return false;
    }
    return true;
}

SynsetId::SynsetId(std::string value) : value_(std::move(value)) {
    if (!valid(value_)) {
        throw Error("invalid synset id '" + value_ + "'");
    }
}

Pos SynsetId::pos() const { return *parse_pos(value_[value_.size() - 4]); }

std::string_view SynsetId::head() const {
    return std::string_view(value_).substr(0, value_.size() - 5);
}

}  // namespace sgreti
