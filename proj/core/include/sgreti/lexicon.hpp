#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sgreti/types.hpp"

namespace sgreti {

// How far a lemma lookup is widened around its seed synsets. "Sister" is the
// seeds themselves, child/parent add the direct hyponyms/hypernyms (one
// level, not the transitive closure).
enum class Scope {
    Sister,
    SisterChild,
    SisterParent,
    SisterChildParent,
};

std::optional<Scope> parse_scope(std::string_view name);
std::string_view scope_name(Scope scope);

struct Synset {
    SynsetId id;
    std::vector<std::string> lemmas;    // non-empty, lowercase, '_' joins multiword
    std::set<SynsetId> hypernyms;       // empty for roots

    Pos pos() const { return id.pos(); }
};

// Immutable taxonomy of synsets. Hypernym edges form a DAG (multiple parents
// allowed); depth is counted in nodes along the shortest hypernym path, with
// roots at depth 1.
class Lexicon {
public:
    const Synset& synset(const SynsetId& id) const;
    bool contains(const SynsetId& id) const;
    std::size_t size() const { return synsets_.size(); }

    std::size_t depth(const SynsetId& id) const;

    // All synsets carrying the lemma, optionally restricted to one part of
    // speech. Unknown lemmas yield the empty set.
    std::set<SynsetId> synsets_for_lemma(std::string_view lemma,
                                         std::optional<Pos> pos = std::nullopt) const;

    // Widens the seed set per the scope rules; the result always contains
    // the seeds. Throws on a seed absent from the lexicon.
    std::set<SynsetId> expand_scope(const std::set<SynsetId>& seeds, Scope scope) const;

    // Wu & Palmer similarity: 2*depth(lcs) / (depth(a)+depth(b)), where lcs
    // is the deepest common ancestor (a node counts as its own ancestor).
    // Pairs with no common ancestor (e.g. across parts of speech) score 0.
    double wup_similarity(const SynsetId& a, const SynsetId& b) const;

    // Arithmetic mean of wup_similarity(candidate, r) over the references.
    // Throws on an empty reference set.
    double mean_wup(const SynsetId& candidate, const std::set<SynsetId>& references) const;

    const std::map<SynsetId, Synset>& synsets() const { return synsets_; }

private:
    friend Lexicon load_lexicon(std::istream& source);

    std::set<SynsetId> ancestors(const SynsetId& id) const;

    std::map<SynsetId, Synset> synsets_;
    std::map<std::pair<std::string, Pos>, std::set<SynsetId>> lemma_index_;
    std::map<SynsetId, std::set<SynsetId>> hyponyms_;
    std::map<SynsetId, std::size_t> depth_;
};

// Reads the line-oriented lexicon format:
//   <synset_id> TAB <lemma>[,<lemma>...] TAB [<hypernym_id>[,<hypernym_id>...]]
// Blank lines and lines starting with '#' are skipped. Malformed records,
// dangling hypernym references and hypernym cycles abort the load.
Lexicon load_lexicon(std::istream& source);

}  // namespace sgreti
