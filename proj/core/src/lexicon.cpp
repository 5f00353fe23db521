#include "sgreti/lexicon.hpp"

#include <algorithm>
#include <deque>

#include "sgreti/errors.hpp"
#include "text_util.hpp"

namespace sgreti {

std::optional<Scope> parse_scope(std::string_view name) {
    if (name == "sister") return Scope::Sister;
    if (name == "sister-child") return Scope::SisterChild;
    if (name == "sister-parent") return Scope::SisterParent;
    if (name == "sister-child-parent") return Scope::SisterChildParent;
    return std::nullopt;
}

std::string_view scope_name(Scope scope) {
    switch (scope) {
        case Scope::Sister: return "sister";
        case Scope::SisterChild: return "sister-child";
        case Scope::SisterParent: return "sister-parent";
        case Scope::SisterChildParent: return "sister-child-parent";
    }
    return "sister";
}

const Synset& Lexicon::synset(const SynsetId& id) const {
    auto it = synsets_.find(id);
    if (it == synsets_.end()) {
        throw Error("unknown synset '" + id.str() + "'");
    }
    return it->second;
}

bool Lexicon::contains(const SynsetId& id) const { return synsets_.count(id) != 0; }

std::size_t Lexicon::depth(const SynsetId& id) const {
    auto it = depth_.find(id);
    if (it == depth_.end()) {
        throw Error("unknown synset '" + id.str() + "'");
    }
    return it->second;
}

std::set<SynsetId> Lexicon::synsets_for_lemma(std::string_view lemma,
                                              std::optional<Pos> pos) const {
    std::set<SynsetId> out;
    if (pos) {
        auto it = lemma_index_.find({std::string(lemma), *pos});
        if (it != lemma_index_.end()) out = it->second;
        return out;
    }
    for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb}) {
        auto it = lemma_index_.find({std::string(lemma), p});
        if (it != lemma_index_.end()) out.insert(it->second.begin(), it->second.end());
    }
    return out;
}

std::set<SynsetId> Lexicon::expand_scope(const std::set<SynsetId>& seeds, Scope scope) const {
    std::set<SynsetId> out;
    const bool children = scope == Scope::SisterChild || scope == Scope::SisterChildParent;
    const bool parents = scope == Scope::SisterParent || scope == Scope::SisterChildParent;
    for (const auto& seed : seeds) {
        const Synset& s = synset(seed);  // throws on unknown seed
        out.insert(seed);
        if (children) {
            auto it = hyponyms_.find(seed);
            if (it != hyponyms_.end()) out.insert(it->second.begin(), it->second.end());
        }
        if (parents) {
            out.insert(s.hypernyms.begin(), s.hypernyms.end());
        }
    }
    return out;
}

std::set<SynsetId> Lexicon::ancestors(const SynsetId& id) const {
    std::set<SynsetId> seen{id};
    std::deque<SynsetId> frontier{id};
    while (!frontier.empty()) {
        const Synset& s = synset(frontier.front());
        frontier.pop_front();
        for (const auto& h : s.hypernyms) {
            if (seen.insert(h).second) frontier.push_back(h);
        }
    }
    return seen;
}

double Lexicon::wup_similarity(const SynsetId& a, const SynsetId& b) const {
    const auto anc_a = ancestors(a);
    const auto anc_b = ancestors(b);
    std::size_t lcs_depth = 0;
    for (const auto& c : anc_a) {
        if (anc_b.count(c)) lcs_depth = std::max(lcs_depth, depth(c));
    }
    if (lcs_depth == 0) return 0.0;
    return 2.0 * static_cast<double>(lcs_depth) /
           static_cast<double>(depth(a) + depth(b));
}

double Lexicon::mean_wup(const SynsetId& candidate, const std::set<SynsetId>& references) const {
    if (references.empty()) {
        throw Error("mean_wup: empty reference set");
    }
    double sum = 0.0;
    for (const auto& r : references) sum += wup_similarity(candidate, r);
    return sum / static_cast<double>(references.size());
}

namespace {

bool valid_lemma(std::string_view lemma) {
    if (lemma.empty()) return false;
    for (char c : lemma) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                        c == '_' || c == '.' || c == '-' || c == '\'';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

Lexicon load_lexicon(std::istream& source) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::string_view text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;

        const auto cols = detail::split(text, '\t');
        if (cols.size() != 2 && cols.size() != 3) {
            throw FormatError("expected 2 or 3 tab-separated fields, got " +
                                  std::to_string(cols.size()),
                              line_no);
        }
        if (!SynsetId::valid(cols[0])) {
            throw FormatError("invalid synset id '" + std::string(cols[0]) + "'", line_no);
        }
        Synset s;
        s.id = SynsetId(std::string(cols[0]));
        for (auto lemma : detail::split(cols[1], ',')) {
            lemma = detail::trim(lemma);
            if (!valid_lemma(lemma)) {
                throw FormatError("invalid lemma '" + std::string(lemma) + "'", line_no);
            }
            std::string l(lemma);
            if (std::find(s.lemmas.begin(), s.lemmas.end(), l) != s.lemmas.end()) {
                throw FormatError("duplicate lemma '" + l + "' in " + s.id.str(), line_no);
            }
            s.lemmas.push_back(std::move(l));
        }
        if (s.lemmas.empty()) {
            throw FormatError("synset " + s.id.str() + " has no lemmas", line_no);
        }
        if (cols.size() == 3 && !detail::trim(cols[2]).empty()) {
            for (auto hyp : detail::split(cols[2], ',')) {
                hyp = detail::trim(hyp);
                if (!SynsetId::valid(hyp)) {
                    throw FormatError("invalid hypernym id '" + std::string(hyp) + "'", line_no);
                }
                s.hypernyms.insert(SynsetId(std::string(hyp)));
            }
        }
        if (lex.synsets_.count(s.id)) {
            throw FormatError("duplicate synset '" + s.id.str() + "'", line_no);
        }
        lex.synsets_.emplace(s.id, std::move(s));
    }

    // Resolve references and build the inverse indexes.
    for (const auto& [id, s] : lex.synsets_) {
        for (const auto& h : s.hypernyms) {
            if (!lex.synsets_.count(h)) {
                throw FormatError("dangling hypernym reference '" + h.str() + "' in " + id.str());
            }
            lex.hyponyms_[h].insert(id);
        }
        for (const auto& lemma : s.lemmas) {
            lex.lemma_index_[{lemma, s.pos()}].insert(id);
        }
    }

    // Depth via iterative DFS; a grey node seen twice is a hypernym cycle.
    enum class Mark { White, Grey, Black };
    std::map<SynsetId, Mark> mark;
    for (const auto& [root_id, _] : lex.synsets_) {
        if (mark[root_id] == Mark::Black) continue;
        std::vector<std::pair<SynsetId, bool>> stack{{root_id, false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                const Synset& s = lex.synsets_.at(id);
                std::size_t d = 1;
                if (!s.hypernyms.empty()) {
                    std::size_t best = SIZE_MAX;
                    for (const auto& h : s.hypernyms) best = std::min(best, lex.depth_.at(h));
                    d = best + 1;
                }
                lex.depth_[id] = d;
                mark[id] = Mark::Black;
                continue;
            }
            if (mark[id] == Mark::Black) continue;
            if (mark[id] == Mark::Grey) {
                throw FormatError("hypernym cycle through '" + id.str() + "'");
            }
            mark[id] = Mark::Grey;
            stack.push_back({id, true});
            for (const auto& h : lex.synsets_.at(id).hypernyms) {
                if (mark[h] == Mark::Grey) {
                    throw FormatError("hypernym cycle through '" + h.str() + "'");
                }
                if (mark[h] == Mark::White) stack.push_back({h, false});
            }
        }
    }
    return lex;
}

}  // namespace sgreti
