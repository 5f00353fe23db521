#include "sgreti/approximator.hpp"

#include <algorithm>
#include <cmath>

#include "sgreti/errors.hpp"
#include "sgreti/inverted_index.hpp"

namespace sgreti {

std::set<SynsetId> role_candidates(const Lexicon& lexicon, const std::string& label,
                                   std::optional<Pos> pos, Scope scope,
                                   std::size_t max_candidates) {
    const auto seeds = lexicon.synsets_for_lemma(label, pos);
    if (seeds.empty()) return {};
    std::set<SynsetId> expanded = lexicon.expand_scope(seeds, scope);
    while (expanded.size() > max_candidates) {
        expanded.erase(std::prev(expanded.end()));
    }
    return expanded;
}

namespace {

std::set<SynsetId> restrict_to_witnessed(
    const std::set<SynsetId>& candidates, const std::set<SynsetId>& first_keys,
    const std::set<SynsetId>& second_keys,
    const std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>>& entries) {
    std::set<SynsetId> witnessed;
    for (const auto& a : first_keys) {
        for (const auto& b : second_keys) {
            auto it = entries.find({a, b});
            if (it != entries.end()) witnessed.insert(it->second.begin(), it->second.end());
        }
    }
    std::set<SynsetId> out;
    std::set_intersection(candidates.begin(), candidates.end(), witnessed.begin(),
                          witnessed.end(), std::inserter(out, out.begin()));
    return out;
}

}  // namespace

std::set<SynsetId> plausible_subjects(const std::set<SynsetId>& candidates,
                                      const std::set<SynsetId>& predicate_candidates,
                                      const std::set<SynsetId>& object_candidates,
                                      const SubjectAggregateGraph& sag) {
    return restrict_to_witnessed(candidates, predicate_candidates, object_candidates, sag.entries);
}

std::set<SynsetId> plausible_objects(const std::set<SynsetId>& candidates,
                                     const std::set<SynsetId>& subject_candidates,
                                     const std::set<SynsetId>& predicate_candidates,
                                     const ObjectAggregateGraph& oag) {
    return restrict_to_witnessed(candidates, subject_candidates, predicate_candidates, oag.entries);
}

namespace {

std::size_t keep_count(double keep_fraction, std::size_t n) {
    if (n == 0) return 0;
    // Small slack so fractions like 2/3 round to the intended ceiling.
    auto k = static_cast<std::size_t>(
        std::ceil(keep_fraction * static_cast<double>(n) - 1e-9));
    return std::clamp<std::size_t>(k, 1, n);
}

}  // namespace

std::vector<SynsetId> rank_predicates(const Lexicon& lexicon, const std::set<SynsetId>& plausible,
                                      const std::set<SynsetId>& sister_predicates,
                                      double keep_fraction) {
    if (sister_predicates.empty()) {
        throw Error("rank_predicates: empty sister set");
    }
    std::vector<std::pair<SynsetId, double>> scored;
    scored.reserve(plausible.size());
    for (const auto& p : plausible) {
        scored.emplace_back(p, lexicon.mean_wup(p, sister_predicates));
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    scored.resize(keep_count(keep_fraction, scored.size()));
    std::vector<SynsetId> out;
    out.reserve(scored.size());
    for (auto& [id, _] : scored) out.push_back(std::move(id));
    return out;
}

std::vector<ApproximateTriplet> generate_approximates(const CanonicalTriplet& triplet,
                                                      const Lexicon& lexicon,
                                                      const AggregateGraphs& aggregates,
                                                      const InvertedIndex& index,
                                                      const ApproxConfig& config,
                                                      ApproxTrace* trace) {
    const auto cap = config.max_candidates_per_role;
    const auto subject_cands =
        role_candidates(lexicon, triplet.subject_label, Pos::Noun, config.subject_scope, cap);
    const auto object_cands =
        role_candidates(lexicon, triplet.object_label, Pos::Noun, config.object_scope, cap);
    // Predicates are looked up across every part of speech: scene-graph
    // predicates span verbs, prepositions (adverb synsets) and adjectives.
    const auto predicate_cands = role_candidates(lexicon, triplet.predicate_label, std::nullopt,
                                                 config.predicate_scope, cap);
    const auto sister_predicates =
        lexicon.synsets_for_lemma(triplet.predicate_label, std::nullopt);

    if (trace) {
        trace->subject_candidates = subject_cands;
        trace->predicate_candidates = predicate_cands;
        trace->object_candidates = object_cands;
    }

    const auto plausible_s =
        plausible_subjects(subject_cands, predicate_cands, object_cands, aggregates.sag);
    const auto plausible_o =
        plausible_objects(object_cands, subject_cands, predicate_cands, aggregates.oag);
    if (trace) {
        trace->plausible_subject_set = plausible_s;
        trace->plausible_object_set = plausible_o;
    }
    if (plausible_s.empty() || plausible_o.empty() || sister_predicates.empty()) {
        return {};
    }

    // Plausible predicates: the aggregate-witnessed set over the plausible
    // subject/object pairs, unioned with the raw predicate candidates.
    std::set<SynsetId> plausible_p = predicate_cands;
    for (const auto& s : plausible_s) {
        for (const auto& o : plausible_o) {
            const auto& witnessed = aggregates.pag.predicates_for(s, o);
            plausible_p.insert(witnessed.begin(), witnessed.end());
        }
    }
    const auto kept =
        rank_predicates(lexicon, plausible_p, sister_predicates, config.predicate_keep_fraction);
    if (trace) {
        for (const auto& p : plausible_p) {
            trace->predicate_scores.emplace_back(p, lexicon.mean_wup(p, sister_predicates));
        }
        std::stable_sort(trace->predicate_scores.begin(), trace->predicate_scores.end(),
                         [](const auto& a, const auto& b) {
                             if (a.second != b.second) return a.second > b.second;
                             return a.first < b.first;
                         });
        trace->kept_predicates = kept;
    }

    std::set<SynsetId> kept_sorted(kept.begin(), kept.end());
    std::vector<ApproximateTriplet> out;
    for (const auto& s : plausible_s) {
        for (const auto& p : kept_sorted) {
            for (const auto& o : plausible_o) {
                const auto& postings = index.postings_for({s, p, o});
                if (postings.empty()) continue;
                ApproximateTriplet a;
                a.subject = s;
                a.predicate = p;
                a.object = o;
                a.source_triplet = triplet.index;
                a.grounding = {{Role::Subject, triplet.subject_handle},
                               {Role::Predicate, triplet.predicate_handle},
                               {Role::Object, triplet.object_handle}};
                if (trace) trace->approximates.emplace_back(a, postings.size());
                out.push_back(std::move(a));
            }
        }
    }
    return out;
}

}  // namespace sgreti
