#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgreti/aggregates.hpp"
#include "sgreti/lexicon.hpp"
#include "sgreti/query.hpp"
#include "sgreti/types.hpp"

namespace sgreti {

class InvertedIndex;

struct ApproxConfig {
    Scope subject_scope = Scope::Sister;
    Scope object_scope = Scope::Sister;
    Scope predicate_scope = Scope::SisterChild;
    double predicate_keep_fraction = 2.0 / 3.0;  // in (0,1]
    std::size_t max_candidates_per_role = 64;
};

enum class Role { Subject, Predicate, Object };

// A synset triplet semantically similar to one canonical query triplet and
// witnessed by the corpus. Grounding maps each role back to the query node
// handle it instantiates.
struct ApproximateTriplet {
    SynsetId subject;
    SynsetId predicate;
    SynsetId object;
    int source_triplet = 0;
    std::map<Role, std::string> grounding;

    bool operator==(const ApproximateTriplet&) const = default;
};

// Scope-expanded synsets for one query label, truncated deterministically
// (sorted by id) at the candidate cap. Unknown labels yield the empty set.
std::set<SynsetId> role_candidates(const Lexicon& lexicon, const std::string& label,
                                   std::optional<Pos> pos, Scope scope,
                                   std::size_t max_candidates);

// Candidates restricted to those witnessed by the aggregate graph under any
// cross-product key from the other two roles' candidate sets.
std::set<SynsetId> plausible_subjects(const std::set<SynsetId>& candidates,
                                      const std::set<SynsetId>& predicate_candidates,
                                      const std::set<SynsetId>& object_candidates,
                                      const SubjectAggregateGraph& sag);
std::set<SynsetId> plausible_objects(const std::set<SynsetId>& candidates,
                                     const std::set<SynsetId>& subject_candidates,
                                     const std::set<SynsetId>& predicate_candidates,
                                     const ObjectAggregateGraph& oag);

// Scores every plausible predicate by its mean WUP similarity against the
// sister set, sorts descending (ties ascending by id) and keeps the top
// ceil(keep_fraction * n). Throws on an empty sister set.
std::vector<SynsetId> rank_predicates(const Lexicon& lexicon, const std::set<SynsetId>& plausible,
                                      const std::set<SynsetId>& sister_predicates,
                                      double keep_fraction);

// Step-by-step record of one triplet's approximation, for --explain output.
struct ApproxTrace {
    std::set<SynsetId> subject_candidates;
    std::set<SynsetId> predicate_candidates;
    std::set<SynsetId> object_candidates;
    std::set<SynsetId> plausible_subject_set;
    std::set<SynsetId> plausible_object_set;
    std::vector<std::pair<SynsetId, double>> predicate_scores;  // rank order
    std::vector<SynsetId> kept_predicates;
    std::vector<std::pair<ApproximateTriplet, std::size_t>> approximates;  // with posting counts
};

// Full approximation for one canonical triplet: candidate generation per
// role, aggregate-graph plausibility restriction, WUP-ranked predicate
// truncation, then the cross product filtered to triplets that exist in the
// inverted index. Deterministic (sorted) order; may be empty.
std::vector<ApproximateTriplet> generate_approximates(const CanonicalTriplet& triplet,
                                                      const Lexicon& lexicon,
                                                      const AggregateGraphs& aggregates,
                                                      const InvertedIndex& index,
                                                      const ApproxConfig& config,
                                                      ApproxTrace* trace = nullptr);

}  // namespace sgreti
