#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "sgreti/corpus.hpp"
#include "sgreti/types.hpp"

namespace sgreti {

// Corpus-wide index from a (subject, predicate) pair to the set of object
// synsets witnessed with it. Synsets are unique within an entry.
struct ObjectAggregateGraph {
    std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> entries;

    const std::set<SynsetId>& objects_for(const SynsetId& subject, const SynsetId& predicate) const;

    bool operator==(const ObjectAggregateGraph&) const = default;
};

// (predicate, object) -> witnessed subject synsets.
struct SubjectAggregateGraph {
    std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> entries;

    const std::set<SynsetId>& subjects_for(const SynsetId& predicate, const SynsetId& object) const;

    bool operator==(const SubjectAggregateGraph&) const = default;
};

// (subject, object) -> witnessed predicate synsets. All predicates are kept,
// not a top-k truncation.
struct PredicateAggregateGraph {
    std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> entries;

    const std::set<SynsetId>& predicates_for(const SynsetId& subject, const SynsetId& object) const;

    bool operator==(const PredicateAggregateGraph&) const = default;
};

struct AggregateGraphs {
    SubjectAggregateGraph sag;
    ObjectAggregateGraph oag;
    PredicateAggregateGraph pag;

    bool operator==(const AggregateGraphs&) const = default;
};

// One pass over every triplet instance in the corpus. For each (s,p,o):
// o joins OAG[(s,p)], s joins SAG[(p,o)], p joins PAG[(s,o)].
AggregateGraphs build_aggregates(const Corpus& corpus);

// Sorted text tables: key fields then a comma-joined sorted member list,
// tab-separated, one entry per line.
void save_aggregate_table(const std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>>& table,
                          std::ostream& sink);
std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> load_aggregate_table(
    std::istream& source);

}  // namespace sgreti
