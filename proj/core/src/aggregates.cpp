#include "sgreti/aggregates.hpp"

#include <string>

#include "sgreti/errors.hpp"
#include "text_util.hpp"

namespace sgreti {

namespace {

const std::set<SynsetId> kEmpty;

const std::set<SynsetId>& lookup(
    const std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>>& entries,
    const SynsetId& first, const SynsetId& second) {
    auto it = entries.find({first, second});
    return it == entries.end() ? kEmpty : it->second;
}

}  // namespace

const std::set<SynsetId>& ObjectAggregateGraph::objects_for(const SynsetId& subject,
                                                            const SynsetId& predicate) const {
    return lookup(entries, subject, predicate);
}

const std::set<SynsetId>& SubjectAggregateGraph::subjects_for(const SynsetId& predicate,
                                                              const SynsetId& object) const {
    return lookup(entries, predicate, object);
}

const std::set<SynsetId>& PredicateAggregateGraph::predicates_for(const SynsetId& subject,
                                                                  const SynsetId& object) const {
    return lookup(entries, subject, object);
}

AggregateGraphs build_aggregates(const Corpus& corpus) {
    AggregateGraphs out;
    for (const auto& [_, image] : corpus.images) {
        for (const auto& instance : canonical_instances(corpus, image.image_id)) {
            const SynsetId& s = instance.subject->synset;
            const SynsetId& p = instance.relationship->predicate_synset;
            const SynsetId& o = instance.object->synset;
            out.oag.entries[{s, p}].insert(o);
            out.sag.entries[{p, o}].insert(s);
            out.pag.entries[{s, o}].insert(p);
        }
    }
    return out;
}

void save_aggregate_table(const std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>>& table,
                          std::ostream& sink) {
    for (const auto& [key, members] : table) {
        sink << key.first.str() << '\t' << key.second.str() << '\t';
        bool first = true;
        for (const auto& m : members) {
            if (!first) sink << ',';
            sink << m.str();
            first = false;
        }
        sink << '\n';
    }
}

std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> load_aggregate_table(
    std::istream& source) {
    std::map<std::pair<SynsetId, SynsetId>, std::set<SynsetId>> table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) continue;
        const auto cols = detail::split(text, '\t');
        if (cols.size() != 3) {
            throw FormatError("aggregate table row needs 3 tab-separated fields", line_no);
        }
        if (!SynsetId::valid(cols[0]) || !SynsetId::valid(cols[1])) {
            throw FormatError("invalid synset id in aggregate table", line_no);
        }
        std::pair<SynsetId, SynsetId> key{SynsetId(std::string(cols[0])),
                                          SynsetId(std::string(cols[1]))};
        std::set<SynsetId> members;
        for (const auto member : detail::split(cols[2], ',')) {
            if (!SynsetId::valid(member)) {
                throw FormatError("invalid synset id in aggregate table", line_no);
            }
            members.insert(SynsetId(std::string(member)));
        }
        if (members.empty()) {
            throw FormatError("aggregate table entry with no members", line_no);
        }
        if (!table.emplace(std::move(key), std::move(members)).second) {
            throw FormatError("duplicate aggregate table key", line_no);
        }
    }
    return table;
}

}  // namespace sgreti
