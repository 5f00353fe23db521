#include "sgreti/inverted_index.hpp"

#include <string>

#include "sgreti/errors.hpp"
#include "text_util.hpp"

namespace sgreti {

namespace {

constexpr std::string_view kIndexHeader = "sgreti-index\t1";

const std::vector<Posting> kNoPostings;

}  // namespace

const std::vector<Posting>& InvertedIndex::postings_for(const TripletKey& key) const {
    auto it = postings_.find(key);
    return it == postings_.end() ? kNoPostings : it->second;
}

InvertedIndex build_index(const Corpus& corpus) {
    InvertedIndex index;
    // Images iterate in id order, so posting lists come out sorted.
    for (const auto& [image_id, image] : corpus.images) {
        for (const auto& rel : image.relationships) {
            const SceneObject* subject = image.find_object(rel.subject_node);
            const SceneObject* object = image.find_object(rel.object_node);
            TripletKey key{subject->synset, rel.predicate_synset, object->synset};
            auto& postings = index.postings_[key];
            if (postings.empty() || postings.back().image_id != image_id) {
                postings.push_back({image_id, {}});
            }
            postings.back().occurrences.emplace_back(rel.subject_node, rel.object_node);
        }
    }
    return index;
}

void save_index(const InvertedIndex& index, std::ostream& sink) {
    sink << kIndexHeader << '\n';
    for (const auto& [key, postings] : index.postings()) {
        for (const auto& posting : postings) {
            sink << key.subject.str() << '\t' << key.predicate.str() << '\t' << key.object.str()
                 << '\t' << posting.image_id << '\t';
            bool first = true;
            for (const auto& [ns, no] : posting.occurrences) {
                if (!first) sink << ';';
                sink << ns << ',' << no;
                first = false;
            }
            sink << '\n';
        }
    }
}

InvertedIndex load_index(std::istream& source) {
    std::string line;
    if (!std::getline(source, line) || detail::trim(line) != kIndexHeader) {
        throw FormatError("index version mismatch (expected '" + std::string(kIndexHeader) + "')");
    }
    InvertedIndex index;
    std::size_t line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) continue;
        const auto cols = detail::split(text, '\t');
        if (cols.size() != 5) {
            throw FormatError("index row needs 5 tab-separated fields", line_no);
        }
        for (int i = 0; i < 3; ++i) {
            if (!SynsetId::valid(cols[static_cast<std::size_t>(i)])) {
                throw FormatError("invalid synset id in index", line_no);
            }
        }
        TripletKey key{SynsetId(std::string(cols[0])), SynsetId(std::string(cols[1])),
                       SynsetId(std::string(cols[2]))};
        Posting posting;
        posting.image_id = std::string(cols[3]);
        for (const auto pair_text : detail::split(cols[4], ';')) {
            const auto pair = detail::split(pair_text, ',');
            if (pair.size() != 2 || pair[0].empty() || pair[1].empty()) {
                throw FormatError("invalid occurrence pair in index", line_no);
            }
            posting.occurrences.emplace_back(std::string(pair[0]), std::string(pair[1]));
        }
        if (posting.occurrences.empty()) {
            throw FormatError("index posting with no occurrences", line_no);
        }
        auto& postings = index.postings_[key];
        if (!postings.empty() && postings.back().image_id >= posting.image_id) {
            throw FormatError("index postings out of order", line_no);
        }
        postings.push_back(std::move(posting));
    }
    return index;
}

ImageCandidateMap assemble_candidates(
    const InvertedIndex& index,
    const std::vector<std::vector<ApproximateTriplet>>& approximates) {
    ImageCandidateMap out;
    for (const auto& triplet_approximates : approximates) {
        for (const auto& approx : triplet_approximates) {
            const auto& postings =
                index.postings_for({approx.subject, approx.predicate, approx.object});
            for (const auto& posting : postings) {
                out[posting.image_id][approx.source_triplet].push_back(
                    {approx, posting.occurrences});
            }
        }
    }
    return out;
}

}  // namespace sgreti
