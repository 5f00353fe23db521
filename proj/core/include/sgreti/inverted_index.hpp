#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sgreti/approximator.hpp"
#include "sgreti/corpus.hpp"
#include "sgreti/types.hpp"

namespace sgreti {

struct TripletKey {
    SynsetId subject;
    SynsetId predicate;
    SynsetId object;

    auto operator<=>(const TripletKey&) const = default;
};

// (subject node, object node) pair of one triplet instance in an image.
using Occurrence = std::pair<std::string, std::string>;

struct Posting {
    std::string image_id;
    std::vector<Occurrence> occurrences;  // non-empty, file order

    bool operator==(const Posting&) const = default;
};

// Synset triplet -> per-image postings. An entry exists iff the corpus
// contains the triplet; posting lists are sorted by image id.
class InvertedIndex {
public:
    const std::vector<Posting>& postings_for(const TripletKey& key) const;

    std::size_t key_count() const { return postings_.size(); }
    const std::map<TripletKey, std::vector<Posting>>& postings() const { return postings_; }

    bool operator==(const InvertedIndex&) const = default;

private:
    friend InvertedIndex build_index(const Corpus& corpus);
    friend InvertedIndex load_index(std::istream& source);

    std::map<TripletKey, std::vector<Posting>> postings_;
};

InvertedIndex build_index(const Corpus& corpus);

// Sorted text table with a version header; one line per (key, image):
//   <subject> TAB <predicate> TAB <object> TAB <image_id> TAB ns,no[;ns,no...]
void save_index(const InvertedIndex& index, std::ostream& sink);
InvertedIndex load_index(std::istream& source);

// Per-image, per-query-triplet candidate matches.
struct CandidateEntry {
    ApproximateTriplet approximate;
    std::vector<Occurrence> occurrences;
};

// image id -> (canonical triplet index -> matched approximates). A triplet
// index is absent when the image matches none of its approximates.
using ImageCandidateMap = std::map<std::string, std::map<int, std::vector<CandidateEntry>>>;

// Inverts the postings of the given approximates: an image appears iff it
// matches at least one approximate of at least one triplet.
ImageCandidateMap assemble_candidates(const InvertedIndex& index,
                                      const std::vector<std::vector<ApproximateTriplet>>& approximates);

}  // namespace sgreti
