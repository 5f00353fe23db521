#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgreti/lexicon.hpp"
#include "sgreti/types.hpp"

namespace sgreti {

struct SceneObject {
    std::string node_id;  // unique within its image
    SynsetId synset;
    std::string label;  // natural-language name, '_' joins words

    bool operator==(const SceneObject&) const = default;
};

struct RelationshipInstance {
    std::string subject_node;
    SynsetId predicate_synset;
    std::string predicate_label;
    std::string object_node;

    bool operator==(const RelationshipInstance&) const = default;
};

struct ImageGraph {
    std::string image_id;
    std::vector<SceneObject> objects;  // file order
    std::vector<RelationshipInstance> relationships;
    std::optional<std::string> uri;

    const SceneObject* find_object(const std::string& node_id) const;

    bool operator==(const ImageGraph&) const = default;
};

struct Corpus {
    std::map<std::string, ImageGraph> images;

    std::size_t relationship_count() const;

    bool operator==(const Corpus&) const = default;
};

struct CanonicalInstance {
    const RelationshipInstance* relationship;
    const SceneObject* subject;
    const SceneObject* object;
};

// The image's triplet instances with endpoints resolved, in file order.
// Throws on an unknown image id.
std::vector<CanonicalInstance> canonical_instances(const Corpus& corpus,
                                                   const std::string& image_id);

// Reads the pipe-record scene-graph format (one image per line):
//   <image_id>|uri=...|obj <node_id> <synset> <label>|rel <subj> <pred_synset> <pred_label> <obj>
// Every synset must resolve in the lexicon; node references must resolve
// within the image; image ids must be unique; an empty corpus is rejected.
Corpus ingest_scene_graphs(std::istream& source, const Lexicon& lexicon);

// Persisted corpus: a version header, the image lines (sorted by image id)
// and a checksum trailer. load_corpus(save_corpus(c)) reproduces c.
void save_corpus(const Corpus& corpus, std::ostream& sink);
Corpus load_corpus(std::istream& source, const Lexicon& lexicon);

}  // namespace sgreti
