#include "sgreti/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "sgreti/errors.hpp"
#include "text_util.hpp"

namespace sgreti {

namespace {

constexpr std::string_view kCorpusHeader = "sgreti-corpus\t1";
constexpr std::string_view kChecksumPrefix = "#checksum\t";

// Node ids and labels travel through tab/pipe/comma-structured files; keep
// the structural characters out of them.
bool valid_token(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c == '|' || c == '\t' || c == ' ' || c == ',' || c == ';') return false;
    }
    return true;
}

ImageGraph parse_image_line(std::string_view text, const Lexicon& lexicon, std::size_t line_no) {
    const auto records = detail::split(text, '|');
    ImageGraph image;
    {
        const auto id = detail::trim(records[0]);
        if (!valid_token(id)) {
            throw FormatError("invalid image id '" + std::string(id) + "'", line_no);
        }
        image.image_id = std::string(id);
    }
    std::map<std::string, std::size_t> node_index;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto record = detail::trim(records[r]);
        if (record.empty()) {
            throw FormatError("empty record in image '" + image.image_id + "'", line_no);
        }
        if (record.rfind("uri=", 0) == 0) {
            image.uri = std::string(record.substr(4));
            continue;
        }
        const auto fields = detail::split_fields(record);
        if (fields[0] == "obj") {
            if (fields.size() != 4) {
                throw FormatError("obj record needs <node_id> <synset> <label> in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            SceneObject obj;
            if (!valid_token(fields[1])) {
                throw FormatError("invalid node id '" + std::string(fields[1]) + "' in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            obj.node_id = std::string(fields[1]);
            if (!SynsetId::valid(fields[2])) {
                throw FormatError("invalid synset '" + std::string(fields[2]) + "' in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            obj.synset = SynsetId(std::string(fields[2]));
            if (!lexicon.contains(obj.synset)) {
                throw FormatError("unknown synset '" + obj.synset.str() + "' in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            obj.label = std::string(fields[3]);
            if (node_index.count(obj.node_id)) {
                throw FormatError("duplicate node id '" + obj.node_id + "' in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            node_index[obj.node_id] = image.objects.size();
            image.objects.push_back(std::move(obj));
        } else if (fields[0] == "rel") {
            if (fields.size() != 5) {
                throw FormatError(
                    "rel record needs <subject> <synset> <label> <object> in image '" +
                        image.image_id + "'",
                    line_no);
            }
            RelationshipInstance rel;
            rel.subject_node = std::string(fields[1]);
            if (!SynsetId::valid(fields[2])) {
                throw FormatError("invalid synset '" + std::string(fields[2]) + "' in image '" +
                                      image.image_id + "'",
                                  line_no);
            }
            rel.predicate_synset = SynsetId(std::string(fields[2]));
            if (!lexicon.contains(rel.predicate_synset)) {
                throw FormatError("unknown synset '" + rel.predicate_synset.str() +
                                      "' in image '" + image.image_id + "'",
                                  line_no);
            }
            rel.predicate_label = std::string(fields[3]);
            rel.object_node = std::string(fields[4]);
            for (const auto& node : {rel.subject_node, rel.object_node}) {
                if (!node_index.count(node)) {
                    throw FormatError("dangling node reference '" + node + "' in image '" +
                                          image.image_id + "'",
                                      line_no);
                }
            }
            if (rel.subject_node == rel.object_node) {
                throw FormatError("self-relationship on node '" + rel.subject_node +
                                      "' in image '" + image.image_id + "'",
                                  line_no);
            }
            image.relationships.push_back(std::move(rel));
        } else {
            throw FormatError("unknown record '" + std::string(fields[0]) + "' in image '" +
                                  image.image_id + "'",
                              line_no);
        }
    }
    if (image.relationships.empty()) {
        throw FormatError("image '" + image.image_id + "' has no relationships", line_no);
    }
    return image;
}

std::string format_image_line(const ImageGraph& image) {
    std::string out = image.image_id;
    if (image.uri) {
        out += "|uri=";
        out += *image.uri;
    }
    for (const auto& obj : image.objects) {
        out += "|obj " + obj.node_id + " " + obj.synset.str() + " " + obj.label;
    }
    for (const auto& rel : image.relationships) {
        out += "|rel " + rel.subject_node + " " + rel.predicate_synset.str() + " " +
               rel.predicate_label + " " + rel.object_node;
    }
    return out;
}

}  // namespace

const SceneObject* ImageGraph::find_object(const std::string& node_id) const {
    for (const auto& obj : objects) {
        if (obj.node_id == node_id) return &obj;
    }
    return nullptr;
}

std::size_t Corpus::relationship_count() const {
    std::size_t n = 0;
    for (const auto& [_, image] : images) n += image.relationships.size();
    return n;
}

std::vector<CanonicalInstance> canonical_instances(const Corpus& corpus,
                                                   const std::string& image_id) {
    auto it = corpus.images.find(image_id);
    if (it == corpus.images.end()) {
        throw Error("unknown image '" + image_id + "'");
    }
    const ImageGraph& image = it->second;
    std::vector<CanonicalInstance> out;
    out.reserve(image.relationships.size());
    for (const auto& rel : image.relationships) {
        out.push_back({&rel, image.find_object(rel.subject_node),
                       image.find_object(rel.object_node)});
    }
    return out;
}

Corpus ingest_scene_graphs(std::istream& source, const Lexicon& lexicon) {
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        ImageGraph image = parse_image_line(text, lexicon, line_no);
        if (corpus.images.count(image.image_id)) {
            throw FormatError("duplicate image id '" + image.image_id + "'", line_no);
        }
        corpus.images.emplace(image.image_id, std::move(image));
    }
    if (corpus.images.empty()) {
        throw FormatError("empty corpus");
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, std::ostream& sink) {
    std::string payload;
    for (const auto& [_, image] : corpus.images) {
        payload += format_image_line(image);
        payload.push_back('\n');
    }
    sink << kCorpusHeader << '\n'
         << payload << kChecksumPrefix << detail::to_hex16(detail::fnv1a64(payload)) << '\n';
}

Corpus load_corpus(std::istream& source, const Lexicon& lexicon) {
    std::string header;
    if (!std::getline(source, header) || detail::trim(header) != kCorpusHeader) {
        throw FormatError("corpus version mismatch (expected '" + std::string(kCorpusHeader) +
                          "')");
    }

    std::string payload;
    std::string line;
    std::optional<std::string> checksum_line;
    std::vector<std::string> body;
    while (std::getline(source, line)) {
        if (std::string_view(line).rfind(kChecksumPrefix, 0) == 0) {
            checksum_line = line;
            break;
        }
        payload.append(line).push_back('\n');
        body.push_back(line);
    }
    if (!checksum_line) {
        throw FormatError("corpus corrupted: missing checksum trailer");
    }
    const auto expected = detail::trim(checksum_line->substr(kChecksumPrefix.size()));
    if (expected != detail::to_hex16(detail::fnv1a64(payload))) {
        throw FormatError("corpus corrupted: checksum mismatch");
    }

    Corpus corpus;
    std::size_t line_no = 1;
    for (const auto& body_line : body) {
        ++line_no;
        const auto text = detail::trim(body_line);
        if (text.empty() || text.front() == '#') continue;
        ImageGraph image = parse_image_line(text, lexicon, line_no);
        if (corpus.images.count(image.image_id)) {
            throw FormatError("duplicate image id '" + image.image_id + "'", line_no);
        }
        corpus.images.emplace(image.image_id, std::move(image));
    }
    if (corpus.images.empty()) {
        throw FormatError("empty corpus");
    }
    return corpus;
}

}  // namespace sgreti
