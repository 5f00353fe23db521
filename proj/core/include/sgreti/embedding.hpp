#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sgreti/lexicon.hpp"
#include "sgreti/types.hpp"

namespace sgreti {

using Vector = std::vector<double>;

// Token -> dense vector table loaded from word2vec-style text. Tokens are
// lowercase and space-free; '_' joins the words of a compound.
class EmbeddingStore {
public:
    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return table_.size(); }
    bool contains(const std::string& token) const { return table_.count(token) != 0; }

    // Vector for a token. Compounds (split on '_' or space) resolve as:
    // joined token present -> (v_joined + sum of known component vectors)/2;
    // joined absent -> sum of known component vectors; nothing known ->
    // empty result.
    std::optional<Vector> token_vector(std::string_view token) const;

    // Centroid of the synset's lemma vectors (mean over the lemmas that
    // resolve through token_vector). Empty result when no lemma resolves;
    // throws on a synset absent from the lexicon.
    std::optional<Vector> synset_vector(const Lexicon& lexicon, const SynsetId& synset) const;

private:
    friend EmbeddingStore load_embeddings(std::istream& source);

    std::size_t dimension_ = 0;
    std::unordered_map<std::string, Vector> table_;
};

// Reads "N D" header followed by N rows "token c1 .. cD". Dimension
// mismatches, non-numeric or non-finite components and duplicate tokens
// abort the load.
EmbeddingStore load_embeddings(std::istream& source);

// u.v / (|u||v|). Throws on dimension mismatch or a zero vector.
double cosine_similarity(const Vector& u, const Vector& v);

// Distance in [0,1] between an image-side and a query-side vector:
// 1 - max(0, cosine). A missing (or zero-magnitude) vector on either side is
// unmatchable and scores 1. Throws on dimension mismatch.
double node_distance(const std::optional<Vector>& image_vec,
                     const std::optional<Vector>& query_vec);

}  // namespace sgreti
