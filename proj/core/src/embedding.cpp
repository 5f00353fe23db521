#include "sgreti/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "sgreti/errors.hpp"
#include "text_util.hpp"

namespace sgreti {

namespace {

std::vector<std::string> split_components(std::string_view token) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : token) {
        if (c == '_' || c == ' ') {
            if (!current.empty()) parts.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(std::move(current));
    return parts;
}

void add_into(Vector& acc, const Vector& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

}  // namespace

std::optional<Vector> EmbeddingStore::token_vector(std::string_view token) const {
    const auto parts = split_components(token);
    if (parts.empty()) return std::nullopt;
    if (parts.size() == 1) {
        auto it = table_.find(parts[0]);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    std::string joined;
    for (const auto& p : parts) {
        if (!joined.empty()) joined.push_back('_');
        joined += p;
    }

    Vector component_sum(dimension_, 0.0);
    std::size_t known = 0;
    for (const auto& p : parts) {
        auto it = table_.find(p);
        if (it != table_.end()) {
            add_into(component_sum, it->second);
            ++known;
        }
    }

    auto joined_it = table_.find(joined);
    if (joined_it != table_.end()) {
        Vector out = joined_it->second;
        add_into(out, component_sum);
        for (auto& c : out) c *= 0.5;
        return out;
    }
    if (known > 0) return component_sum;
    return std::nullopt;
}

std::optional<Vector> EmbeddingStore::synset_vector(const Lexicon& lexicon,
                                                    const SynsetId& synset) const {
    const Synset& s = lexicon.synset(synset);
    Vector sum(dimension_, 0.0);
    std::size_t resolved = 0;
    for (const auto& lemma : s.lemmas) {
        if (auto v = token_vector(lemma)) {
            add_into(sum, *v);
            ++resolved;
        }
    }
    if (resolved == 0) return std::nullopt;
    for (auto& c : sum) c /= static_cast<double>(resolved);
    return sum;
}

EmbeddingStore load_embeddings(std::istream& source) {
    EmbeddingStore store;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(source, line)) {
        throw FormatError("missing embedding header");
    }
    ++line_no;
    const auto header = detail::split_fields(detail::trim(line));
    std::size_t count = 0, dim = 0;
    if (header.size() != 2 || !detail::parse_size(header[0], count) ||
        !detail::parse_size(header[1], dim) || dim == 0) {
        throw FormatError("bad embedding header, expected 'N D'", line_no);
    }
    store.dimension_ = dim;

    std::size_t rows = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) continue;
        const auto fields = detail::split_fields(text);
        if (fields.size() != dim + 1) {
            throw FormatError("expected token + " + std::to_string(dim) + " components, got " +
                                  std::to_string(fields.size() ? fields.size() - 1 : 0),
                              line_no);
        }
        std::string token(fields[0]);
        if (std::any_of(token.begin(), token.end(),
                        [](char c) { return c == ' ' || (c >= 'A' && c <= 'Z'); })) {
            throw FormatError("token '" + token + "' must be lowercase and space-free", line_no);
        }
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!detail::parse_double(fields[i + 1], v[i]) || !std::isfinite(v[i])) {
                throw FormatError("non-numeric component '" + std::string(fields[i + 1]) + "'",
                                  line_no);
            }
        }
        if (!store.table_.emplace(std::move(token), std::move(v)).second) {
            throw FormatError("duplicate token '" + std::string(fields[0]) + "'", line_no);
        }
        ++rows;
    }
    if (rows != count) {
        throw FormatError("header declares " + std::to_string(count) + " rows, file has " +
                          std::to_string(rows));
    }
    return store;
}

double cosine_similarity(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw Error("cosine_similarity: dimension mismatch");
    }
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) {
        throw Error("cosine_similarity: zero vector");
    }
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double node_distance(const std::optional<Vector>& image_vec,
                     const std::optional<Vector>& query_vec) {
    if (!image_vec || !query_vec) return 1.0;
    if (image_vec->size() != query_vec->size()) {
        throw Error("node_distance: dimension mismatch");
    }
    auto zero = [](const Vector& v) {
        return std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; });
    };
    if (zero(*image_vec) || zero(*query_vec)) return 1.0;
    return 1.0 - std::max(0.0, cosine_similarity(*image_vec, *query_vec));
}

}  // namespace sgreti
