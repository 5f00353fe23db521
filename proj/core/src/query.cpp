#include "sgreti/query.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <optional>

#include "sgreti/errors.hpp"

namespace sgreti {

namespace {

struct Token {
    enum class Kind { Word, LParen, RParen, LBracket, RBracket, Colon, Dash, Semicolon, End };
    Kind kind;
    std::string text;
    std::size_t position;  // 1-based offset into the query text
};

bool word_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        switch (c) {
            case '(': tokens.push_back({Token::Kind::LParen, "(", pos}); ++i; continue;
            case ')': tokens.push_back({Token::Kind::RParen, ")", pos}); ++i; continue;
            case '[': tokens.push_back({Token::Kind::LBracket, "[", pos}); ++i; continue;
            case ']': tokens.push_back({Token::Kind::RBracket, "]", pos}); ++i; continue;
            case ':': tokens.push_back({Token::Kind::Colon, ":", pos}); ++i; continue;
            case '-': tokens.push_back({Token::Kind::Dash, "-", pos}); ++i; continue;
            case ';': tokens.push_back({Token::Kind::Semicolon, ";", pos}); ++i; continue;
            default: break;
        }
        if (!word_char(c)) {
            throw QueryError(std::string("unexpected character '") + text[i] + "'", pos);
        }
        std::string word;
        while (i < text.size()) {
            char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
            if (!word_char(lc)) break;
            word.push_back(lc);
            ++i;
        }
        tokens.push_back({Token::Kind::Word, std::move(word), pos});
    }
    tokens.push_back({Token::Kind::End, "", text.size() + 1});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    QueryGraph parse() {
        parse_stmt();
        while (peek().kind == Token::Kind::Semicolon) {
            next();
            parse_stmt();
        }
        expect(Token::Kind::End, "';' or end of query");
        resolve();
        return std::move(graph_);
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& next() { return tokens_[cursor_++]; }

    const Token& expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) {
            throw QueryError("expected " + what + ", got '" + (peek().text.empty() ? "end" : peek().text) + "'",
                             peek().position);
        }
        return next();
    }

    // WORD+ joined with '_'.
    std::string parse_term() {
        std::string term = expect(Token::Kind::Word, "a word").text;
        while (peek().kind == Token::Kind::Word) {
            term.push_back('_');
            term += next().text;
        }
        return term;
    }

    // Returns the node handle; bare words get a fresh "$<n>" handle.
    std::string parse_node() {
        if (peek().kind == Token::Kind::Word) {
            const auto& tok = next();
            std::string handle = "$" + std::to_string(++anonymous_);
            graph_.nodes.push_back({handle, tok.text});
            return handle;
        }
        const auto& open = expect(Token::Kind::LParen, "a node");
        const auto& handle_tok = expect(Token::Kind::Word, "a handle");
        std::string handle = handle_tok.text;
        std::optional<std::string> label;
        if (peek().kind == Token::Kind::Colon) {
            next();
            label = parse_term();
        }
        expect(Token::Kind::RParen, "')'");
        auto it = handles_.find(handle);
        if (it == handles_.end()) {
            handles_.emplace(handle, HandleState{label, open.position});
        } else if (label) {
            if (it->second.label && *it->second.label != *label) {
                throw QueryError("handle '" + handle + "' relabeled from '" + *it->second.label +
                                     "' to '" + *label + "'",
                                 open.position);
            }
            it->second.label = label;
        }
        return handle;
    }

    std::string parse_pred() {
        if (peek().kind == Token::Kind::LBracket) {
            next();
            std::string term = parse_term();
            expect(Token::Kind::RBracket, "']'");
            return term;
        }
        return parse_term();
    }

    void parse_stmt() {
        const std::size_t stmt_pos = peek().position;
        std::string subject = parse_node();
        expect(Token::Kind::Dash, "'-'");
        std::string pred = parse_pred();
        expect(Token::Kind::Dash, "'-'");
        std::string object = parse_node();
        if (subject == object) {
            throw QueryError("self-loop on handle '" + subject + "'", stmt_pos);
        }
        graph_.triplets.push_back({std::move(subject), std::move(pred), std::move(object)});
    }

    void resolve() {
        for (const auto& [handle, state] : handles_) {
            if (!state.label) {
                throw QueryError("handle '" + handle + "' is never labeled", state.position);
            }
        }
        // Named nodes enter the node list in handle order, after the
        // anonymous ones (which were appended as encountered).
        for (const auto& [handle, state] : handles_) {
            graph_.nodes.push_back({handle, *state.label});
        }
    }

    struct HandleState {
        std::optional<std::string> label;
        std::size_t position;
    };

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    std::size_t anonymous_ = 0;
    std::map<std::string, HandleState> handles_;
    QueryGraph graph_;
};

}  // namespace

const QueryNode* QueryGraph::find_node(const std::string& handle) const {
    for (const auto& node : nodes) {
        if (node.handle == handle) return &node;
    }
    return nullptr;
}

QueryGraph parse_query(std::string_view text) {
    if (text.empty()) {
        throw QueryError("empty query", 1);
    }
    return Parser(text).parse();
}

std::vector<CanonicalTriplet> canonical_forms(const QueryGraph& query) {
    // Union-find over node handles.
    std::map<std::string, std::string> parent;
    auto find = [&](std::string h) {
        while (parent.at(h) != h) h = parent.at(h);
        return h;
    };
    for (const auto& t : query.triplets) {
        parent.try_emplace(t.subject_handle, t.subject_handle);
        parent.try_emplace(t.object_handle, t.object_handle);
        parent[find(t.subject_handle)] = find(t.object_handle);
    }

    std::map<std::string, int> component_of_root;
    std::vector<CanonicalTriplet> out;
    int next_component = 0;
    for (std::size_t i = 0; i < query.triplets.size(); ++i) {
        const auto& t = query.triplets[i];
        const auto root = find(t.subject_handle);
        auto [it, fresh] = component_of_root.try_emplace(root, next_component);
        if (fresh) ++next_component;

        CanonicalTriplet c;
        c.index = static_cast<int>(i);
        c.component_id = it->second;
        c.subject_handle = t.subject_handle;
        c.predicate_handle = "$p" + std::to_string(i);
        c.object_handle = t.object_handle;
        c.subject_label = query.find_node(t.subject_handle)->label;
        c.predicate_label = t.predicate_label;
        c.object_label = query.find_node(t.object_handle)->label;
        out.push_back(std::move(c));
    }
    return out;
}

std::string to_dsl(const QueryGraph& query) {
    std::map<std::string, bool> labeled;
    auto render_node = [&](const std::string& handle) {
        const QueryNode* node = query.find_node(handle);
        if (handle.rfind('$', 0) == 0) return node->label;  // bare word, used once
        if (labeled[handle]) return "(" + handle + ")";
        labeled[handle] = true;
        return "(" + handle + ":" + node->label + ")";
    };
    std::string out;
    for (const auto& t : query.triplets) {
        if (!out.empty()) out += "; ";
        out += render_node(t.subject_handle);
        out += " - " + t.predicate_label + " - ";
        out += render_node(t.object_handle);
    }
    return out;
}

}  // namespace sgreti
