#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sgreti {

struct QueryNode {
    std::string handle;  // user handle, or "$<n>" for bare-word nodes
    std::string label;   // lowercase, '_' joins words

    bool operator==(const QueryNode&) const = default;
};

struct QueryTriplet {
    std::string subject_handle;
    std::string predicate_label;
    std::string object_handle;

    bool operator==(const QueryTriplet&) const = default;
};

struct QueryGraph {
    std::vector<QueryNode> nodes;      // declaration order
    std::vector<QueryTriplet> triplets;  // input order

    const QueryNode* find_node(const std::string& handle) const;

    bool operator==(const QueryGraph&) const = default;
};

// One <subject - predicate - object> query unit. Triplets connected through
// shared node handles share a component id; beyond that they are scored
// independently. The predicate handle is synthesized per triplet ("$p<i>")
// since predicates are labels, not shareable nodes.
struct CanonicalTriplet {
    int index = 0;  // position i of the triplet, 0-based
    int component_id = 0;
    std::string subject_handle;
    std::string predicate_handle;
    std::string object_handle;
    std::string subject_label;
    std::string predicate_label;
    std::string object_label;

    bool operator==(const CanonicalTriplet&) const = default;
};

// Parses the textual graph-query DSL:
//   query := stmt (";" stmt)*
//   stmt  := node "-" pred "-" node
//   node  := WORD | "(" HANDLE [":" WORD+] ")"
//   pred  := WORD+ | "[" WORD+ "]"
// Input is lowercased; WORD is [a-z0-9_]+; multiword terms join with '_'.
// Bare words always make fresh nodes; explicit handles are the only sharing
// mechanism. A handle that is never given a label, a self-loop, or a handle
// relabeled with a different label is an error (QueryError with position).
QueryGraph parse_query(std::string_view text);

// Canonical triplets in input order, with component ids assigned by
// connected components over shared handles (numbered by first appearance).
std::vector<CanonicalTriplet> canonical_forms(const QueryGraph& query);

// Renders a query graph back to DSL text that reparses isomorphically.
std::string to_dsl(const QueryGraph& query);

}  // namespace sgreti
