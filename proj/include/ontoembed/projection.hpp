#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoembed/ontology.hpp"

namespace ontoembed {

enum class Strategy { Mapping, Rules, RulesInverse };

// One directed labeled edge of the projected graph. Vertices are identified
// by token: a full IRI, a blank-node token ("_:bN", Mapping strategy only)
// or a literal leaf token.
struct GraphEdge {
    std::string subject;
    Iri predicate;
    std::string object;
    bool object_is_literal = false;
    bool annotation = false;  // excluded from the walk graph

    auto tie() const { return std::tie(subject, predicate, object); }
    bool operator==(const GraphEdge& o) const { return tie() == o.tie(); }
    bool operator<(const GraphEdge& o) const { return tie() < o.tie(); }
};

struct ProjectedGraph {
    Strategy strategy = Strategy::Rules;
    std::vector<GraphEdge> edges;  // deduplicated, deterministic order
    std::size_t skipped_constructs = 0;

    std::set<std::string> vertex_tokens() const;
    std::vector<Triple> to_triples() const;  // graph dump as N-Triples
};

// RDF serialization of the full ontology (axioms, declarations, annotations,
// residue), expanding complex class expressions to blank-node patterns.
// reconstruct_axioms inverts this on the supported subset.
std::vector<Triple> serialize_mapping(const Ontology& onto);

ProjectedGraph project_mapping(const Ontology& onto);

// Table-driven projection rules; `inverse` adds one inverse edge per
// subsumption/membership edge (the +R variant).
ProjectedGraph project_rules(const Ontology& onto, bool inverse);

ProjectedGraph project(const Ontology& onto, Strategy strategy);

inline Iri inverse_predicate(std::string_view base) {
    return Iri(base) + std::string(vocab::inverse_suffix);
}

// Literal leaf vertex token: the lexical form with whitespace collapsed so
// it stays a single sentence token.
std::string literal_token(const Literal& lit);

// Directed single-relation graph: each triple <X, r, Y> contributes a
// relation-instance vertex with X -> r and r -> Y. Implemented as an
// adjacency list of (relation token, target vertex) pairs per subject, in
// edge insertion order.
struct WalkGraph {
    std::vector<std::string> tokens;                           // vertex/relation tokens
    std::vector<bool> is_literal;                              // per token id
    std::map<std::string, int> token_index;
    std::vector<std::vector<std::pair<int, int>>> adjacency;   // subject id -> (rel id, object id)

    int find(const std::string& token) const {
        const auto it = token_index.find(token);
        return it == token_index.end() ? -1 : it->second;
    }
    std::size_t vertex_count() const { return tokens.size(); }
    // Two directed edges per walkable projected triple.
    std::size_t edge_count() const;
};

WalkGraph to_walk_graph(const ProjectedGraph& g);

}  // namespace ontoembed
