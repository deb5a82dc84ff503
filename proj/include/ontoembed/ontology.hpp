#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontoembed/axiom.hpp"
#include "ontoembed/rdf.hpp"

namespace ontoembed {

enum class EntityKind { Class, Instance, ObjectProperty, DataProperty, AnnotationProperty };

struct AnnotationEntry {
    Iri property;
    Literal value;
    bool operator==(const AnnotationEntry&) const = default;
    auto operator<=>(const AnnotationEntry&) const = default;
};

// Immutable after construction; safe for concurrent reads.
struct Ontology {
    std::vector<Axiom> axioms;

    // All annotation assertions, including rdfs:label entries.
    std::map<Iri, std::vector<AnnotationEntry>> annotations;
    // Chosen English label per entity (first lexicographically when several).
    std::map<Iri, std::string> labels;

    std::set<Iri> classes;
    std::set<Iri> instances;
    std::set<Iri> object_properties;
    std::set<Iri> data_properties;
    std::set<Iri> annotation_properties;

    // Kinds that carried an explicit rdf:type declaration triple.
    std::map<Iri, std::set<EntityKind>> declared;

    // Triples that match no supported pattern; they still feed the
    // Mapping-strategy graph verbatim.
    std::vector<Triple> residue;

    std::vector<std::string> warnings;
    std::size_t skipped_axiom_count = 0;

    bool is_registered(const Iri& iri) const;
    bool has_class(const Iri& iri) const { return classes.count(iri) > 0; }

    // Registers every IRI the axiom references, then stores it.
    void add_axiom(Axiom a);
    void declare(const Iri& iri, EntityKind kind);
    void add_annotation(const Iri& subject, const Iri& property, Literal value);

    // Recomputes the labels map from the annotation store.
    void rebuild_labels();

    std::vector<Iri> sorted_entities() const;
};

bool is_english_label(const Literal& lit);

// Inverts the OWL-to-RDF mapping for the supported axiom subset. Triples
// are processed in canonical (sorted) order so the result depends only on
// the triple multiset. Unrecognized patterns land in the residue; an
// incomplete blank-node pattern produces a warning, never a failure.
Ontology reconstruct_axioms(const std::vector<Triple>& triples);

// Word tokens for an entity: its English label if it has one, otherwise its
// camel-case IRI name; if both tokenize to nothing, the full IRI itself.
std::vector<std::string> lexical_tokens(const Ontology& onto, const Iri& entity);

// Same fallback chain applied to an arbitrary token string (used when a
// sentence contains IRIs outside the registry, e.g. rdf:type).
std::vector<std::string> lexical_tokens_for_token(const Ontology& onto,
                                                  const std::string& token);

}  // namespace ontoembed
