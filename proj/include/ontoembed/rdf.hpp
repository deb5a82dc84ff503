#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontoembed {

// Entities are identified by their absolute IRI string, kept in full form
// (no angle brackets, no prefix compression).
using Iri = std::string;

// Local fragment after the final '#' or '/'; the whole IRI if neither occurs.
std::string_view iri_name(std::string_view iri);

bool looks_like_iri(std::string_view token);

struct BlankNode {
    std::string label;  // without the "_:" prefix
    bool operator==(const BlankNode&) const = default;
    auto operator<=>(const BlankNode&) const = default;
};

struct Literal {
    std::string lexical;   // decoded value
    std::string datatype;  // IRI, empty for plain/lang-tagged literals
    std::string lang;      // language tag, empty if none
    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

struct Triple {
    Term subject;    // Iri or BlankNode
    Iri predicate;   // always an Iri
    Term object;     // Iri, BlankNode or Literal
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

// RDF/RDFS/OWL/XSD vocabulary used by the supported axiom subset.
namespace vocab {
inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view rdf_rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view rdf_nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view rdfs_subclassof = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view rdfs_subpropertyof = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view rdfs_domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view rdfs_range = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view rdfs_comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view rdfs_seealso = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
inline constexpr std::string_view rdfs_isdefinedby = "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";
inline constexpr std::string_view owl_class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view owl_thing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view owl_named_individual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view owl_object_property = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view owl_datatype_property = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view owl_annotation_property = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view owl_ontology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view owl_restriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view owl_on_property = "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view owl_on_class = "http://www.w3.org/2002/07/owl#onClass";
inline constexpr std::string_view owl_some_values_from = "http://www.w3.org/2002/07/owl#someValuesFrom";
inline constexpr std::string_view owl_all_values_from = "http://www.w3.org/2002/07/owl#allValuesFrom";
inline constexpr std::string_view owl_has_value = "http://www.w3.org/2002/07/owl#hasValue";
inline constexpr std::string_view owl_min_cardinality = "http://www.w3.org/2002/07/owl#minCardinality";
inline constexpr std::string_view owl_max_cardinality = "http://www.w3.org/2002/07/owl#maxCardinality";
inline constexpr std::string_view owl_cardinality = "http://www.w3.org/2002/07/owl#cardinality";
inline constexpr std::string_view owl_min_qualified_cardinality = "http://www.w3.org/2002/07/owl#minQualifiedCardinality";
inline constexpr std::string_view owl_max_qualified_cardinality = "http://www.w3.org/2002/07/owl#maxQualifiedCardinality";
inline constexpr std::string_view owl_qualified_cardinality = "http://www.w3.org/2002/07/owl#qualifiedCardinality";
inline constexpr std::string_view owl_intersection_of = "http://www.w3.org/2002/07/owl#intersectionOf";
inline constexpr std::string_view owl_union_of = "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view owl_equivalent_class = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view owl_inverse_of = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view owl_property_chain_axiom = "http://www.w3.org/2002/07/owl#propertyChainAxiom";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_non_negative_integer = "http://www.w3.org/2001/XMLSchema#nonNegativeInteger";
inline constexpr std::string_view xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";

// Distinct IRI marker for inverse predicates in the rules+R projection.
inline constexpr std::string_view inverse_suffix = "-inverse";

bool is_builtin_annotation_property(std::string_view iri);
}  // namespace vocab

std::string term_to_string(const Term& t);

}  // namespace ontoembed
