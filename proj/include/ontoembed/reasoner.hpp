#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoembed/ontology.hpp"

namespace ontoembed {

enum class Task { Membership, Subsumption };

// Structural entailment closure: class hierarchy transitive closure,
// membership realization and sub-property closure. Strict (reflexive-free)
// and immutable once computed.
struct Closure {
    std::map<Iri, std::set<Iri>> subsumes;   // class -> all entailed named superclasses
    std::map<Iri, std::set<Iri>> member_of;  // instance -> all entailed named classes
    std::map<Iri, std::set<Iri>> sub_prop;   // property -> all entailed super-properties
    std::vector<std::string> warnings;       // subsumption cycles collapse with a warning
};

Closure classify(const Ontology& onto);

bool is_entailed(const Closure& closure, const Iri& head, const Iri& tail, Task task);

// Ontology extended with one SubClassOf / ClassAssertion axiom per entailed
// pair that is not already declared. Idempotent.
Ontology materialize(const Ontology& onto, const Closure& closure);

}  // namespace ontoembed
