#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ontoembed/rdf.hpp"

namespace ontoembed {

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

enum class RestrictionKind { Some, Only, Min, Max, Exactly, HasValue };

struct NamedClass {
    Iri iri;
};

struct Intersection {
    std::vector<ClassExprPtr> members;  // size >= 2
};

struct Union {
    std::vector<ClassExprPtr> members;  // size >= 2
};

struct Restriction {
    RestrictionKind kind;
    Iri property;
    ClassExprPtr filler;        // Some/Only: required; Min/Max/Exactly: optional qualifier
    unsigned cardinality = 0;   // Min/Max/Exactly
    Iri individual;             // HasValue
};

struct ClassExpr {
    std::variant<NamedClass, Intersection, Union, Restriction> node;
};

ClassExprPtr named(Iri iri);
ClassExprPtr intersection(std::vector<ClassExprPtr> members);
ClassExprPtr union_of(std::vector<ClassExprPtr> members);
ClassExprPtr some(Iri property, ClassExprPtr filler);
ClassExprPtr only(Iri property, ClassExprPtr filler);
ClassExprPtr cardinality(RestrictionKind kind, Iri property, unsigned n,
                         ClassExprPtr qualifier = nullptr);
ClassExprPtr has_value(Iri property, Iri individual);

inline const NamedClass* as_named(const ClassExprPtr& e) {
    return e ? std::get_if<NamedClass>(&e->node) : nullptr;
}

// Subsumption between class expressions; the supported subset keeps at least
// one side named, but both sides may be complex in the general GCI form.
struct SubClassOf {
    ClassExprPtr sub;
    ClassExprPtr sup;
};

struct EquivalentClasses {
    ClassExprPtr a;
    ClassExprPtr b;
};

struct ClassAssertion {
    ClassExprPtr cls;
    Iri instance;
};

struct ObjectAssertion {
    Iri subject;
    Iri property;
    Iri object;
};

struct DataAssertion {
    Iri subject;
    Iri property;
    Literal value;
};

struct SubPropertyOf {
    Iri sub;
    Iri sup;
};

struct InverseOf {
    Iri p1;
    Iri p2;
};

struct PropertyChain {
    std::vector<Iri> chain;  // length >= 2
    Iri sup;
};

struct Domain {
    Iri property;
    Iri cls;
};

struct Range {
    Iri property;
    Iri cls;
};

using Axiom = std::variant<SubClassOf, EquivalentClasses, ClassAssertion,
                           ObjectAssertion, DataAssertion, SubPropertyOf,
                           InverseOf, PropertyChain, Domain, Range>;

// Canonical string renderings, used for structural comparison and ordering.
std::string expr_key(const ClassExpr& e);
std::string expr_key(const ClassExprPtr& e);
std::string axiom_key(const Axiom& a);

// All IRIs referenced by the expression / axiom, in encounter order.
void collect_iris(const ClassExprPtr& e, std::vector<Iri>& out);
std::vector<Iri> axiom_iris(const Axiom& a);

}  // namespace ontoembed
