#include "ontoembed/axiom.hpp"

#include <stdexcept>

namespace ontoembed {

ClassExprPtr named(Iri iri) {
    return std::make_shared<const ClassExpr>(ClassExpr{NamedClass{std::move(iri)}});
}

ClassExprPtr intersection(std::vector<ClassExprPtr> members) {
    if (members.size() < 2) throw std::invalid_argument("intersection needs >= 2 members");
    return std::make_shared<const ClassExpr>(ClassExpr{Intersection{std::move(members)}});
}

ClassExprPtr union_of(std::vector<ClassExprPtr> members) {
    if (members.size() < 2) throw std::invalid_argument("union needs >= 2 members");
    return std::make_shared<const ClassExpr>(ClassExpr{Union{std::move(members)}});
}

ClassExprPtr some(Iri property, ClassExprPtr filler) {
    return std::make_shared<const ClassExpr>(
        ClassExpr{Restriction{RestrictionKind::Some, std::move(property), std::move(filler), 0, {}}});
}

ClassExprPtr only(Iri property, ClassExprPtr filler) {
    return std::make_shared<const ClassExpr>(
        ClassExpr{Restriction{RestrictionKind::Only, std::move(property), std::move(filler), 0, {}}});
}

ClassExprPtr cardinality(RestrictionKind kind, Iri property, unsigned n, ClassExprPtr qualifier) {
    if (kind != RestrictionKind::Min && kind != RestrictionKind::Max &&
        kind != RestrictionKind::Exactly) {
        throw std::invalid_argument("cardinality() expects Min/Max/Exactly");
    }
    return std::make_shared<const ClassExpr>(
        ClassExpr{Restriction{kind, std::move(property), std::move(qualifier), n, {}}});
}

ClassExprPtr has_value(Iri property, Iri individual) {
    return std::make_shared<const ClassExpr>(
        ClassExpr{Restriction{RestrictionKind::HasValue, std::move(property), nullptr, 0,
                              std::move(individual)}});
}

namespace {

const char* kind_tag(RestrictionKind k) {
    switch (k) {
        case RestrictionKind::Some: return "some";
        case RestrictionKind::Only: return "only";
        case RestrictionKind::Min: return "min";
        case RestrictionKind::Max: return "max";
        case RestrictionKind::Exactly: return "exactly";
        case RestrictionKind::HasValue: return "value";
    }
    return "?";
}

void expr_key_rec(const ClassExpr& e, std::string& out) {
    if (const auto* n = std::get_if<NamedClass>(&e.node)) {
        out += '<';
        out += n->iri;
        out += '>';
    } else if (const auto* i = std::get_if<Intersection>(&e.node)) {
        out += "(and";
        for (const auto& m : i->members) {
            out += ' ';
            expr_key_rec(*m, out);
        }
        out += ')';
    } else if (const auto* u = std::get_if<Union>(&e.node)) {
        out += "(or";
        for (const auto& m : u->members) {
            out += ' ';
            expr_key_rec(*m, out);
        }
        out += ')';
    } else {
        const auto& r = std::get<Restriction>(e.node);
        out += '(';
        out += kind_tag(r.kind);
        out += " <";
        out += r.property;
        out += '>';
        if (r.kind == RestrictionKind::HasValue) {
            out += " <";
            out += r.individual;
            out += '>';
        } else if (r.kind == RestrictionKind::Some || r.kind == RestrictionKind::Only) {
            out += ' ';
            expr_key_rec(*r.filler, out);
        } else {
            out += ' ';
            out += std::to_string(r.cardinality);
            if (r.filler) {
                out += ' ';
                expr_key_rec(*r.filler, out);
            }
        }
        out += ')';
    }
}

std::string literal_key(const Literal& lit) {
    return '"' + lit.lexical + "\"^^" + lit.datatype + '@' + lit.lang;
}

}  // namespace

std::string expr_key(const ClassExpr& e) {
    std::string out;
    expr_key_rec(e, out);
    return out;
}

std::string expr_key(const ClassExprPtr& e) {
    return e ? expr_key(*e) : std::string("<null>");
}

std::string axiom_key(const Axiom& a) {
    std::string out;
    if (const auto* s = std::get_if<SubClassOf>(&a)) {
        out = "sub " + expr_key(s->sub) + " " + expr_key(s->sup);
    } else if (const auto* e = std::get_if<EquivalentClasses>(&a)) {
        out = "eq " + expr_key(e->a) + " " + expr_key(e->b);
    } else if (const auto* c = std::get_if<ClassAssertion>(&a)) {
        out = "type <" + c->instance + "> " + expr_key(c->cls);
    } else if (const auto* o = std::get_if<ObjectAssertion>(&a)) {
        out = "obj <" + o->subject + "> <" + o->property + "> <" + o->object + ">";
    } else if (const auto* d = std::get_if<DataAssertion>(&a)) {
        out = "data <" + d->subject + "> <" + d->property + "> " + literal_key(d->value);
    } else if (const auto* p = std::get_if<SubPropertyOf>(&a)) {
        out = "subprop <" + p->sub + "> <" + p->sup + ">";
    } else if (const auto* v = std::get_if<InverseOf>(&a)) {
        out = "inv <" + v->p1 + "> <" + v->p2 + ">";
    } else if (const auto* ch = std::get_if<PropertyChain>(&a)) {
        out = "chain";
        for (const auto& s : ch->chain) out += " <" + s + ">";
        out += " -> <" + ch->sup + ">";
    } else if (const auto* dm = std::get_if<Domain>(&a)) {
        out = "domain <" + dm->property + "> <" + dm->cls + ">";
    } else if (const auto* rg = std::get_if<Range>(&a)) {
        out = "range <" + rg->property + "> <" + rg->cls + ">";
    }
    return out;
}

void collect_iris(const ClassExprPtr& e, std::vector<Iri>& out) {
    if (!e) return;
    if (const auto* n = std::get_if<NamedClass>(&e->node)) {
        out.push_back(n->iri);
    } else if (const auto* i = std::get_if<Intersection>(&e->node)) {
        for (const auto& m : i->members) collect_iris(m, out);
    } else if (const auto* u = std::get_if<Union>(&e->node)) {
        for (const auto& m : u->members) collect_iris(m, out);
    } else {
        const auto& r = std::get<Restriction>(e->node);
        out.push_back(r.property);
        if (!r.individual.empty()) out.push_back(r.individual);
        collect_iris(r.filler, out);
    }
}

std::vector<Iri> axiom_iris(const Axiom& a) {
    std::vector<Iri> out;
    if (const auto* s = std::get_if<SubClassOf>(&a)) {
        collect_iris(s->sub, out);
        collect_iris(s->sup, out);
    } else if (const auto* e = std::get_if<EquivalentClasses>(&a)) {
        collect_iris(e->a, out);
        collect_iris(e->b, out);
    } else if (const auto* c = std::get_if<ClassAssertion>(&a)) {
        collect_iris(c->cls, out);
        out.push_back(c->instance);
    } else if (const auto* o = std::get_if<ObjectAssertion>(&a)) {
        out = {o->subject, o->property, o->object};
    } else if (const auto* d = std::get_if<DataAssertion>(&a)) {
        out = {d->subject, d->property};
    } else if (const auto* p = std::get_if<SubPropertyOf>(&a)) {
        out = {p->sub, p->sup};
    } else if (const auto* v = std::get_if<InverseOf>(&a)) {
        out = {v->p1, v->p2};
    } else if (const auto* ch = std::get_if<PropertyChain>(&a)) {
        out = ch->chain;
        out.push_back(ch->sup);
    } else if (const auto* dm = std::get_if<Domain>(&a)) {
        out = {dm->property, dm->cls};
    } else if (const auto* rg = std::get_if<Range>(&a)) {
        out = {rg->property, rg->cls};
    }
    return out;
}

}  // namespace ontoembed
