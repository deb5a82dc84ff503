#include "ontoembed/ontology.hpp"

#include <algorithm>
#include <cctype>

#include "ontoembed/text.hpp"

namespace ontoembed {

bool Ontology::is_registered(const Iri& iri) const {
    return classes.count(iri) || instances.count(iri) || object_properties.count(iri) ||
           data_properties.count(iri) || annotation_properties.count(iri);
}

void Ontology::declare(const Iri& iri, EntityKind kind) {
    declared[iri].insert(kind);
    switch (kind) {
        case EntityKind::Class: classes.insert(iri); break;
        case EntityKind::Instance: instances.insert(iri); break;
        case EntityKind::ObjectProperty: object_properties.insert(iri); break;
        case EntityKind::DataProperty: data_properties.insert(iri); break;
        case EntityKind::AnnotationProperty: annotation_properties.insert(iri); break;
    }
}

namespace {

// Registry update for an IRI seen in a given axiom position. Declared kinds
// always win; usage only fills gaps so puns stay intact.
void register_usage(Ontology& o, const Iri& iri, EntityKind kind) {
    switch (kind) {
        case EntityKind::Class: o.classes.insert(iri); break;
        case EntityKind::Instance:
            if (!o.classes.count(iri) && !o.object_properties.count(iri) &&
                !o.data_properties.count(iri) && !o.annotation_properties.count(iri)) {
                o.instances.insert(iri);
            }
            break;
        case EntityKind::ObjectProperty:
            if (!o.data_properties.count(iri) && !o.annotation_properties.count(iri)) {
                o.object_properties.insert(iri);
            }
            break;
        case EntityKind::DataProperty:
            if (!o.object_properties.count(iri) && !o.annotation_properties.count(iri)) {
                o.data_properties.insert(iri);
            }
            break;
        case EntityKind::AnnotationProperty:
            o.annotation_properties.insert(iri);
            break;
    }
}

void register_expr(Ontology& o, const ClassExprPtr& e) {
    if (!e) return;
    if (const auto* n = std::get_if<NamedClass>(&e->node)) {
        register_usage(o, n->iri, EntityKind::Class);
    } else if (const auto* i = std::get_if<Intersection>(&e->node)) {
        for (const auto& m : i->members) register_expr(o, m);
    } else if (const auto* u = std::get_if<Union>(&e->node)) {
        for (const auto& m : u->members) register_expr(o, m);
    } else {
        const auto& r = std::get<Restriction>(e->node);
        register_usage(o, r.property, EntityKind::ObjectProperty);
        if (!r.individual.empty()) register_usage(o, r.individual, EntityKind::Instance);
        register_expr(o, r.filler);
    }
}

}  // namespace

void Ontology::add_axiom(Axiom a) {
    if (const auto* s = std::get_if<SubClassOf>(&a)) {
        register_expr(*this, s->sub);
        register_expr(*this, s->sup);
    } else if (const auto* e = std::get_if<EquivalentClasses>(&a)) {
        register_expr(*this, e->a);
        register_expr(*this, e->b);
    } else if (const auto* c = std::get_if<ClassAssertion>(&a)) {
        register_expr(*this, c->cls);
        register_usage(*this, c->instance, EntityKind::Instance);
    } else if (const auto* o = std::get_if<ObjectAssertion>(&a)) {
        register_usage(*this, o->property, EntityKind::ObjectProperty);
        register_usage(*this, o->subject, EntityKind::Instance);
        register_usage(*this, o->object, EntityKind::Instance);
    } else if (const auto* d = std::get_if<DataAssertion>(&a)) {
        register_usage(*this, d->property, EntityKind::DataProperty);
        register_usage(*this, d->subject, EntityKind::Instance);
    } else if (const auto* p = std::get_if<SubPropertyOf>(&a)) {
        register_usage(*this, p->sub, EntityKind::ObjectProperty);
        register_usage(*this, p->sup, EntityKind::ObjectProperty);
    } else if (const auto* v = std::get_if<InverseOf>(&a)) {
        register_usage(*this, v->p1, EntityKind::ObjectProperty);
        register_usage(*this, v->p2, EntityKind::ObjectProperty);
    } else if (const auto* ch = std::get_if<PropertyChain>(&a)) {
        for (const auto& s : ch->chain) register_usage(*this, s, EntityKind::ObjectProperty);
        register_usage(*this, ch->sup, EntityKind::ObjectProperty);
    } else if (const auto* dm = std::get_if<Domain>(&a)) {
        register_usage(*this, dm->property, EntityKind::ObjectProperty);
        register_usage(*this, dm->cls, EntityKind::Class);
    } else if (const auto* rg = std::get_if<Range>(&a)) {
        register_usage(*this, rg->property, EntityKind::ObjectProperty);
        register_usage(*this, rg->cls, EntityKind::Class);
    }
    axioms.push_back(std::move(a));
}

void Ontology::add_annotation(const Iri& subject, const Iri& property, Literal value) {
    annotations[subject].push_back({property, std::move(value)});
    if (!vocab::is_builtin_annotation_property(property)) {
        register_usage(*this, property, EntityKind::AnnotationProperty);
    }
}

bool is_english_label(const Literal& lit) {
    if (lit.lang.empty()) return true;
    std::string lang;
    lang.reserve(lit.lang.size());
    for (char c : lit.lang) lang.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lang == "en") return true;
    return lang.size() > 3 && lang.compare(0, 3, "en-") == 0;
}

void Ontology::rebuild_labels() {
    labels.clear();
    for (const auto& [subject, entries] : annotations) {
        std::optional<std::string> best;
        for (const auto& entry : entries) {
            if (entry.property != vocab::rdfs_label) continue;
            if (!is_english_label(entry.value)) continue;
            if (!best || entry.value.lexical < *best) best = entry.value.lexical;
        }
        if (best) labels[subject] = *best;
    }
}

std::vector<Iri> Ontology::sorted_entities() const {
    std::set<Iri> all;
    all.insert(classes.begin(), classes.end());
    all.insert(instances.begin(), instances.end());
    all.insert(object_properties.begin(), object_properties.end());
    all.insert(data_properties.begin(), data_properties.end());
    all.insert(annotation_properties.begin(), annotation_properties.end());
    return {all.begin(), all.end()};
}

std::vector<std::string> lexical_tokens(const Ontology& onto, const Iri& entity) {
    const auto it = onto.labels.find(entity);
    if (it != onto.labels.end()) {
        auto tokens = tokenize(it->second);
        if (!tokens.empty()) return tokens;
    }
    auto tokens = tokenize(iri_name(entity));
    if (!tokens.empty()) return tokens;
    return {entity};
}

std::vector<std::string> lexical_tokens_for_token(const Ontology& onto,
                                                  const std::string& token) {
    return lexical_tokens(onto, token);
}

}  // namespace ontoembed
