#include "ontoembed/projection.hpp"

#include <algorithm>
#include <tuple>

#include "ontoembed/ntriples.hpp"

namespace ontoembed {

std::string literal_token(const Literal& lit) {
    std::string out = lit.lexical;
    for (char& c : out) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
    }
    return out.empty() ? "_" : out;
}

std::set<std::string> ProjectedGraph::vertex_tokens() const {
    std::set<std::string> out;
    for (const auto& e : edges) {
        out.insert(e.subject);
        out.insert(e.object);
    }
    return out;
}

std::vector<Triple> ProjectedGraph::to_triples() const {
    std::vector<Triple> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        Term subject = e.subject.rfind("_:", 0) == 0
                           ? Term{BlankNode{e.subject.substr(2)}}
                           : Term{Iri{e.subject}};
        Term object;
        if (e.object_is_literal) object = Literal{e.object, "", ""};
        else if (e.object.rfind("_:", 0) == 0) object = BlankNode{e.object.substr(2)};
        else object = Iri{e.object};
        out.push_back({std::move(subject), e.predicate, std::move(object)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// OWL to RDF Graph Mapping
// ---------------------------------------------------------------------------

namespace {

struct MappingWriter {
    std::vector<std::pair<Triple, bool>> out;  // (triple, is_annotation)
    std::size_t blank_counter = 0;

    Term fresh_blank() { return BlankNode{"b" + std::to_string(blank_counter++)}; }

    void emit(Term s, std::string_view p, Term o, bool annotation = false) {
        out.emplace_back(Triple{std::move(s), Iri(p), std::move(o)}, annotation);
    }

    Term list_term(const std::vector<Term>& members) {
        Term head = Iri(vocab::rdf_nil);
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
            Term cell = fresh_blank();
            emit(cell, vocab::rdf_first, *it);
            emit(cell, vocab::rdf_rest, head);
            head = cell;
        }
        return head;
    }

    Term expr_term(const ClassExprPtr& e) {
        if (const auto* n = std::get_if<NamedClass>(&e->node)) return Iri(n->iri);
        Term node = fresh_blank();
        if (const auto* i = std::get_if<Intersection>(&e->node)) {
            std::vector<Term> members;
            for (const auto& m : i->members) members.push_back(expr_term(m));
            emit(node, vocab::owl_intersection_of, list_term(members));
            return node;
        }
        if (const auto* u = std::get_if<Union>(&e->node)) {
            std::vector<Term> members;
            for (const auto& m : u->members) members.push_back(expr_term(m));
            emit(node, vocab::owl_union_of, list_term(members));
            return node;
        }
        const auto& r = std::get<Restriction>(e->node);
        emit(node, vocab::rdf_type, Iri(vocab::owl_restriction));
        emit(node, vocab::owl_on_property, Iri(r.property));
        const Literal card{std::to_string(r.cardinality),
                           Iri(vocab::xsd_non_negative_integer), ""};
        switch (r.kind) {
            case RestrictionKind::Some:
                emit(node, vocab::owl_some_values_from, expr_term(r.filler));
                break;
            case RestrictionKind::Only:
                emit(node, vocab::owl_all_values_from, expr_term(r.filler));
                break;
            case RestrictionKind::HasValue:
                emit(node, vocab::owl_has_value, Iri(r.individual));
                break;
            case RestrictionKind::Min:
                if (r.filler) {
                    emit(node, vocab::owl_min_qualified_cardinality, card);
                    emit(node, vocab::owl_on_class, expr_term(r.filler));
                } else {
                    emit(node, vocab::owl_min_cardinality, card);
                }
                break;
            case RestrictionKind::Max:
                if (r.filler) {
                    emit(node, vocab::owl_max_qualified_cardinality, card);
                    emit(node, vocab::owl_on_class, expr_term(r.filler));
                } else {
                    emit(node, vocab::owl_max_cardinality, card);
                }
                break;
            case RestrictionKind::Exactly:
                if (r.filler) {
                    emit(node, vocab::owl_qualified_cardinality, card);
                    emit(node, vocab::owl_on_class, expr_term(r.filler));
                } else {
                    emit(node, vocab::owl_cardinality, card);
                }
                break;
        }
        return node;
    }

    void axiom(const Axiom& a) {
        if (const auto* s = std::get_if<SubClassOf>(&a)) {
            emit(expr_term(s->sub), vocab::rdfs_subclassof, expr_term(s->sup));
        } else if (const auto* e = std::get_if<EquivalentClasses>(&a)) {
            emit(expr_term(e->a), vocab::owl_equivalent_class, expr_term(e->b));
        } else if (const auto* c = std::get_if<ClassAssertion>(&a)) {
            emit(Iri(c->instance), vocab::rdf_type, expr_term(c->cls));
        } else if (const auto* o = std::get_if<ObjectAssertion>(&a)) {
            emit(Iri(o->subject), o->property, Iri(o->object));
        } else if (const auto* d = std::get_if<DataAssertion>(&a)) {
            emit(Iri(d->subject), d->property, d->value);
        } else if (const auto* p = std::get_if<SubPropertyOf>(&a)) {
            emit(Iri(p->sub), vocab::rdfs_subpropertyof, Iri(p->sup));
        } else if (const auto* v = std::get_if<InverseOf>(&a)) {
            emit(Iri(v->p1), vocab::owl_inverse_of, Iri(v->p2));
        } else if (const auto* ch = std::get_if<PropertyChain>(&a)) {
            std::vector<Term> members;
            for (const auto& step : ch->chain) members.push_back(Iri(step));
            emit(Iri(ch->sup), vocab::owl_property_chain_axiom, list_term(members));
        } else if (const auto* dm = std::get_if<Domain>(&a)) {
            emit(Iri(dm->property), vocab::rdfs_domain, Iri(dm->cls));
        } else if (const auto* rg = std::get_if<Range>(&a)) {
            emit(Iri(rg->property), vocab::rdfs_range, Iri(rg->cls));
        }
    }
};

std::string_view kind_type_iri(EntityKind kind) {
    switch (kind) {
        case EntityKind::Class: return vocab::owl_class;
        case EntityKind::Instance: return vocab::owl_named_individual;
        case EntityKind::ObjectProperty: return vocab::owl_object_property;
        case EntityKind::DataProperty: return vocab::owl_datatype_property;
        case EntityKind::AnnotationProperty: return vocab::owl_annotation_property;
    }
    return vocab::owl_class;
}

std::vector<std::pair<Triple, bool>> serialize_mapping_tagged(const Ontology& onto) {
    MappingWriter w;
    for (const auto& [iri, kinds] : onto.declared) {
        for (const auto kind : kinds) {
            w.emit(Iri(iri), vocab::rdf_type, Iri(kind_type_iri(kind)));
        }
    }
    for (const auto& a : onto.axioms) w.axiom(a);
    for (const auto& [subject, entries] : onto.annotations) {
        for (const auto& entry : entries) {
            w.emit(Iri(subject), entry.property, entry.value, true);
        }
    }
    for (const auto& t : onto.residue) w.out.emplace_back(t, false);
    return std::move(w.out);
}

}  // namespace

std::vector<Triple> serialize_mapping(const Ontology& onto) {
    std::vector<Triple> out;
    for (auto& [triple, annotation] : serialize_mapping_tagged(onto)) {
        out.push_back(std::move(triple));
    }
    return out;
}

ProjectedGraph project_mapping(const Ontology& onto) {
    ProjectedGraph g;
    g.strategy = Strategy::Mapping;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const auto& [t, annotation] : serialize_mapping_tagged(onto)) {
        GraphEdge e;
        e.subject = term_to_string(t.subject);
        e.predicate = t.predicate;
        if (const auto* lit = std::get_if<Literal>(&t.object)) {
            e.object = literal_token(*lit);
            e.object_is_literal = true;
        } else {
            e.object = term_to_string(t.object);
        }
        e.annotation = annotation;
        if (seen.emplace(e.subject, e.predicate, e.object).second) {
            g.edges.push_back(std::move(e));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Projection rules
// ---------------------------------------------------------------------------

namespace {

struct RulesProjector {
    const Ontology& onto;
    bool inverse;
    ProjectedGraph g;
    std::set<std::tuple<std::string, std::string, std::string>> seen;

    // equivalences indexed by named side, used for the condition-2 filler
    std::map<Iri, std::vector<ClassExprPtr>> equivalents;

    explicit RulesProjector(const Ontology& o, bool inv) : onto(o), inverse(inv) {
        g.strategy = inv ? Strategy::RulesInverse : Strategy::Rules;
        for (const auto& a : onto.axioms) {
            if (const auto* e = std::get_if<EquivalentClasses>(&a)) {
                if (const auto* n = as_named(e->a)) equivalents[n->iri].push_back(e->b);
                if (const auto* n = as_named(e->b)) equivalents[n->iri].push_back(e->a);
            }
        }
    }

    bool add(std::string subject, const Iri& predicate, std::string object,
             bool literal = false, bool annotation = false) {
        if (!seen.emplace(subject, predicate, object).second) return false;
        g.edges.push_back({std::move(subject), predicate, std::move(object), literal, annotation});
        return true;
    }

    // Named classes admitted as filler targets: the named filler itself, the
    // named members of a union/intersection filler, and for a named filler
    // the named side / members of any equivalence it participates in.
    std::vector<Iri> filler_targets(const ClassExprPtr& filler) const {
        std::vector<Iri> out;
        auto add_members = [&out](const ClassExprPtr& e) {
            if (const auto* n = std::get_if<NamedClass>(&e->node)) {
                out.push_back(n->iri);
            } else if (const auto* i = std::get_if<Intersection>(&e->node)) {
                for (const auto& m : i->members) {
                    if (const auto* nm = as_named(m)) out.push_back(nm->iri);
                }
            } else if (const auto* u = std::get_if<Union>(&e->node)) {
                for (const auto& m : u->members) {
                    if (const auto* nm = as_named(m)) out.push_back(nm->iri);
                }
            }
        };
        if (!filler) return out;
        add_members(filler);
        if (const auto* n = as_named(filler)) {
            const auto it = equivalents.find(n->iri);
            if (it != equivalents.end()) {
                for (const auto& eq : it->second) add_members(eq);
            }
        }
        // stable unique
        std::vector<Iri> unique;
        for (auto& iri : out) {
            if (std::find(unique.begin(), unique.end(), iri) == unique.end()) {
                unique.push_back(iri);
            }
        }
        return unique;
    }

    void restriction_row(const Iri& named_side, const Restriction& r) {
        if (r.kind == RestrictionKind::HasValue) {
            // row 3 only covers A ⊑ ∃r.{b}; the flipped form is unsupported
            ++g.skipped_constructs;
            return;
        }
        const auto targets = filler_targets(r.filler);
        if (targets.empty()) {
            ++g.skipped_constructs;
            return;
        }
        for (const auto& target : targets) add(named_side, r.property, target);
    }

    void run() {
        std::vector<std::pair<Iri, Iri>> domains, ranges;

        for (const auto& axiom : onto.axioms) {
            if (const auto* s = std::get_if<SubClassOf>(&axiom)) {
                const auto* sub_named = as_named(s->sub);
                const auto* sup_named = as_named(s->sup);
                if (sub_named && sup_named) {
                    // row: B subClassOf A
                    add(sub_named->iri, Iri(vocab::rdfs_subclassof), sup_named->iri);
                    if (inverse) {
                        add(sup_named->iri, inverse_predicate(vocab::rdfs_subclassof),
                            sub_named->iri);
                    }
                    continue;
                }
                // rows: A ⊑ □r.D and □r.D ⊑ A
                if (sub_named && s->sup) {
                    if (const auto* r = std::get_if<Restriction>(&s->sup->node)) {
                        if (r->kind == RestrictionKind::HasValue) {
                            has_value_row(sub_named->iri, *r);
                        } else {
                            restriction_row(sub_named->iri, *r);
                        }
                        continue;
                    }
                }
                if (sup_named && s->sub) {
                    if (const auto* r = std::get_if<Restriction>(&s->sub->node)) {
                        restriction_row(sup_named->iri, *r);
                        continue;
                    }
                }
                ++g.skipped_constructs;
            } else if (const auto* c = std::get_if<ClassAssertion>(&axiom)) {
                const auto* cls = as_named(c->cls);
                if (!cls) {
                    ++g.skipped_constructs;
                    continue;
                }
                add(c->instance, Iri(vocab::rdf_type), cls->iri);
                if (inverse) {
                    add(cls->iri, inverse_predicate(vocab::rdf_type), c->instance);
                }
            } else if (const auto* o = std::get_if<ObjectAssertion>(&axiom)) {
                add(o->subject, o->property, o->object);
            } else if (const auto* d = std::get_if<DataAssertion>(&axiom)) {
                add(d->subject, d->property, literal_token(d->value), true);
            } else if (const auto* dm = std::get_if<Domain>(&axiom)) {
                domains.emplace_back(dm->property, dm->cls);
            } else if (const auto* rg = std::get_if<Range>(&axiom)) {
                ranges.emplace_back(rg->property, rg->cls);
            } else if (std::holds_alternative<EquivalentClasses>(axiom) ||
                       std::holds_alternative<SubPropertyOf>(axiom) ||
                       std::holds_alternative<InverseOf>(axiom) ||
                       std::holds_alternative<PropertyChain>(axiom)) {
                // conditions for other rows, no direct edge
            }
        }

        // row: domain + range
        for (const auto& [dprop, dcls] : domains) {
            for (const auto& [rprop, rcls] : ranges) {
                if (dprop == rprop) add(dcls, dprop, rcls);
            }
        }

        for (const auto& [subject, entries] : onto.annotations) {
            for (const auto& entry : entries) {
                add(subject, entry.property, literal_token(entry.value), true, true);
            }
        }

        propagate();
    }

    // row: A ⊑ ∃r.{b} with B(b)
    void has_value_row(const Iri& named_side, const Restriction& r) {
        bool any = false;
        for (const auto& axiom : onto.axioms) {
            const auto* c = std::get_if<ClassAssertion>(&axiom);
            if (!c || c->instance != r.individual) continue;
            const auto* cls = as_named(c->cls);
            if (!cls) continue;
            add(named_side, r.property, cls->iri);
            any = true;
        }
        if (!any) ++g.skipped_constructs;
    }

    bool is_role_edge(const GraphEdge& e) const {
        return !e.annotation && !e.object_is_literal &&
               onto.object_properties.count(e.predicate) > 0;
    }

    // rows 5-7: sub-property, inverse and chain propagation to a fixpoint
    void propagate() {
        std::vector<std::pair<Iri, Iri>> subprops;
        std::vector<std::pair<Iri, Iri>> inverses;
        std::vector<std::pair<std::vector<Iri>, Iri>> chains;
        for (const auto& axiom : onto.axioms) {
            if (const auto* p = std::get_if<SubPropertyOf>(&axiom)) {
                subprops.emplace_back(p->sub, p->sup);
            } else if (const auto* v = std::get_if<InverseOf>(&axiom)) {
                inverses.emplace_back(v->p1, v->p2);
            } else if (const auto* ch = std::get_if<PropertyChain>(&axiom)) {
                chains.emplace_back(ch->chain, ch->sup);
            }
        }
        if (subprops.empty() && inverses.empty() && chains.empty()) return;

        for (int iteration = 0; iteration < 10; ++iteration) {
            const std::size_t before = g.edges.size();

            // r ⊑ r' and <A, r', B> projected  =>  <A, r, B>
            for (const auto& [sub, sup] : subprops) {
                const std::size_t snapshot = g.edges.size();
                for (std::size_t i = 0; i < snapshot; ++i) {
                    const auto e = g.edges[i];
                    if (e.predicate == sup && is_role_edge(e)) add(e.subject, sub, e.object);
                }
            }
            // r' ≡ r⁻ and <B, r', A> projected  =>  <A, r, B> (both readings)
            for (const auto& [p1, p2] : inverses) {
                const std::size_t snapshot = g.edges.size();
                for (std::size_t i = 0; i < snapshot; ++i) {
                    const auto e = g.edges[i];
                    if (!is_role_edge(e)) continue;
                    if (e.predicate == p1) add(e.object, p2, e.subject);
                    if (e.predicate == p2) add(e.object, p1, e.subject);
                }
            }
            // s1 ∘ ... ∘ sn ⊑ r with a projected path  =>  <A, r, B>
            for (const auto& [chain, sup] : chains) {
                chain_row(chain, sup);
            }

            if (g.edges.size() == before) break;
        }
    }

    void chain_row(const std::vector<Iri>& chain, const Iri& sup) {
        // index current role edges by (subject, predicate)
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> index;
        const std::size_t snapshot = g.edges.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            const auto& e = g.edges[i];
            if (is_role_edge(e)) index[{e.subject, e.predicate}].push_back(e.object);
        }
        std::set<std::string> starts;
        for (std::size_t i = 0; i < snapshot; ++i) {
            const auto& e = g.edges[i];
            if (is_role_edge(e) && e.predicate == chain.front()) starts.insert(e.subject);
        }
        for (const auto& start : starts) {
            std::vector<std::string> frontier{start};
            for (const auto& step : chain) {
                std::vector<std::string> next;
                for (const auto& node : frontier) {
                    const auto it = index.find({node, step});
                    if (it == index.end()) continue;
                    next.insert(next.end(), it->second.begin(), it->second.end());
                }
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                frontier = std::move(next);
                if (frontier.empty()) break;
            }
            for (const auto& end : frontier) add(start, sup, end);
        }
    }
};

}  // namespace

ProjectedGraph project_rules(const Ontology& onto, bool inverse) {
    RulesProjector projector(onto, inverse);
    projector.run();
    return std::move(projector.g);
}

ProjectedGraph project(const Ontology& onto, Strategy strategy) {
    switch (strategy) {
        case Strategy::Mapping: return project_mapping(onto);
        case Strategy::Rules: return project_rules(onto, false);
        case Strategy::RulesInverse: return project_rules(onto, true);
    }
    return project_rules(onto, false);
}

// ---------------------------------------------------------------------------
// Walk graph
// ---------------------------------------------------------------------------

std::size_t WalkGraph::edge_count() const {
    std::size_t entries = 0;
    for (const auto& neighbors : adjacency) entries += neighbors.size();
    return 2 * entries;
}

WalkGraph to_walk_graph(const ProjectedGraph& g) {
    WalkGraph wg;
    auto intern = [&wg](const std::string& token, bool literal) {
        const auto it = wg.token_index.find(token);
        if (it != wg.token_index.end()) {
            if (literal) wg.is_literal[static_cast<std::size_t>(it->second)] = true;
            return it->second;
        }
        const int id = static_cast<int>(wg.tokens.size());
        wg.tokens.push_back(token);
        wg.is_literal.push_back(literal);
        wg.adjacency.emplace_back();
        wg.token_index.emplace(token, id);
        return id;
    };
    for (const auto& e : g.edges) {
        if (e.annotation) continue;
        const int s = intern(e.subject, false);
        const int r = intern(e.predicate, false);
        const int o = intern(e.object, e.object_is_literal);
        wg.adjacency[static_cast<std::size_t>(s)].emplace_back(r, o);
    }
    return wg;
}

}  // namespace ontoembed
