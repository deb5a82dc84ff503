#include "support.hpp"

#include <algorithm>
#include <sstream>

#include "ontoembed/ntriples.hpp"

namespace testsupport {

std::string helis_fragment_nt() {
    const std::string rdf_type = std::string(vocab::rdf_type);
    std::ostringstream nt;
    auto iri = [](const std::string& s) { return "<" + s + ">"; };
    nt << iri(helis::beer) << " " << iri(rdf_type) << " <" << vocab::owl_class << "> .\n"
       << iri(helis::alcoholic) << " " << iri(rdf_type) << " <" << vocab::owl_class << "> .\n"
       << iri(helis::milk_and_yogurt) << " " << iri(rdf_type) << " <" << vocab::owl_class << "> .\n"
       << iri(helis::food4001) << " " << iri(rdf_type) << " <" << vocab::owl_named_individual << "> .\n"
       << iri(helis::vitamin_c_100) << " " << iri(rdf_type) << " <" << vocab::owl_named_individual << "> .\n"
       << iri(helis::has_nutrient) << " " << iri(rdf_type) << " <" << vocab::owl_object_property << "> .\n"
       << iri(helis::amount_nutrient) << " " << iri(rdf_type) << " <" << vocab::owl_datatype_property << "> .\n"
       << iri(helis::amount_calories) << " " << iri(rdf_type) << " <" << vocab::owl_datatype_property << "> .\n"
       << iri(helis::food4001) << " " << iri(rdf_type) << " " << iri(helis::beer) << " .\n"
       << iri(helis::beer) << " <" << vocab::rdfs_subclassof << "> " << iri(helis::alcoholic) << " .\n"
       << iri(helis::food4001) << " <" << vocab::rdfs_label << "> \"Blonde Beer\"@en .\n"
       << iri(helis::food4001) << " " << iri(helis::has_nutrient) << " " << iri(helis::vitamin_c_100) << " .\n"
       << iri(helis::food4001) << " " << iri(helis::amount_calories)
       << " \"34.0\"^^<" << vocab::xsd_double << "> .\n"
       << iri(helis::vitamin_c_100) << " " << iri(helis::amount_nutrient)
       << " \"0.05\"^^<" << vocab::xsd_double << "> .\n";
    return nt.str();
}

std::string foodon_fragment_nt() {
    const std::string rdf_type = std::string(vocab::rdf_type);
    std::ostringstream nt;
    auto iri = [](const std::string& s) { return "<" + s + ">"; };
    nt << iri(foodon::edamame) << " " << iri(rdf_type) << " <" << vocab::owl_class << "> .\n"
       << iri(foodon::plant) << " " << iri(rdf_type) << " <" << vocab::owl_class << "> .\n"
       << iri(foodon::derives_from) << " " << iri(rdf_type) << " <" << vocab::owl_object_property << "> .\n"
       << iri(foodon::definition) << " " << iri(rdf_type) << " <" << vocab::owl_annotation_property << "> .\n"
       << iri(foodon::edamame) << " <" << vocab::rdfs_subclassof << "> _:x .\n"
       << "_:x " << iri(rdf_type) << " <" << vocab::owl_restriction << "> .\n"
       << "_:x <" << vocab::owl_on_property << "> " << iri(foodon::derives_from) << " .\n"
       << "_:x <" << vocab::owl_some_values_from << "> " << iri(foodon::plant) << " .\n"
       << iri(foodon::edamame) << " <" << vocab::rdfs_label << "> \"edamame\"@en .\n"
       << iri(foodon::derives_from) << " <" << vocab::rdfs_label << "> \"derives from\"@en .\n"
       << iri(foodon::plant) << " <" << vocab::rdfs_label << "> \"plant\"@en .\n"
       << iri(foodon::edamame) << " " << iri(foodon::definition)
       << " \"Edamame is a preparation of immature soybean in their pods\"@en .\n";
    return nt.str();
}

// ---------------------------------------------------------------------------
// blank-node canonicalization
// ---------------------------------------------------------------------------

namespace {

std::string term_key(const Term& t, const std::map<std::string, std::uint64_t>& sig) {
    if (const auto* b = std::get_if<BlankNode>(&t)) {
        const auto it = sig.find(b->label);
        return "_#" + std::to_string(it == sig.end() ? 0 : it->second);
    }
    if (const auto* iri = std::get_if<Iri>(&t)) return "<" + *iri + ">";
    const auto& lit = std::get<Literal>(t);
    return "\"" + lit.lexical + "\"^^" + lit.datatype + "@" + lit.lang;
}

void refine(const std::vector<Triple>& triples, std::map<std::string, std::uint64_t>& sig,
            int rounds) {
    for (int round = 0; round < rounds; ++round) {
        std::map<std::string, std::uint64_t> next = sig;
        for (const auto& t : triples) {
            const std::string key =
                term_key(t.subject, sig) + "|" + t.predicate + "|" + term_key(t.object, sig);
            const std::uint64_t h = digest64(key.data(), key.size());
            if (const auto* b = std::get_if<BlankNode>(&t.subject)) {
                next[b->label] = digest64_mix(next[b->label], digest64_mix(h, 1));
            }
            if (const auto* b = std::get_if<BlankNode>(&t.object)) {
                next[b->label] = digest64_mix(next[b->label], digest64_mix(h, 2));
            }
        }
        sig = std::move(next);
    }
}

}  // namespace

std::vector<Triple> canonical_blanks(std::vector<Triple> triples) {
    std::set<std::string> blanks;
    for (const auto& t : triples) {
        if (const auto* b = std::get_if<BlankNode>(&t.subject)) blanks.insert(b->label);
        if (const auto* b = std::get_if<BlankNode>(&t.object)) blanks.insert(b->label);
    }
    if (blanks.empty()) {
        std::sort(triples.begin(), triples.end());
        return triples;
    }

    std::map<std::string, std::uint64_t> base;
    for (const auto& b : blanks) base[b] = 0;

    std::uint64_t mark = 1;
    std::map<std::string, std::uint64_t> sig;
    while (true) {
        sig = base;
        refine(triples, sig, 12);
        // first signature group with more than one member gets one member
        // individualized; repeat until all signatures are unique
        std::map<std::uint64_t, std::vector<std::string>> groups;
        for (const auto& [label, s] : sig) groups[s].push_back(label);
        const std::vector<std::string>* tie = nullptr;
        for (const auto& [s, members] : groups) {
            if (members.size() > 1) {
                tie = &members;
                break;
            }
        }
        if (!tie) break;
        base[tie->front()] = digest64_mix(0xabcdef, mark++);
    }

    // stable rename in signature order
    std::vector<std::pair<std::uint64_t, std::string>> order;
    for (const auto& [label, s] : sig) order.emplace_back(s, label);
    std::sort(order.begin(), order.end());
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < order.size(); ++i) {
        rename[order[i].second] = "c" + std::to_string(i);
    }
    for (auto& t : triples) {
        if (auto* b = std::get_if<BlankNode>(&t.subject)) b->label = rename[b->label];
        if (auto* b = std::get_if<BlankNode>(&t.object)) b->label = rename[b->label];
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    return triples;
}

bool same_up_to_blanks(const std::vector<Triple>& a, const std::vector<Triple>& b,
                       std::string* diff) {
    const auto ca = canonical_blanks(a);
    const auto cb = canonical_blanks(b);
    if (ca == cb) return true;
    if (diff) {
        std::ostringstream out;
        out << "only in first:\n";
        for (const auto& t : ca) {
            if (!std::binary_search(cb.begin(), cb.end(), t)) {
                out << "  " << to_ntriples_line(t) << "\n";
            }
        }
        out << "only in second:\n";
        for (const auto& t : cb) {
            if (!std::binary_search(ca.begin(), ca.end(), t)) {
                out << "  " << to_ntriples_line(t) << "\n";
            }
        }
        *diff = out.str();
    }
    return false;
}

// ---------------------------------------------------------------------------
// random ontology generator
// ---------------------------------------------------------------------------

namespace {
const std::string kNs = "http://t.example/onto#";
}

Ontology random_ontology(Rng& rng, int axiom_budget) {
    Ontology onto;
    const int n_classes = 12 + static_cast<int>(rng.below(8));
    const int n_props = 4 + static_cast<int>(rng.below(4));
    const int n_inds = 8 + static_cast<int>(rng.below(8));
    const int n_data = 2;

    std::vector<Iri> classes, props, inds, data_props;
    for (int i = 0; i < n_classes; ++i) {
        classes.push_back(kNs + "C" + std::to_string(i));
        onto.declare(classes.back(), EntityKind::Class);
    }
    for (int i = 0; i < n_props; ++i) {
        props.push_back(kNs + "p" + std::to_string(i));
        onto.declare(props.back(), EntityKind::ObjectProperty);
    }
    for (int i = 0; i < n_inds; ++i) {
        inds.push_back(kNs + "a" + std::to_string(i));
        onto.declare(inds.back(), EntityKind::Instance);
    }
    for (int i = 0; i < n_data; ++i) {
        data_props.push_back(kNs + "d" + std::to_string(i));
        onto.declare(data_props.back(), EntityKind::DataProperty);
    }
    const Iri note = kNs + "note";
    onto.declare(note, EntityKind::AnnotationProperty);

    auto cls = [&] { return classes[rng.below(classes.size())]; };
    auto prop = [&] { return props[rng.below(props.size())]; };
    auto ind = [&] { return inds[rng.below(inds.size())]; };

    auto random_members = [&](std::size_t count) {
        std::vector<ClassExprPtr> members;
        for (std::size_t i = 0; i < count; ++i) members.push_back(named(cls()));
        return members;
    };
    auto random_filler = [&]() -> ClassExprPtr {
        switch (rng.below(4)) {
            case 0: return named(cls());
            case 1: return union_of(random_members(2 + rng.below(2)));
            case 2: return intersection(random_members(2 + rng.below(2)));
            default: return some(prop(), named(cls()));  // nested; rules skip it
        }
    };
    auto random_restriction = [&]() -> ClassExprPtr {
        switch (rng.below(5)) {
            case 0: return some(prop(), random_filler());
            case 1: return only(prop(), random_filler());
            case 2:
                return cardinality(RestrictionKind::Min, prop(),
                                   static_cast<unsigned>(rng.below(4)),
                                   rng.below(2) ? random_filler() : nullptr);
            case 3:
                return cardinality(RestrictionKind::Max, prop(),
                                   static_cast<unsigned>(rng.below(4)),
                                   rng.below(2) ? random_filler() : nullptr);
            default:
                return cardinality(RestrictionKind::Exactly, prop(),
                                   static_cast<unsigned>(rng.below(4)),
                                   rng.below(2) ? random_filler() : nullptr);
        }
    };

    const int draws = 30 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                               std::max(1, axiom_budget - 30))));
    for (int i = 0; i < draws && static_cast<int>(onto.axioms.size()) < axiom_budget; ++i) {
        switch (rng.below(14)) {
            case 0:
            case 1:
                onto.add_axiom(SubClassOf{named(cls()), named(cls())});
                break;
            case 2:
                onto.add_axiom(SubClassOf{named(cls()), random_restriction()});
                break;
            case 3:
                onto.add_axiom(SubClassOf{random_restriction(), named(cls())});
                break;
            case 4:
                switch (rng.below(3)) {
                    case 0:
                        onto.add_axiom(EquivalentClasses{named(cls()), named(cls())});
                        break;
                    case 1:
                        onto.add_axiom(EquivalentClasses{
                            named(cls()), intersection(random_members(2 + rng.below(2)))});
                        break;
                    default:
                        onto.add_axiom(EquivalentClasses{
                            named(cls()), union_of(random_members(2 + rng.below(2)))});
                        break;
                }
                break;
            case 5:
                onto.add_axiom(SubClassOf{named(cls()), has_value(prop(), ind())});
                break;
            case 6:
                onto.add_axiom(Domain{prop(), cls()});
                break;
            case 7:
                onto.add_axiom(Range{prop(), cls()});
                break;
            case 8:
                onto.add_axiom(SubPropertyOf{prop(), prop()});
                break;
            case 9:
                onto.add_axiom(InverseOf{prop(), prop()});
                break;
            case 10: {
                std::vector<Iri> chain;
                const std::size_t len = 2 + rng.below(2);
                for (std::size_t s = 0; s < len; ++s) chain.push_back(prop());
                onto.add_axiom(PropertyChain{std::move(chain), prop()});
                break;
            }
            case 11:
                onto.add_axiom(ClassAssertion{rng.below(4) == 0
                                                  ? intersection(random_members(2))
                                                  : named(cls()),
                                              ind()});
                break;
            case 12:
                onto.add_axiom(ObjectAssertion{ind(), prop(), ind()});
                break;
            default:
                onto.add_axiom(DataAssertion{
                    ind(), data_props[rng.below(data_props.size())],
                    Literal{std::to_string(rng.below(1000)), Iri(vocab::xsd_integer), ""}});
                break;
        }
    }

    for (std::size_t i = 0; i < classes.size(); i += 3) {
        onto.add_annotation(classes[i], Iri(vocab::rdfs_label),
                            {"Class Label " + std::to_string(i), "", "en"});
    }
    onto.add_annotation(inds[0], note, {"a generated note value", "", ""});
    onto.rebuild_labels();
    return onto;
}

// ---------------------------------------------------------------------------
// oracle projector
// ---------------------------------------------------------------------------

std::set<EdgeKey> edge_keys(const ProjectedGraph& g) {
    std::set<EdgeKey> keys;
    for (const auto& e : g.edges) keys.emplace(e.subject, e.predicate, e.object);
    return keys;
}

namespace {

// Named members of D per the projection table's second condition:
// D ≡ B | B1 ⊔ ... ⊔ Bn | B1 ⊓ ... ⊓ Bn, plus the named filler itself.
std::vector<Iri> oracle_condition2(const Ontology& onto, const ClassExprPtr& filler) {
    std::vector<Iri> out;
    auto push = [&out](const Iri& iri) {
        if (std::find(out.begin(), out.end(), iri) == out.end()) out.push_back(iri);
    };
    auto push_members = [&](const ClassExprPtr& e) {
        if (const auto* n = std::get_if<NamedClass>(&e->node)) push(n->iri);
        if (const auto* i = std::get_if<Intersection>(&e->node)) {
            for (const auto& m : i->members) {
                if (const auto* n = std::get_if<NamedClass>(&m->node)) push(n->iri);
            }
        }
        if (const auto* u = std::get_if<Union>(&e->node)) {
            for (const auto& m : u->members) {
                if (const auto* n = std::get_if<NamedClass>(&m->node)) push(n->iri);
            }
        }
    };
    if (!filler) return out;
    push_members(filler);
    if (const auto* n = std::get_if<NamedClass>(&filler->node)) {
        for (const auto& axiom : onto.axioms) {
            const auto* eq = std::get_if<EquivalentClasses>(&axiom);
            if (!eq) continue;
            if (const auto* lhs = as_named(eq->a); lhs && lhs->iri == n->iri) {
                push_members(eq->b);
            }
            if (const auto* rhs = as_named(eq->b); rhs && rhs->iri == n->iri) {
                push_members(eq->a);
            }
        }
    }
    return out;
}

}  // namespace

namespace {

// Token interning so the fixpoint scans compare ints, not strings.
struct Interner {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    int operator()(const std::string& name) {
        const auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        const int id = static_cast<int>(names.size());
        ids.emplace(name, id);
        names.push_back(name);
        return id;
    }
};

}  // namespace

std::set<EdgeKey> oracle_project_rules(const Ontology& onto, bool inverse) {
    using IntEdge = std::tuple<int, int, int>;
    Interner intern;
    std::set<IntEdge> edges;
    const int subclassof = intern(std::string(vocab::rdfs_subclassof));
    const int subclassof_inv =
        intern(std::string(vocab::rdfs_subclassof) + std::string(vocab::inverse_suffix));
    const int type = intern(std::string(vocab::rdf_type));
    const int type_inv =
        intern(std::string(vocab::rdf_type) + std::string(vocab::inverse_suffix));

    auto restriction_edges = [&](const Iri& atomic, const ClassExprPtr& restr) {
        const auto* r = std::get_if<Restriction>(&restr->node);
        if (!r || r->kind == RestrictionKind::HasValue) return;
        for (const auto& target : oracle_condition2(onto, r->filler)) {
            edges.emplace(intern(atomic), intern(r->property), intern(target));
        }
    };

    for (const auto& axiom : onto.axioms) {
        if (const auto* s = std::get_if<SubClassOf>(&axiom)) {
            const auto* sub = as_named(s->sub);
            const auto* sup = as_named(s->sup);
            if (sub && sup) {
                edges.emplace(intern(sub->iri), subclassof, intern(sup->iri));
                if (inverse) {
                    edges.emplace(intern(sup->iri), subclassof_inv, intern(sub->iri));
                }
            } else if (sub && std::holds_alternative<Restriction>(s->sup->node)) {
                const auto& r = std::get<Restriction>(s->sup->node);
                if (r.kind == RestrictionKind::HasValue) {
                    // A ⊑ ∃r.{b} together with B(b)
                    for (const auto& other : onto.axioms) {
                        const auto* c = std::get_if<ClassAssertion>(&other);
                        if (!c || c->instance != r.individual) continue;
                        if (const auto* b = as_named(c->cls)) {
                            edges.emplace(intern(sub->iri), intern(r.property),
                                          intern(b->iri));
                        }
                    }
                } else {
                    restriction_edges(sub->iri, s->sup);
                }
            } else if (sup && std::holds_alternative<Restriction>(s->sub->node)) {
                restriction_edges(sup->iri, s->sub);
            }
        } else if (const auto* c = std::get_if<ClassAssertion>(&axiom)) {
            if (const auto* cl = as_named(c->cls)) {
                edges.emplace(intern(c->instance), type, intern(cl->iri));
                if (inverse) {
                    edges.emplace(intern(cl->iri), type_inv, intern(c->instance));
                }
            }
        } else if (const auto* o = std::get_if<ObjectAssertion>(&axiom)) {
            edges.emplace(intern(o->subject), intern(o->property), intern(o->object));
        } else if (const auto* d = std::get_if<DataAssertion>(&axiom)) {
            edges.emplace(intern(d->subject), intern(d->property),
                          intern(literal_token(d->value)));
        } else if (const auto* dm = std::get_if<Domain>(&axiom)) {
            for (const auto& other : onto.axioms) {
                const auto* rg = std::get_if<Range>(&other);
                if (rg && rg->property == dm->property) {
                    edges.emplace(intern(dm->cls), intern(dm->property), intern(rg->cls));
                }
            }
        }
    }

    for (const auto& [subject, entries] : onto.annotations) {
        for (const auto& entry : entries) {
            edges.emplace(intern(subject), intern(entry.property),
                          intern(literal_token(entry.value)));
        }
    }

    std::set<int> role_props;
    for (const auto& p : onto.object_properties) role_props.insert(intern(p));
    auto is_role = [&](const IntEdge& e) { return role_props.count(std::get<1>(e)) > 0; };

    // propagation rows, re-scanned until nothing new appears
    while (true) {
        const std::size_t before = edges.size();
        std::set<IntEdge> additions;
        // adjacency over the current role edges, rebuilt every round
        std::map<std::pair<int, int>, std::vector<int>> by_subject_pred;
        for (const auto& e : edges) {
            if (is_role(e)) {
                by_subject_pred[{std::get<0>(e), std::get<1>(e)}].push_back(std::get<2>(e));
            }
        }
        for (const auto& axiom : onto.axioms) {
            if (const auto* p = std::get_if<SubPropertyOf>(&axiom)) {
                const int sub = intern(p->sub);
                const int sup = intern(p->sup);
                for (const auto& e : edges) {
                    if (is_role(e) && std::get<1>(e) == sup) {
                        additions.emplace(std::get<0>(e), sub, std::get<2>(e));
                    }
                }
            } else if (const auto* v = std::get_if<InverseOf>(&axiom)) {
                const int p1 = intern(v->p1);
                const int p2 = intern(v->p2);
                for (const auto& e : edges) {
                    if (!is_role(e)) continue;
                    if (std::get<1>(e) == p1) {
                        additions.emplace(std::get<2>(e), p2, std::get<0>(e));
                    }
                    if (std::get<1>(e) == p2) {
                        additions.emplace(std::get<2>(e), p1, std::get<0>(e));
                    }
                }
            } else if (const auto* ch = std::get_if<PropertyChain>(&axiom)) {
                std::vector<int> steps;
                for (const auto& s : ch->chain) steps.push_back(intern(s));
                const int sup = intern(ch->sup);
                std::set<int> starts;
                for (const auto& e : edges) {
                    if (is_role(e) && std::get<1>(e) == steps.front()) {
                        starts.insert(std::get<0>(e));
                    }
                }
                for (const int start : starts) {
                    std::set<int> frontier{start};
                    for (const int step : steps) {
                        std::set<int> next;
                        for (const int node : frontier) {
                            const auto it = by_subject_pred.find({node, step});
                            if (it == by_subject_pred.end()) continue;
                            next.insert(it->second.begin(), it->second.end());
                        }
                        frontier = std::move(next);
                        if (frontier.empty()) break;
                    }
                    for (const int end : frontier) additions.emplace(start, sup, end);
                }
            }
        }
        edges.insert(additions.begin(), additions.end());
        if (edges.size() == before) break;
    }

    std::set<EdgeKey> out;
    for (const auto& [s, p, o] : edges) {
        out.emplace(intern.names[static_cast<std::size_t>(s)],
                    intern.names[static_cast<std::size_t>(p)],
                    intern.names[static_cast<std::size_t>(o)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Warshall closure oracle
// ---------------------------------------------------------------------------

std::map<Iri, std::set<Iri>> warshall_closure(const std::set<Iri>& nodes,
                                              const std::vector<std::pair<Iri, Iri>>& edges) {
    std::vector<Iri> order(nodes.begin(), nodes.end());
    std::map<Iri, std::size_t> idx;
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
    const std::size_t n = order.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) {
        if (a != b) reach[idx.at(a)][idx.at(b)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) reach[i][j] = true;
            }
        }
    }
    std::map<Iri, std::set<Iri>> closure;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && reach[i][j]) closure[order[i]].insert(order[j]);
        }
    }
    return closure;
}

}  // namespace testsupport
