#include "ontoembed/reasoner.hpp"

#include <algorithm>
#include <deque>

namespace ontoembed {

namespace {

// Named classes a class expression directly entails as superclasses: the
// expression itself when named, or the named conjuncts of an intersection.
void named_superclasses(const ClassExprPtr& e, std::vector<Iri>& out) {
    if (!e) return;
    if (const auto* n = std::get_if<NamedClass>(&e->node)) {
        out.push_back(n->iri);
    } else if (const auto* i = std::get_if<Intersection>(&e->node)) {
        for (const auto& m : i->members) {
            if (const auto* named_member = as_named(m)) out.push_back(named_member->iri);
        }
    }
}

std::set<Iri> reachable(const std::map<Iri, std::set<Iri>>& adj, const Iri& start) {
    std::set<Iri> seen;
    std::deque<Iri> queue{start};
    while (!queue.empty()) {
        const Iri cur = queue.front();
        queue.pop_front();
        const auto it = adj.find(cur);
        if (it == adj.end()) continue;
        for (const auto& next : it->second) {
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

std::map<Iri, std::set<Iri>> transitive_closure(const std::map<Iri, std::set<Iri>>& adj,
                                                const std::set<Iri>& nodes) {
    std::map<Iri, std::set<Iri>> closure;
    for (const auto& node : nodes) {
        auto reach = reachable(adj, node);
        reach.erase(node);  // strict
        if (!reach.empty()) closure[node] = std::move(reach);
    }
    return closure;
}

}  // namespace

Closure classify(const Ontology& onto) {
    Closure closure;

    std::map<Iri, std::set<Iri>> class_edges;
    std::map<Iri, std::set<Iri>> prop_edges;
    std::map<Iri, std::set<Iri>> member_seeds;
    std::set<Iri> class_nodes;
    std::set<Iri> prop_nodes;

    auto add_class_edge = [&](const Iri& sub, const Iri& sup) {
        if (sub == sup) return;
        class_edges[sub].insert(sup);
        class_nodes.insert(sub);
        class_nodes.insert(sup);
    };

    for (const auto& axiom : onto.axioms) {
        if (const auto* s = std::get_if<SubClassOf>(&axiom)) {
            const auto* sub = as_named(s->sub);
            if (!sub) continue;
            std::vector<Iri> sups;
            named_superclasses(s->sup, sups);
            for (const auto& sup : sups) add_class_edge(sub->iri, sup);
        } else if (const auto* e = std::get_if<EquivalentClasses>(&axiom)) {
            for (const auto& [lhs, rhs] : {std::pair{e->a, e->b}, std::pair{e->b, e->a}}) {
                const auto* sub = as_named(lhs);
                if (!sub) continue;
                std::vector<Iri> sups;
                named_superclasses(rhs, sups);
                for (const auto& sup : sups) add_class_edge(sub->iri, sup);
            }
        } else if (const auto* c = std::get_if<ClassAssertion>(&axiom)) {
            std::vector<Iri> classes;
            named_superclasses(c->cls, classes);
            for (const auto& cls : classes) member_seeds[c->instance].insert(cls);
        } else if (const auto* p = std::get_if<SubPropertyOf>(&axiom)) {
            if (p->sub != p->sup) {
                prop_edges[p->sub].insert(p->sup);
                prop_nodes.insert(p->sub);
                prop_nodes.insert(p->sup);
            }
        }
    }

    closure.subsumes = transitive_closure(class_edges, class_nodes);
    closure.sub_prop = transitive_closure(prop_edges, prop_nodes);

    // cycles have become mutual subsumptions; report each group once
    std::set<Iri> in_cycle;
    for (const auto& [node, sups] : closure.subsumes) {
        for (const auto& sup : sups) {
            const auto back = closure.subsumes.find(sup);
            if (back != closure.subsumes.end() && back->second.count(node)) {
                in_cycle.insert(node);
                in_cycle.insert(sup);
            }
        }
    }
    std::set<Iri> reported;
    for (const auto& node : in_cycle) {
        if (reported.count(node)) continue;
        std::string group = node;
        reported.insert(node);
        for (const auto& other : closure.subsumes.at(node)) {
            if (in_cycle.count(other) && closure.subsumes.at(other).count(node)) {
                group += " ~ " + other;
                reported.insert(other);
            }
        }
        closure.warnings.push_back("subsumption cycle collapsed to equivalence: " + group);
    }

    for (const auto& [instance, seeds] : member_seeds) {
        std::set<Iri> all = seeds;
        for (const auto& seed : seeds) {
            const auto it = closure.subsumes.find(seed);
            if (it != closure.subsumes.end()) all.insert(it->second.begin(), it->second.end());
        }
        closure.member_of[instance] = std::move(all);
    }

    return closure;
}

bool is_entailed(const Closure& closure, const Iri& head, const Iri& tail, Task task) {
    const auto& rel = task == Task::Membership ? closure.member_of : closure.subsumes;
    const auto it = rel.find(head);
    return it != rel.end() && it->second.count(tail) > 0;
}

Ontology materialize(const Ontology& onto, const Closure& closure) {
    Ontology out = onto;
    std::set<std::string> existing;
    for (const auto& axiom : onto.axioms) existing.insert(axiom_key(axiom));

    for (const auto& [sub, sups] : closure.subsumes) {
        for (const auto& sup : sups) {
            Axiom candidate = SubClassOf{named(sub), named(sup)};
            if (existing.insert(axiom_key(candidate)).second) {
                out.add_axiom(std::move(candidate));
            }
        }
    }
    for (const auto& [instance, classes] : closure.member_of) {
        for (const auto& cls : classes) {
            Axiom candidate = ClassAssertion{named(cls), instance};
            if (existing.insert(axiom_key(candidate)).second) {
                out.add_axiom(std::move(candidate));
            }
        }
    }
    return out;
}

}  // namespace ontoembed
