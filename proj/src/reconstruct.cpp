#include <algorithm>
#include <map>
#include <optional>

#include "ontoembed/ntriples.hpp"
#include "ontoembed/ontology.hpp"

// Inverse of the OWL-to-RDF mapping for the supported subset: declarations,
// subsumption/equivalence (with blank-node class expressions), assertions,
// property axioms and annotations. Everything else stays in the residue.

namespace ontoembed {

namespace {

using vocab::is_builtin_annotation_property;

constexpr std::string_view kXsdPrefix = "http://www.w3.org/2001/XMLSchema#";

bool is_structural_predicate(const Iri& p) {
    return p == vocab::owl_on_property || p == vocab::owl_on_class ||
           p == vocab::owl_some_values_from || p == vocab::owl_all_values_from ||
           p == vocab::owl_has_value || p == vocab::owl_min_cardinality ||
           p == vocab::owl_max_cardinality || p == vocab::owl_cardinality ||
           p == vocab::owl_min_qualified_cardinality ||
           p == vocab::owl_max_qualified_cardinality ||
           p == vocab::owl_qualified_cardinality || p == vocab::owl_intersection_of ||
           p == vocab::owl_union_of || p == vocab::rdf_first || p == vocab::rdf_rest;
}

struct Reconstructor {
    const std::vector<Triple>& triples;
    std::vector<bool> consumed;
    std::map<std::string, std::vector<std::size_t>> by_blank_subject;
    Ontology onto;

    explicit Reconstructor(const std::vector<Triple>& ts)
        : triples(ts), consumed(ts.size(), false) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (const auto* b = std::get_if<BlankNode>(&ts[i].subject)) {
                by_blank_subject[b->label].push_back(i);
            }
        }
    }

    std::optional<std::uint64_t> parse_nonneg(const Literal& lit) const {
        if (lit.lexical.empty()) return std::nullopt;
        std::uint64_t value = 0;
        for (char c : lit.lexical) {
            if (c < '0' || c > '9') return std::nullopt;
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return value;
    }

    // RDF collection rooted at `term`; nullopt on malformed structure.
    std::optional<std::vector<Term>> parse_list(const Term& term,
                                                std::vector<std::size_t>& used,
                                                int depth = 0) {
        if (depth > 1000) return std::nullopt;
        if (const auto* iri = std::get_if<Iri>(&term)) {
            if (*iri == vocab::rdf_nil) return std::vector<Term>{};
            return std::nullopt;
        }
        const auto* b = std::get_if<BlankNode>(&term);
        if (!b) return std::nullopt;
        const auto it = by_blank_subject.find(b->label);
        if (it == by_blank_subject.end()) return std::nullopt;

        std::optional<std::size_t> first_idx, rest_idx;
        for (std::size_t idx : it->second) {
            if (consumed[idx]) continue;
            const auto& t = triples[idx];
            if (t.predicate == vocab::rdf_first && !first_idx) first_idx = idx;
            else if (t.predicate == vocab::rdf_rest && !rest_idx) rest_idx = idx;
        }
        if (!first_idx || !rest_idx) return std::nullopt;
        auto tail = parse_list(triples[*rest_idx].object, used, depth + 1);
        if (!tail) return std::nullopt;
        used.push_back(*first_idx);
        used.push_back(*rest_idx);
        std::vector<Term> out;
        out.push_back(triples[*first_idx].object);
        out.insert(out.end(), tail->begin(), tail->end());
        return out;
    }

    ClassExprPtr parse_expr(const Term& term, std::vector<std::size_t>& used,
                            int depth = 0) {
        if (depth > 64) return nullptr;
        if (const auto* iri = std::get_if<Iri>(&term)) return named(*iri);
        const auto* b = std::get_if<BlankNode>(&term);
        if (!b) return nullptr;
        const auto it = by_blank_subject.find(b->label);
        if (it == by_blank_subject.end()) return nullptr;

        std::map<Iri, std::size_t> parts;  // predicate -> first unconsumed triple
        std::optional<std::size_t> class_decl;
        for (std::size_t idx : it->second) {
            if (consumed[idx]) continue;
            const auto& t = triples[idx];
            if (t.predicate == vocab::rdf_type) {
                const auto* obj = std::get_if<Iri>(&t.object);
                if (obj && *obj == vocab::owl_restriction) parts.emplace(t.predicate, idx);
                else if (obj && *obj == vocab::owl_class) class_decl = idx;
                continue;
            }
            parts.emplace(t.predicate, idx);
        }

        auto take = [&](std::string_view pred) -> const Triple* {
            const auto found = parts.find(Iri(pred));
            return found == parts.end() ? nullptr : &triples[found->second];
        };
        auto mark = [&](std::string_view pred) {
            used.push_back(parts.at(Iri(pred)));
        };

        // n-ary boolean expression
        for (std::string_view op : {vocab::owl_intersection_of, vocab::owl_union_of}) {
            const Triple* root = take(op);
            if (!root) continue;
            std::vector<std::size_t> local;
            auto members = parse_list(root->object, local);
            if (!members || members->size() < 2) return nullptr;
            std::vector<ClassExprPtr> exprs;
            for (const auto& m : *members) {
                auto e = parse_expr(m, local, depth + 1);
                if (!e) return nullptr;
                exprs.push_back(std::move(e));
            }
            used.insert(used.end(), local.begin(), local.end());
            mark(op);
            if (class_decl) used.push_back(*class_decl);
            return op == vocab::owl_intersection_of ? intersection(std::move(exprs))
                                                    : union_of(std::move(exprs));
        }

        // restriction pattern
        if (!take(vocab::rdf_type) || !take(vocab::owl_on_property)) return nullptr;
        const Triple* on_property = take(vocab::owl_on_property);
        const auto* prop = std::get_if<Iri>(&on_property->object);
        if (!prop) return nullptr;

        auto finish = [&](ClassExprPtr expr, std::initializer_list<std::string_view> preds) {
            mark(vocab::rdf_type);
            mark(vocab::owl_on_property);
            for (auto p : preds) mark(p);
            return expr;
        };

        if (const Triple* t = take(vocab::owl_some_values_from)) {
            std::vector<std::size_t> local;
            auto filler = parse_expr(t->object, local, depth + 1);
            if (!filler) return nullptr;
            used.insert(used.end(), local.begin(), local.end());
            return finish(some(*prop, std::move(filler)), {vocab::owl_some_values_from});
        }
        if (const Triple* t = take(vocab::owl_all_values_from)) {
            std::vector<std::size_t> local;
            auto filler = parse_expr(t->object, local, depth + 1);
            if (!filler) return nullptr;
            used.insert(used.end(), local.begin(), local.end());
            return finish(only(*prop, std::move(filler)), {vocab::owl_all_values_from});
        }
        if (const Triple* t = take(vocab::owl_has_value)) {
            const auto* ind = std::get_if<Iri>(&t->object);
            if (!ind) return nullptr;
            return finish(has_value(*prop, *ind), {vocab::owl_has_value});
        }

        struct CardPattern {
            std::string_view pred;
            RestrictionKind kind;
            bool qualified;
        };
        constexpr CardPattern kCards[] = {
            {vocab::owl_min_cardinality, RestrictionKind::Min, false},
            {vocab::owl_max_cardinality, RestrictionKind::Max, false},
            {vocab::owl_cardinality, RestrictionKind::Exactly, false},
            {vocab::owl_min_qualified_cardinality, RestrictionKind::Min, true},
            {vocab::owl_max_qualified_cardinality, RestrictionKind::Max, true},
            {vocab::owl_qualified_cardinality, RestrictionKind::Exactly, true},
        };
        for (const auto& card : kCards) {
            const Triple* t = take(card.pred);
            if (!t) continue;
            const auto* lit = std::get_if<Literal>(&t->object);
            if (!lit) return nullptr;
            auto n = parse_nonneg(*lit);
            if (!n) return nullptr;
            ClassExprPtr qualifier;
            if (card.qualified) {
                const Triple* on_class = take(vocab::owl_on_class);
                if (!on_class) return nullptr;
                std::vector<std::size_t> local;
                qualifier = parse_expr(on_class->object, local, depth + 1);
                if (!qualifier) return nullptr;
                used.insert(used.end(), local.begin(), local.end());
                return finish(cardinality(card.kind, *prop, static_cast<unsigned>(*n),
                                          std::move(qualifier)),
                              {card.pred, vocab::owl_on_class});
            }
            return finish(cardinality(card.kind, *prop, static_cast<unsigned>(*n)),
                          {card.pred});
        }
        return nullptr;
    }

    void consume(const std::vector<std::size_t>& used) {
        for (std::size_t idx : used) consumed[idx] = true;
    }

    void warn(const std::string& msg) { onto.warnings.push_back(msg); }

    void run() {
        // declarations first so later classification can rely on them
        for (std::size_t i = 0; i < triples.size(); ++i) {
            const auto& t = triples[i];
            if (t.predicate != vocab::rdf_type) continue;
            const auto* subj = std::get_if<Iri>(&t.subject);
            const auto* obj = std::get_if<Iri>(&t.object);
            if (!subj || !obj) continue;
            if (*obj == vocab::owl_class) onto.declare(*subj, EntityKind::Class);
            else if (*obj == vocab::owl_named_individual) onto.declare(*subj, EntityKind::Instance);
            else if (*obj == vocab::owl_object_property) onto.declare(*subj, EntityKind::ObjectProperty);
            else if (*obj == vocab::owl_datatype_property) onto.declare(*subj, EntityKind::DataProperty);
            else if (*obj == vocab::owl_annotation_property) onto.declare(*subj, EntityKind::AnnotationProperty);
            else continue;
            consumed[i] = true;
        }

        for (std::size_t i = 0; i < triples.size(); ++i) {
            if (consumed[i]) continue;
            const auto& t = triples[i];
            const auto* subj_iri = std::get_if<Iri>(&t.subject);
            const bool subj_blank = is_blank(t.subject);

            // expression-internal triples are claimed by parse_expr
            if (subj_blank &&
                (is_structural_predicate(t.predicate) ||
                 (t.predicate == vocab::rdf_type && is_iri(t.object) &&
                  (std::get<Iri>(t.object) == vocab::owl_restriction ||
                   std::get<Iri>(t.object) == vocab::owl_class)))) {
                continue;
            }

            if (t.predicate == vocab::rdfs_subclassof ||
                t.predicate == vocab::owl_equivalent_class) {
                std::vector<std::size_t> used{i};
                auto lhs = parse_expr(t.subject, used);
                auto rhs = parse_expr(t.object, used);
                if (lhs && rhs) {
                    consume(used);
                    if (t.predicate == vocab::rdfs_subclassof) {
                        onto.add_axiom(SubClassOf{std::move(lhs), std::move(rhs)});
                    } else {
                        onto.add_axiom(EquivalentClasses{std::move(lhs), std::move(rhs)});
                    }
                } else {
                    warn("incomplete class expression around " + to_ntriples_line(t));
                }
                continue;
            }

            if (t.predicate == vocab::rdf_type) {
                if (!subj_iri) continue;  // blank individual: residue
                if (is_iri(t.object) && std::get<Iri>(t.object) == vocab::owl_ontology) {
                    continue;  // ontology header: residue
                }
                std::vector<std::size_t> used{i};
                auto cls = parse_expr(t.object, used);
                if (cls) {
                    consume(used);
                    onto.add_axiom(ClassAssertion{std::move(cls), *subj_iri});
                } else {
                    warn("incomplete class expression around " + to_ntriples_line(t));
                }
                continue;
            }

            if (t.predicate == vocab::rdfs_subpropertyof && subj_iri && is_iri(t.object)) {
                consumed[i] = true;
                onto.add_axiom(SubPropertyOf{*subj_iri, std::get<Iri>(t.object)});
                continue;
            }
            if (t.predicate == vocab::owl_inverse_of && subj_iri && is_iri(t.object)) {
                consumed[i] = true;
                onto.add_axiom(InverseOf{*subj_iri, std::get<Iri>(t.object)});
                continue;
            }
            if (t.predicate == vocab::owl_property_chain_axiom && subj_iri) {
                std::vector<std::size_t> used{i};
                auto list = parse_list(t.object, used);
                if (list && list->size() >= 2) {
                    std::vector<Iri> chain;
                    bool ok = true;
                    for (const auto& m : *list) {
                        const auto* iri = std::get_if<Iri>(&m);
                        if (!iri) { ok = false; break; }
                        chain.push_back(*iri);
                    }
                    if (ok) {
                        consume(used);
                        onto.add_axiom(PropertyChain{std::move(chain), *subj_iri});
                        continue;
                    }
                }
                warn("malformed property chain around " + to_ntriples_line(t));
                continue;
            }
            if ((t.predicate == vocab::rdfs_domain || t.predicate == vocab::rdfs_range) &&
                subj_iri && is_iri(t.object)) {
                const auto& cls = std::get<Iri>(t.object);
                if (cls.compare(0, kXsdPrefix.size(), kXsdPrefix) == 0) {
                    continue;  // datatype ranges: residue
                }
                consumed[i] = true;
                if (t.predicate == vocab::rdfs_domain) onto.add_axiom(Domain{*subj_iri, cls});
                else onto.add_axiom(Range{*subj_iri, cls});
                continue;
            }

            if (is_literal(t.object) && subj_iri) {
                const auto& lit = std::get<Literal>(t.object);
                const bool annotation =
                    is_builtin_annotation_property(t.predicate) ||
                    onto.annotation_properties.count(t.predicate) > 0;
                consumed[i] = true;
                if (annotation) {
                    onto.add_annotation(*subj_iri, t.predicate, lit);
                } else {
                    onto.add_axiom(DataAssertion{*subj_iri, t.predicate, lit});
                }
                continue;
            }

            if (is_iri(t.object) && subj_iri && !onto.annotation_properties.count(t.predicate) &&
                !onto.data_properties.count(t.predicate)) {
                consumed[i] = true;
                onto.add_axiom(ObjectAssertion{*subj_iri, t.predicate, std::get<Iri>(t.object)});
                continue;
            }
            // anything else: residue
        }

        for (std::size_t i = 0; i < triples.size(); ++i) {
            if (consumed[i]) continue;
            const auto& t = triples[i];
            if (is_blank(t.subject) &&
                (is_structural_predicate(t.predicate) || t.predicate == vocab::rdf_type)) {
                warn("orphan blank-node pattern triple: " + to_ntriples_line(t));
            }
            onto.residue.push_back(t);
        }

        onto.rebuild_labels();
    }
};

}  // namespace

Ontology reconstruct_axioms(const std::vector<Triple>& triples) {
    // canonical order: the result depends only on the triple multiset
    std::vector<Triple> sorted = triples;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Reconstructor rec(sorted);
    rec.run();
    return std::move(rec.onto);
}

}  // namespace ontoembed
