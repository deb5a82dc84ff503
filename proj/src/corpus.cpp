#include "ontoembed/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ontoembed/projection.hpp"
#include "ontoembed/rng.hpp"
#include "ontoembed/text.hpp"

namespace ontoembed {

DocumentSetting parse_document_setting(const std::string& name) {
    if (name == "s") return DocumentSetting::S;
    if (name == "sl") return DocumentSetting::SL;
    if (name == "slrc") return DocumentSetting::SLRC;
    if (name == "sltc") return DocumentSetting::SLTC;
    throw std::invalid_argument("unknown document setting: " + name);
}

std::string document_setting_name(DocumentSetting s) {
    switch (s) {
        case DocumentSetting::S: return "s";
        case DocumentSetting::SL: return "sl";
        case DocumentSetting::SLRC: return "slrc";
        case DocumentSetting::SLTC: return "sltc";
    }
    return "s";
}

namespace {

void expr_tokens(const ClassExprPtr& e, std::vector<std::string>& out) {
    if (const auto* n = std::get_if<NamedClass>(&e->node)) {
        out.push_back(n->iri);
        return;
    }
    if (const auto* i = std::get_if<Intersection>(&e->node)) {
        for (std::size_t m = 0; m < i->members.size(); ++m) {
            if (m > 0) out.push_back("and");
            expr_tokens(i->members[m], out);
        }
        return;
    }
    if (const auto* u = std::get_if<Union>(&e->node)) {
        for (std::size_t m = 0; m < u->members.size(); ++m) {
            if (m > 0) out.push_back("or");
            expr_tokens(u->members[m], out);
        }
        return;
    }
    const auto& r = std::get<Restriction>(e->node);
    out.push_back(r.property);
    switch (r.kind) {
        case RestrictionKind::Some: out.push_back("some"); break;
        case RestrictionKind::Only: out.push_back("only"); break;
        case RestrictionKind::Min: out.push_back("min"); break;
        case RestrictionKind::Max: out.push_back("max"); break;
        case RestrictionKind::Exactly: out.push_back("exactly"); break;
        case RestrictionKind::HasValue: out.push_back("value"); break;
    }
    if (r.kind == RestrictionKind::HasValue) {
        out.push_back(r.individual);
        return;
    }
    if (r.kind == RestrictionKind::Min || r.kind == RestrictionKind::Max ||
        r.kind == RestrictionKind::Exactly) {
        out.push_back(std::to_string(r.cardinality));
        if (r.filler) expr_tokens(r.filler, out);
        return;
    }
    expr_tokens(r.filler, out);
}

}  // namespace

Sentence axiom_sentence(const Axiom& axiom) {
    Sentence s;
    s.provenance = Provenance::Axiom;
    auto& t = s.tokens;
    if (const auto* sc = std::get_if<SubClassOf>(&axiom)) {
        expr_tokens(sc->sub, t);
        t.push_back("subClassOf");
        expr_tokens(sc->sup, t);
    } else if (const auto* eq = std::get_if<EquivalentClasses>(&axiom)) {
        expr_tokens(eq->a, t);
        t.push_back("equivalentTo");
        expr_tokens(eq->b, t);
    } else if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) {
        t.push_back(ca->instance);
        t.push_back("type");
        expr_tokens(ca->cls, t);
    } else if (const auto* oa = std::get_if<ObjectAssertion>(&axiom)) {
        t = {oa->subject, oa->property, oa->object};
    } else if (const auto* da = std::get_if<DataAssertion>(&axiom)) {
        t = {da->subject, da->property, literal_token(da->value)};
    } else if (const auto* sp = std::get_if<SubPropertyOf>(&axiom)) {
        t = {sp->sub, "subPropertyOf", sp->sup};
    } else if (const auto* inv = std::get_if<InverseOf>(&axiom)) {
        t = {inv->p1, "inverseOf", inv->p2};
    } else if (const auto* ch = std::get_if<PropertyChain>(&axiom)) {
        for (std::size_t i = 0; i < ch->chain.size(); ++i) {
            if (i > 0) t.push_back("o");
            t.push_back(ch->chain[i]);
        }
        t.push_back("subPropertyOf");
        t.push_back(ch->sup);
    } else if (const auto* dm = std::get_if<Domain>(&axiom)) {
        t = {dm->property, "domain", dm->cls};
    } else if (const auto* rg = std::get_if<Range>(&axiom)) {
        t = {rg->property, "range", rg->cls};
    }
    return s;
}

Document build_structure(const std::vector<Walk>& walks, const Ontology& onto) {
    Document doc;
    doc.reserve(walks.size() + onto.axioms.size());
    for (const auto& walk : walks) {
        doc.push_back(Sentence{walk.tokens, Provenance::Walk});
    }
    for (const auto& axiom : onto.axioms) {
        doc.push_back(axiom_sentence(axiom));
    }
    return doc;
}

namespace {

bool is_kernel_token(const std::string& token) {
    return token.rfind("kernel_", 0) == 0;
}
bool is_blank_token(const std::string& token) { return token.rfind("_:", 0) == 0; }

bool is_iri_token(const std::string& token) {
    return !is_kernel_token(token) && !is_blank_token(token) && looks_like_iri(token);
}

}  // namespace

std::vector<std::string> lexicalize_token(const Ontology& onto, const std::string& token) {
    if (is_kernel_token(token) || is_blank_token(token)) return {token};
    if (is_iri_token(token)) return lexical_tokens(onto, token);
    auto words = tokenize(token);
    if (words.empty()) return {token};
    return words;
}

Document build_lexical(const Document& structure, const Ontology& onto) {
    Document doc;
    doc.reserve(structure.size() + onto.annotations.size());
    for (const auto& sentence : structure) {
        Sentence out;
        out.provenance = Provenance::LabelReplaced;
        for (const auto& token : sentence.tokens) {
            for (auto& word : lexicalize_token(onto, token)) {
                out.tokens.push_back(std::move(word));
            }
        }
        doc.push_back(std::move(out));
    }
    for (const auto& [subject, entries] : onto.annotations) {
        for (const auto& entry : entries) {
            if (entry.property == vocab::rdfs_label) continue;
            Sentence out;
            out.provenance = Provenance::Annotation;
            out.tokens = lexical_tokens(onto, subject);
            for (auto& word : tokenize(entry.value.lexical)) {
                out.tokens.push_back(std::move(word));
            }
            doc.push_back(std::move(out));
        }
    }
    return doc;
}

Document build_combined(const Document& structure, const Ontology& onto,
                        CombinedStrategy strategy, std::uint64_t seed) {
    Document doc;
    Rng rng(seed);
    const Provenance provenance = strategy == CombinedStrategy::Random
                                      ? Provenance::CombinedRandom
                                      : Provenance::CombinedTraversal;
    auto emit = [&](const Sentence& sentence, std::size_t keep) {
        Sentence out;
        out.provenance = provenance;
        for (std::size_t p = 0; p < sentence.tokens.size(); ++p) {
            if (p == keep) {
                out.tokens.push_back(sentence.tokens[p]);
            } else {
                for (auto& word : lexicalize_token(onto, sentence.tokens[p])) {
                    out.tokens.push_back(std::move(word));
                }
            }
        }
        doc.push_back(std::move(out));
    };

    for (const auto& sentence : structure) {
        std::vector<std::size_t> iri_positions;
        for (std::size_t p = 0; p < sentence.tokens.size(); ++p) {
            if (is_iri_token(sentence.tokens[p])) iri_positions.push_back(p);
        }
        if (iri_positions.empty()) continue;
        if (strategy == CombinedStrategy::Random) {
            emit(sentence, iri_positions[rng.below(iri_positions.size())]);
        } else {
            for (std::size_t keep : iri_positions) emit(sentence, keep);
        }
    }
    return doc;
}

Document merge(const Corpus& corpus, DocumentSetting setting) {
    Document out = corpus.structure;
    if (setting != DocumentSetting::S) {
        out.insert(out.end(), corpus.lexical.begin(), corpus.lexical.end());
    }
    if (setting == DocumentSetting::SLRC || setting == DocumentSetting::SLTC) {
        out.insert(out.end(), corpus.combined.begin(), corpus.combined.end());
    }
    return out;
}

void save_sentences(std::ostream& out, const Document& doc) {
    for (const auto& sentence : doc) {
        for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
            if (i > 0) out << ' ';
            out << sentence.tokens[i];
        }
        out << '\n';
    }
}

void save_sentences_file(const std::string& path, const Document& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_sentences(out, doc);
}

Document load_sentences(std::istream& in, Provenance provenance) {
    Document doc;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Sentence sentence;
        sentence.provenance = provenance;
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) sentence.tokens.push_back(token);
        if (!sentence.tokens.empty()) doc.push_back(std::move(sentence));
    }
    return doc;
}

Document load_sentences_file(const std::string& path, Provenance provenance) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_sentences(in, provenance);
}

}  // namespace ontoembed
