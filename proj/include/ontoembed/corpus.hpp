#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ontoembed/ontology.hpp"
#include "ontoembed/walker.hpp"

namespace ontoembed {

enum class Provenance : std::uint8_t {
    Walk,
    Axiom,
    LabelReplaced,
    Annotation,
    CombinedRandom,
    CombinedTraversal,
};

struct Sentence {
    std::vector<std::string> tokens;  // non-empty; no whitespace inside a token
    Provenance provenance = Provenance::Walk;
    bool operator==(const Sentence& o) const { return tokens == o.tokens; }
};

using Document = std::vector<Sentence>;

struct Corpus {
    Document structure;
    Document lexical;
    Document combined;
};

// Which documents feed training: s / sl / slrc / sltc (structure, lexical,
// combined-random, combined-traversal).
enum class DocumentSetting { S, SL, SLRC, SLTC };

DocumentSetting parse_document_setting(const std::string& name);
std::string document_setting_name(DocumentSetting s);

// Manchester-style linearization; built-in keywords ("subClassOf", "some",
// "and", ...) stay as tokens, entity positions keep full IRIs.
Sentence axiom_sentence(const Axiom& axiom);

// All walk sentences followed by all axiom sentences.
Document build_structure(const std::vector<Walk>& walks, const Ontology& onto);

// Word tokens for one sentence token: kernel ids and blank nodes verbatim,
// IRIs through their label / IRI name (full IRI if neither tokenizes),
// anything else lowercased-tokenized with a verbatim fallback.
std::vector<std::string> lexicalize_token(const Ontology& onto, const std::string& token);

// Kind 1: every structure sentence with IRI tokens word-replaced.
// Kind 2: one sentence per non-rdfs:label annotation axiom.
Document build_lexical(const Document& structure, const Ontology& onto);

enum class CombinedStrategy { Random, Traversal };

// Random: one sentence per eligible structure sentence with one uniformly
// chosen IRI kept. Traversal: one sentence per IRI token of the sentence.
Document build_combined(const Document& structure, const Ontology& onto,
                        CombinedStrategy strategy, std::uint64_t seed);

// Concatenated stream in fixed order (structure, lexical, combined).
Document merge(const Corpus& corpus, DocumentSetting setting);

// One sentence per line, single-space separated, UTF-8.
void save_sentences(std::ostream& out, const Document& doc);
void save_sentences_file(const std::string& path, const Document& doc);
Document load_sentences(std::istream& in, Provenance provenance = Provenance::Walk);
Document load_sentences_file(const std::string& path,
                             Provenance provenance = Provenance::Walk);

}  // namespace ontoembed
