#include "ontoembed/synth.hpp"

#include <set>

#include "ontoembed/rng.hpp"

namespace ontoembed {

namespace {

constexpr std::string_view kNs = "http://example.org/synth#";

std::string pseudo_word(Rng& rng, std::set<std::string>& taken) {
    static constexpr const char* kConsonants = "bdfgklmnprstvz";
    static constexpr const char* kVowels = "aeiou";
    while (true) {
        std::string word;
        const int syllables = 2 + static_cast<int>(rng.below(2));
        for (int s = 0; s < syllables; ++s) {
            word.push_back(kConsonants[rng.below(14)]);
            word.push_back(kVowels[rng.below(5)]);
        }
        if (taken.insert(word).second) return word;
    }
}

std::string capitalize(std::string word) {
    if (!word.empty()) word[0] = static_cast<char>(word[0] - 'a' + 'A');
    return word;
}

}  // namespace

Ontology generate_synthetic(const SynthConfig& cfg) {
    Ontology onto;
    Rng rng(cfg.seed);
    std::set<std::string> taken_words;

    const Iri related_to = std::string(kNs) + "relatedTo";
    const Iri has_quality = std::string(kNs) + "hasQuality";
    const Iri has_score = std::string(kNs) + "hasScore";
    const Iri definition = std::string(kNs) + "definition";
    onto.declare(related_to, EntityKind::ObjectProperty);
    onto.declare(has_quality, EntityKind::ObjectProperty);
    onto.declare(has_score, EntityKind::DataProperty);
    onto.declare(definition, EntityKind::AnnotationProperty);
    onto.add_annotation(related_to, Iri(vocab::rdfs_label), {"related to", "", "en"});
    onto.add_annotation(has_quality, Iri(vocab::rdfs_label), {"has quality", "", "en"});
    onto.add_annotation(has_score, Iri(vocab::rdfs_label), {"has score", "", "en"});

    int class_counter = 0;
    int instance_counter = 0;

    for (int c = 0; c < cfg.clusters; ++c) {
        const std::string root_word = pseudo_word(rng, taken_words);
        const std::string family_word = pseudo_word(rng, taken_words);

        const Iri root = std::string(kNs) + "Q" + std::to_string(class_counter++);
        onto.declare(root, EntityKind::Class);
        onto.add_annotation(root, Iri(vocab::rdfs_label),
                            {capitalize(family_word) + " " + capitalize(root_word), "", "en"});
        onto.add_annotation(root, definition,
                            {"the " + family_word + " " + root_word +
                                 " family of related kinds",
                             "", "en"});

        std::vector<Iri> mids;
        std::vector<std::string> mid_words;
        for (int m = 0; m < cfg.mids_per_cluster; ++m) {
            const std::string mid_word = pseudo_word(rng, taken_words);
            const Iri mid = std::string(kNs) + "Q" + std::to_string(class_counter++);
            onto.declare(mid, EntityKind::Class);
            onto.add_annotation(mid, Iri(vocab::rdfs_label),
                                {capitalize(mid_word) + " " + capitalize(root_word), "", "en"});
            onto.add_annotation(mid, definition,
                                {"a " + mid_word + " " + root_word + " is a kind of " +
                                     family_word + " " + root_word,
                                 "", "en"});
            onto.add_axiom(SubClassOf{named(mid), named(root)});
            mids.push_back(mid);
            mid_words.push_back(mid_word);
        }
        for (int m = 0; m < cfg.mids_per_cluster; ++m) {
            onto.add_axiom(SubClassOf{
                named(mids[static_cast<std::size_t>(m)]),
                some(has_quality,
                     named(mids[static_cast<std::size_t>((m + 1) % cfg.mids_per_cluster)]))});
        }

        std::vector<Iri> leaves;
        std::vector<std::string> leaf_labels;
        for (int m = 0; m < cfg.mids_per_cluster; ++m) {
            for (int l = 0; l < cfg.leaves_per_mid; ++l) {
                const std::string leaf_word = pseudo_word(rng, taken_words);
                const Iri leaf = std::string(kNs) + "Q" + std::to_string(class_counter++);
                const std::string label = capitalize(leaf_word) + " " +
                                          capitalize(mid_words[static_cast<std::size_t>(m)]) +
                                          " " + capitalize(root_word);
                onto.declare(leaf, EntityKind::Class);
                onto.add_annotation(leaf, Iri(vocab::rdfs_label), {label, "", "en"});
                onto.add_annotation(leaf, definition,
                                    {"a " + leaf_word + " " +
                                         mid_words[static_cast<std::size_t>(m)] + " " +
                                         root_word + " of the " + family_word + " family",
                                     "", "en"});
                onto.add_axiom(SubClassOf{named(leaf), named(mids[static_cast<std::size_t>(m)])});
                leaves.push_back(leaf);
                leaf_labels.push_back(label);
            }
        }

        // instances for this cluster, spread over its leaves
        const int base = cfg.instances / cfg.clusters;
        const int extra = c < cfg.instances % cfg.clusters ? 1 : 0;
        std::vector<Iri> cluster_instances;
        for (int i = 0; i < base + extra; ++i) {
            const std::size_t pick = static_cast<std::size_t>(i) % leaves.size();
            const Iri leaf = leaves[pick];
            const std::string inst_word = pseudo_word(rng, taken_words);
            const Iri inst = std::string(kNs) + "I" + std::to_string(instance_counter++);
            onto.declare(inst, EntityKind::Instance);
            onto.add_annotation(inst, Iri(vocab::rdfs_label),
                                {capitalize(inst_word) + " " + leaf_labels[pick], "", "en"});
            onto.add_axiom(ClassAssertion{named(leaf), inst});
            onto.add_axiom(DataAssertion{
                inst, has_score,
                Literal{std::to_string(c) + "." + std::to_string(rng.below(100)),
                        Iri(vocab::xsd_double), ""}});
            cluster_instances.push_back(inst);
        }
        for (std::size_t i = 0; i + 1 < cluster_instances.size(); ++i) {
            onto.add_axiom(ObjectAssertion{cluster_instances[i], related_to,
                                           cluster_instances[i + 1]});
        }
    }

    onto.rebuild_labels();
    return onto;
}

}  // namespace ontoembed
