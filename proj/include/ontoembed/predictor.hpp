#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontoembed/embedder.hpp"
#include "ontoembed/reasoner.hpp"

namespace ontoembed {

struct Sample {
    Iri head;
    Iri tail;
    bool positive = true;
};

struct SplitDataset {
    Task task = Task::Membership;
    std::uint64_t seed = 0;
    std::vector<Sample> train_pos;
    std::vector<Sample> valid_pos;
    std::vector<Sample> test_pos;
    std::vector<Sample> train_neg;  // one per training positive
    std::vector<Sample> valid_neg;  // one per validation positive
    std::vector<Iri> candidate_pool;  // named classes except owl:Thing
    std::size_t skipped_negatives = 0;
};

// Declared membership / subsumption axioms with named head and tail,
// shuffled by seed and split 70/10/20, with corrupted negatives for the
// train and validation splits. Throws below 10 positives.
SplitDataset make_dataset(const Ontology& onto, const Closure& closure, Task task,
                          std::uint64_t seed);

// Corrupted tail: uniform over named classes excluding everything entailed
// for the head (and the head itself for subsumption). nullopt when no valid
// corruption exists.
std::optional<Sample> corrupt_tail(const Sample& positive, const Ontology& onto,
                                   const Closure& closure, Task task, Rng& rng);

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

enum class ClassifierKind { LogisticRegression, Mlp };

ClassifierKind parse_classifier_kind(const std::string& name);
std::string classifier_kind_name(ClassifierKind kind);

struct ClassifierConfig {
    float lr = 0.05f;
    int epochs = 200;
    int batch = 32;
    int hidden = 0;  // 0 = 2 * input dim, capped at 200, floor 8
    std::uint64_t seed = 0;
};

// Binary classifier on dense features with a sigmoid output in [0, 1].
// A validation set, when given, selects the best epoch.
class Classifier {
  public:
    Classifier(ClassifierKind kind, ClassifierConfig cfg);

    void fit(const std::vector<float>& X, const std::vector<int>& y, std::size_t dim,
             const std::vector<float>* valid_X = nullptr,
             const std::vector<int>* valid_y = nullptr);

    float score(const float* x) const;
    std::vector<float> score_batch(const std::vector<float>& X, std::size_t n) const;

    ClassifierKind kind() const { return kind_; }

  private:
    double forward(const float* x, std::vector<float>* hidden_out) const;
    double batch_loss(const std::vector<float>& X, const std::vector<int>& y) const;

    ClassifierKind kind_;
    ClassifierConfig cfg_;
    std::size_t dim_ = 0;
    int hidden_ = 0;
    std::vector<float> w1_, b1_;  // MLP hidden layer
    std::vector<float> w2_;       // output weights (LR: the whole model)
    float b2_ = 0.0f;
};

// ---------------------------------------------------------------------------
// Features, ranking, metrics
// ---------------------------------------------------------------------------

struct FeatureExtractor {
    const EmbeddingModel* model = nullptr;
    const Ontology* onto = nullptr;
    FeatureMode mode = FeatureMode::Concat;
    bool tfidf = false;
    mutable std::size_t zero_word_vectors = 0;

    std::size_t pair_dim() const { return 2 * entity_vector_dim(*model, mode); }
    std::vector<float> entity(const Iri& e) const;
    std::vector<float> pair(const Iri& head, const Iri& tail) const;
};

Classifier train_classifier(const SplitDataset& ds, const FeatureExtractor& features,
                            ClassifierKind kind, const ClassifierConfig& cfg);

// Candidates in descending score order; ties broken by IRI.
std::vector<std::pair<Iri, float>> rank_candidates(const Classifier& clf,
                                                   const FeatureExtractor& features,
                                                   const Iri& head,
                                                   const std::vector<Iri>& candidates);

struct EvalReport {
    double mrr = 0.0;
    double hits1 = 0.0;
    double hits5 = 0.0;
    double hits10 = 0.0;
    std::vector<std::size_t> ranks;  // 1-based ground-truth rank per query
    std::size_t candidate_count = 0;
    std::size_t query_count = 0;
};

EvalReport evaluate(const Classifier& clf, const FeatureExtractor& features,
                    const SplitDataset& ds);

EvalReport report_from_ranks(const std::vector<std::size_t>& ranks,
                             std::size_t candidate_count);

// Analytic MRR of a uniformly random ranking over n candidates: H_n / n.
double random_ranking_mrr(std::size_t n);

std::string format_report(const EvalReport& report);          // human-readable
std::string report_key_values(const EvalReport& report);      // metric=value lines

}  // namespace ontoembed
