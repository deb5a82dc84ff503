#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontoembed/corpus.hpp"
#include "ontoembed/ontology.hpp"

namespace ontoembed {

struct TrainConfig {
    int dim = 100;
    int window = 5;
    int min_count = 1;
    int epochs = 10;
    int negatives = 5;
    float initial_lr = 0.025f;
    float final_lr = 0.0001f;
    double subsample_threshold = 0.0;  // 0 disables frequent-token subsampling
    std::uint64_t seed = 0;
    int workers = 1;         // 1 = deterministic; >1 = lock-free shared updates
    bool early_stop = false; // optional stop when the epoch loss plateaus

    void validate() const;
};

struct Vocab {
    std::vector<std::string> tokens;        // index order: count desc, then lexicographic
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> doc_counts;  // sentences containing the token
    std::map<std::string, int> index;
    std::uint64_t total_count = 0;
    std::uint64_t sentence_count = 0;

    int find(const std::string& token) const {
        const auto it = index.find(token);
        return it == index.end() ? -1 : it->second;
    }
    std::size_t size() const { return tokens.size(); }
};

Vocab build_vocab(const Document& corpus, int min_count);

struct EmbeddingModel {
    Vocab vocab;
    int dim = 0;
    std::vector<float> input;   // |V| x dim, center vectors
    std::vector<float> output;  // |V| x dim, context vectors
    TrainConfig config;
    std::vector<double> epoch_losses;

    float* in_row(int i) { return input.data() + static_cast<std::size_t>(i) * dim; }
    const float* in_row(int i) const {
        return input.data() + static_cast<std::size_t>(i) * dim;
    }
    float* out_row(int i) { return output.data() + static_cast<std::size_t>(i) * dim; }
    const float* out_row(int i) const {
        return output.data() + static_cast<std::size_t>(i) * dim;
    }
};

using PretrainedVectors = std::map<std::string, std::vector<float>>;

// One SGNS update for a center vector against one positive and k negative
// output vectors (labels 1/0). All gradients are taken at the pre-update
// values; with lr = 1 the parameter deltas equal the negated analytic
// gradients exactly. Returns the sample loss. `work` holds dim scratch floats.
double sgns_step(float* center, std::span<float* const> outputs,
                 std::span<const int> labels, float lr, int dim, float* work);

// Skip-gram with negative sampling over the merged corpus. Pre-trained
// vectors initialize word tokens only (IRI and kernel tokens stay random).
EmbeddingModel train(const Document& corpus, const TrainConfig& cfg,
                     const PretrainedVectors* pretrained = nullptr);

enum class FeatureMode { Iri, Word, Concat };

FeatureMode parse_feature_mode(const std::string& name);
std::string feature_mode_name(FeatureMode mode);

// Entity vector: the IRI token's input vector, the (optionally IDF-weighted)
// mean of the label-token vectors, or their concatenation.
std::vector<float> entity_vector(const EmbeddingModel& model, const Ontology& onto,
                                 const Iri& entity, FeatureMode mode,
                                 bool tfidf = false);

std::size_t entity_vector_dim(const EmbeddingModel& model, FeatureMode mode);

// Plain-text vector format: "<count> <dim>" header, then one token and dim
// floats per line.
void save_vectors(const std::string& path, const std::vector<std::string>& tokens,
                  const std::vector<float>& matrix, int dim);
PretrainedVectors load_pretrained(const std::string& path, int* dim_out = nullptr);

void save_model(const EmbeddingModel& model, const std::string& input_path,
                const std::string& output_path);
EmbeddingModel load_model(const std::string& input_path, const std::string& output_path,
                          const TrainConfig& cfg);

}  // namespace ontoembed
