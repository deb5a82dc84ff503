#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ontoembed/corpus.hpp"
#include "ontoembed/embedder.hpp"
#include "ontoembed/predictor.hpp"
#include "ontoembed/projection.hpp"
#include "ontoembed/reasoner.hpp"
#include "ontoembed/walker.hpp"

namespace ontoembed {

struct RunConfig {
    std::string input;
    std::string output_dir = "out";

    std::string reasoning = "off";     // on | off
    std::string projection = "rules";  // mapping | rules | rules+r
    std::string walker = "wl";         // random | wl
    int depth = 4;
    int walks_per_entity = 10;
    int wl_size = 4;
    std::string documents = "sl";      // s | sl | slrc | sltc

    int dim = 100;
    int window = 5;
    int min_count = 1;
    int epochs = 10;
    int negatives = 5;
    double initial_lr = 0.025;
    double final_lr = 0.0001;
    double subsample = 0.0;
    int workers = 1;
    bool early_stop = false;
    std::string pretrained;  // optional vector file path

    std::string task = "membership";   // membership | subsumption
    std::string features = "concat";   // iri | word | concat
    std::string classifier = "mlp";    // lr | mlp
    bool tfidf = false;
    double clf_lr = 0.05;
    int clf_epochs = 200;
    int clf_batch = 32;
    int clf_hidden = 0;

    std::uint64_t seed = 1;
    std::uint64_t split_seed = 1;

    void validate() const;
    Strategy strategy() const;
    WalkerKind walker_kind() const;
    DocumentSetting document_setting() const;
    Task task_kind() const;
    FeatureMode feature_mode() const;
    ClassifierKind classifier_kind() const;
    TrainConfig train_config() const;
    WalkConfig walk_config() const;
    ClassifierConfig classifier_config() const;
};

// Flat key=value config file; unknown keys are rejected.
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path);
void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);
std::string config_to_string(const RunConfig& cfg);

struct DistanceRow {
    std::string mode;
    double positive_mean = 0.0;
    double negative_mean = 0.0;
    double ratio = 0.0;  // negative / positive
};

struct DistanceReport {
    std::vector<DistanceRow> rows;
};

// Mean Euclidean distance between head and tail embeddings over the training
// positives and their corrupted negatives, per feature mode.
DistanceReport emit_distance_report(const EmbeddingModel& model, const Ontology& onto,
                                    const SplitDataset& ds, bool tfidf);
std::string format_distance_report(const DistanceReport& report);

struct PipelineResult {
    EvalReport report;
    DistanceReport distances;
    std::map<std::string, std::string> stage_status;  // stage -> computed | cached
    std::map<std::string, std::string> artifacts;     // stage -> path
    std::map<std::string, std::size_t> stats;
    std::size_t zero_word_vectors = 0;
};

// Where to stop the chain; Evaluate runs everything.
enum class PipelineStop { Convert, Project, Walk, Corpus, Train, Distances, Evaluate };

// parse/reason -> project -> walk -> corpus -> train -> evaluate, writing one
// artifact per stage under output_dir. A stage whose config fingerprint
// matches the cache manifest is reloaded from its artifact instead of being
// recomputed; any upstream change invalidates it and everything after it.
PipelineResult run_pipeline(const RunConfig& cfg,
                            PipelineStop stop = PipelineStop::Evaluate);

Ontology pipeline_ontology(const RunConfig& cfg);  // convert stage, in memory

}  // namespace ontoembed
