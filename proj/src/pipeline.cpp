#include "ontoembed/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ontoembed/ntriples.hpp"
#include "ontoembed/rng.hpp"
#include "ontoembed/vec.hpp"

namespace ontoembed {

namespace fs = std::filesystem;

void RunConfig::validate() const {
    if (input.empty()) throw std::runtime_error("no input file configured");
    strategy();
    walker_kind();
    document_setting();
    task_kind();
    feature_mode();
    classifier_kind();
    train_config().validate();
    walk_config().validate();
}

Strategy RunConfig::strategy() const {
    if (projection == "mapping") return Strategy::Mapping;
    if (projection == "rules") return Strategy::Rules;
    if (projection == "rules+r") return Strategy::RulesInverse;
    throw std::runtime_error("unknown projection strategy: " + projection);
}

WalkerKind RunConfig::walker_kind() const {
    if (walker == "random") return WalkerKind::Random;
    if (walker == "wl") return WalkerKind::Wl;
    throw std::runtime_error("unknown walker: " + walker);
}

DocumentSetting RunConfig::document_setting() const {
    return parse_document_setting(documents);
}

Task RunConfig::task_kind() const {
    if (task == "membership") return Task::Membership;
    if (task == "subsumption") return Task::Subsumption;
    throw std::runtime_error("unknown task: " + task);
}

FeatureMode RunConfig::feature_mode() const { return parse_feature_mode(features); }

ClassifierKind RunConfig::classifier_kind() const {
    return parse_classifier_kind(classifier);
}

TrainConfig RunConfig::train_config() const {
    TrainConfig cfg;
    cfg.dim = dim;
    cfg.window = window;
    cfg.min_count = min_count;
    cfg.epochs = epochs;
    cfg.negatives = negatives;
    cfg.initial_lr = static_cast<float>(initial_lr);
    cfg.final_lr = static_cast<float>(final_lr);
    cfg.subsample_threshold = subsample;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.early_stop = early_stop;
    return cfg;
}

WalkConfig RunConfig::walk_config() const {
    WalkConfig cfg;
    cfg.depth = depth;
    cfg.walks_per_entity = walks_per_entity;
    cfg.max_kernel_size = wl_size;
    cfg.seed = seed;
    return cfg;
}

ClassifierConfig RunConfig::classifier_config() const {
    ClassifierConfig cfg;
    cfg.lr = static_cast<float>(clf_lr);
    cfg.epochs = clf_epochs;
    cfg.batch = clf_batch;
    cfg.hidden = clf_hidden;
    cfg.seed = split_seed;
    return cfg;
}

// ---------------------------------------------------------------------------
// Config file
// ---------------------------------------------------------------------------

namespace {

std::string bool_str(bool v) { return v ? "true" : "false"; }

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw std::runtime_error("bad boolean value: " + v);
}

}  // namespace

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "input") cfg.input = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "reasoning") cfg.reasoning = value;
    else if (key == "projection") cfg.projection = value;
    else if (key == "walker") cfg.walker = value;
    else if (key == "depth") cfg.depth = std::stoi(value);
    else if (key == "walks_per_entity") cfg.walks_per_entity = std::stoi(value);
    else if (key == "wl_size") cfg.wl_size = std::stoi(value);
    else if (key == "documents") cfg.documents = value;
    else if (key == "dim") cfg.dim = std::stoi(value);
    else if (key == "window") cfg.window = std::stoi(value);
    else if (key == "min_count") cfg.min_count = std::stoi(value);
    else if (key == "epochs") cfg.epochs = std::stoi(value);
    else if (key == "negatives") cfg.negatives = std::stoi(value);
    else if (key == "initial_lr") cfg.initial_lr = std::stod(value);
    else if (key == "final_lr") cfg.final_lr = std::stod(value);
    else if (key == "subsample") cfg.subsample = std::stod(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "early_stop") cfg.early_stop = parse_bool(value);
    else if (key == "pretrained") cfg.pretrained = value;
    else if (key == "task") cfg.task = value;
    else if (key == "features") cfg.features = value;
    else if (key == "classifier") cfg.classifier = value;
    else if (key == "tfidf") cfg.tfidf = parse_bool(value);
    else if (key == "clf_lr") cfg.clf_lr = std::stod(value);
    else if (key == "clf_epochs") cfg.clf_epochs = std::stoi(value);
    else if (key == "clf_batch") cfg.clf_batch = std::stoi(value);
    else if (key == "clf_hidden") cfg.clf_hidden = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "split_seed") cfg.split_seed = std::stoull(value);
    else throw std::runtime_error("unknown config key: " + key);
}

std::string config_to_string(const RunConfig& cfg) {
    std::ostringstream out;
    out << "input=" << cfg.input << '\n'
        << "output_dir=" << cfg.output_dir << '\n'
        << "reasoning=" << cfg.reasoning << '\n'
        << "projection=" << cfg.projection << '\n'
        << "walker=" << cfg.walker << '\n'
        << "depth=" << cfg.depth << '\n'
        << "walks_per_entity=" << cfg.walks_per_entity << '\n'
        << "wl_size=" << cfg.wl_size << '\n'
        << "documents=" << cfg.documents << '\n'
        << "dim=" << cfg.dim << '\n'
        << "window=" << cfg.window << '\n'
        << "min_count=" << cfg.min_count << '\n'
        << "epochs=" << cfg.epochs << '\n'
        << "negatives=" << cfg.negatives << '\n'
        << "initial_lr=" << cfg.initial_lr << '\n'
        << "final_lr=" << cfg.final_lr << '\n'
        << "subsample=" << cfg.subsample << '\n'
        << "workers=" << cfg.workers << '\n'
        << "early_stop=" << bool_str(cfg.early_stop) << '\n'
        << "pretrained=" << cfg.pretrained << '\n'
        << "task=" << cfg.task << '\n'
        << "features=" << cfg.features << '\n'
        << "classifier=" << cfg.classifier << '\n'
        << "tfidf=" << bool_str(cfg.tfidf) << '\n'
        << "clf_lr=" << cfg.clf_lr << '\n'
        << "clf_epochs=" << cfg.clf_epochs << '\n'
        << "clf_batch=" << cfg.clf_batch << '\n'
        << "clf_hidden=" << cfg.clf_hidden << '\n'
        << "seed=" << cfg.seed << '\n'
        << "split_seed=" << cfg.split_seed << '\n';
    return out.str();
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    RunConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        }
        apply_config_line(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

void save_config(const RunConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << config_to_string(cfg);
}

// ---------------------------------------------------------------------------
// Stage fingerprints and cache manifest
// ---------------------------------------------------------------------------

namespace {

std::uint64_t hash_str(const std::string& s, std::uint64_t seed = 17) {
    return digest64(s.data(), s.size(), seed);
}

std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        h = digest64(buffer, static_cast<std::size_t>(in.gcount()), h);
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(v));
    return out;
}

struct Manifest {
    std::map<std::string, std::string> entries;
    fs::path path;

    static Manifest load(const fs::path& p) {
        Manifest m;
        m.path = p;
        std::ifstream in(p);
        std::string line;
        while (in && std::getline(in, line)) {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                m.entries[line.substr(0, eq)] = line.substr(eq + 1);
            }
        }
        return m;
    }
    void store() const {
        std::ofstream out(path);
        for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
    }
    bool matches(const std::string& stage, const std::string& fingerprint) const {
        const auto it = entries.find(stage);
        return it != entries.end() && it->second == fingerprint;
    }
};

struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what) {}
};

template <typename F>
auto stage_guard(const std::string& name, F&& f) {
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

void save_vocab_stats(const Vocab& vocab, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << vocab.sentence_count << '\n';
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        out << vocab.tokens[i] << ' ' << vocab.counts[i] << ' ' << vocab.doc_counts[i]
            << '\n';
    }
}

void load_vocab_stats(EmbeddingModel& model, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t sentences = 0;
    in >> sentences;
    model.vocab.sentence_count = sentences;
    std::string token;
    std::uint64_t count = 0, doc_count = 0;
    std::uint64_t total = 0;
    while (in >> token >> count >> doc_count) {
        const int id = model.vocab.find(token);
        if (id < 0) continue;
        model.vocab.counts[static_cast<std::size_t>(id)] = count;
        model.vocab.doc_counts[static_cast<std::size_t>(id)] = doc_count;
        total += count;
    }
    model.vocab.total_count = total;
}

}  // namespace

Ontology pipeline_ontology(const RunConfig& cfg) {
    return stage_guard("convert", [&] {
        auto triples = parse_ntriples_file(cfg.input);
        Ontology onto = reconstruct_axioms(triples);
        for (const auto& warning : onto.warnings) {
            std::cerr << "[convert] warning: " << warning << '\n';
        }
        if (cfg.reasoning == "on") {
            const Closure closure = classify(onto);
            for (const auto& warning : closure.warnings) {
                std::cerr << "[convert] warning: " << warning << '\n';
            }
            onto = materialize(onto, closure);
        } else if (cfg.reasoning != "off") {
            throw std::runtime_error("unknown reasoning setting: " + cfg.reasoning);
        }
        return onto;
    });
}

DistanceReport emit_distance_report(const EmbeddingModel& model, const Ontology& onto,
                                    const SplitDataset& ds, bool tfidf) {
    DistanceReport report;
    for (const FeatureMode mode :
         {FeatureMode::Iri, FeatureMode::Word, FeatureMode::Concat}) {
        FeatureExtractor features{&model, &onto, mode, tfidf};
        auto mean_distance = [&](const std::vector<Sample>& samples) {
            if (samples.empty()) return 0.0;
            double total = 0.0;
            for (const auto& s : samples) {
                const auto head = features.entity(s.head);
                const auto tail = features.entity(s.tail);
                total += std::sqrt(static_cast<double>(
                    vec::l2sq(head.data(), tail.data(), head.size())));
            }
            return total / static_cast<double>(samples.size());
        };
        DistanceRow row;
        row.mode = feature_mode_name(mode);
        row.positive_mean = mean_distance(ds.train_pos);
        row.negative_mean = mean_distance(ds.train_neg);
        row.ratio = row.positive_mean > 0 ? row.negative_mean / row.positive_mean : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

std::string format_distance_report(const DistanceReport& report) {
    std::ostringstream out;
    out << "mode    positive_mean  negative_mean  ratio(neg/pos)\n";
    for (const auto& row : report.rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-7s %-14.6f %-14.6f %.6f\n", row.mode.c_str(),
                      row.positive_mean, row.negative_mean, row.ratio);
        out << line;
    }
    return out.str();
}

PipelineResult run_pipeline(const RunConfig& cfg, PipelineStop stop) {
    cfg.validate();
    PipelineResult result;

    fs::create_directories(cfg.output_dir);
    const fs::path out_dir(cfg.output_dir);
    Manifest manifest = Manifest::load(out_dir / "cache.manifest");
    auto done = [&]() {
        manifest.store();
        return result;
    };

    // --- convert ------------------------------------------------------------
    const std::string convert_fp = stage_guard("convert", [&] {
        return hex64(digest64_mix(hash_file(cfg.input), hash_str(cfg.reasoning, 0xc0)));
    });
    Ontology onto = pipeline_ontology(cfg);
    stage_guard("convert", [&] {
        const auto path = out_dir / "converted.nt";
        if (!manifest.matches("convert", convert_fp) || !fs::exists(path)) {
            write_ntriples_file(path.string(), serialize_mapping(onto));
            manifest.entries["convert"] = convert_fp;
            result.stage_status["convert"] = "computed";
        } else {
            result.stage_status["convert"] = "cached";
        }
        result.artifacts["convert"] = path.string();
        return 0;
    });
    result.stats["axioms"] = onto.axioms.size();
    result.stats["classes"] = onto.classes.size();
    result.stats["instances"] = onto.instances.size();
    result.stats["object_properties"] = onto.object_properties.size();
    result.stats["data_properties"] = onto.data_properties.size();
    result.stats["annotation_properties"] = onto.annotation_properties.size();
    result.stats["residue_triples"] = onto.residue.size();
    if (stop == PipelineStop::Convert) return done();

    // --- project ------------------------------------------------------------
    const std::string project_fp =
        hex64(digest64_mix(hash_str(convert_fp), hash_str(cfg.projection, 0x97)));
    ProjectedGraph graph = stage_guard("project", [&] { return project(onto, cfg.strategy()); });
    stage_guard("project", [&] {
        const auto path = out_dir / "graph.nt";
        if (!manifest.matches("project", project_fp) || !fs::exists(path)) {
            write_ntriples_file(path.string(), graph.to_triples());
            manifest.entries["project"] = project_fp;
            result.stage_status["project"] = "computed";
        } else {
            result.stage_status["project"] = "cached";
        }
        result.artifacts["project"] = path.string();
        return 0;
    });
    result.stats["graph_edges"] = graph.edges.size();
    result.stats["skipped_constructs"] = graph.skipped_constructs;
    if (stop == PipelineStop::Project) return done();

    // --- walk ---------------------------------------------------------------
    const std::string walk_fp = hex64(digest64_mix(
        hash_str(project_fp),
        hash_str(cfg.walker + "/" + std::to_string(cfg.depth) + "/" +
                     std::to_string(cfg.walks_per_entity) + "/" +
                     std::to_string(cfg.wl_size) + "/" + std::to_string(cfg.seed),
                 0x3a1)));
    const auto walks_path = out_dir / "walks.txt";
    std::vector<Walk> walks = stage_guard("walk", [&]() -> std::vector<Walk> {
        if (manifest.matches("walk", walk_fp) && fs::exists(walks_path)) {
            result.stage_status["walk"] = "cached";
            std::vector<Walk> cached;
            for (auto& sentence : load_sentences_file(walks_path.string())) {
                cached.push_back(Walk{std::move(sentence.tokens)});
            }
            return cached;
        }
        const WalkGraph wg = to_walk_graph(graph);
        std::vector<Iri> starts;
        for (const auto& cls : onto.classes) starts.push_back(cls);
        for (const auto& inst : onto.instances) starts.push_back(inst);
        auto generated = generate_walks(wg, starts, cfg.walker_kind(), cfg.walk_config());
        Document doc;
        doc.reserve(generated.size());
        for (const auto& w : generated) doc.push_back(Sentence{w.tokens, Provenance::Walk});
        save_sentences_file(walks_path.string(), doc);
        manifest.entries["walk"] = walk_fp;
        result.stage_status["walk"] = "computed";
        return generated;
    });
    result.artifacts["walk"] = walks_path.string();
    result.stats["walks"] = walks.size();
    if (stop == PipelineStop::Walk) return done();

    // --- corpus -------------------------------------------------------------
    const std::string corpus_fp = hex64(
        digest64_mix(hash_str(walk_fp), hash_str(cfg.documents, 0xd0c)));
    const auto merged_path = out_dir / "corpus_merged.txt";
    Document merged = stage_guard("corpus", [&]() -> Document {
        if (manifest.matches("corpus", corpus_fp) && fs::exists(merged_path)) {
            result.stage_status["corpus"] = "cached";
            return load_sentences_file(merged_path.string());
        }
        Corpus corpus;
        corpus.structure = build_structure(walks, onto);
        const auto setting = cfg.document_setting();
        if (setting != DocumentSetting::S) {
            corpus.lexical = build_lexical(corpus.structure, onto);
        }
        if (setting == DocumentSetting::SLRC || setting == DocumentSetting::SLTC) {
            const auto strategy = setting == DocumentSetting::SLRC
                                      ? CombinedStrategy::Random
                                      : CombinedStrategy::Traversal;
            corpus.combined = build_combined(corpus.structure, onto, strategy,
                                             digest64_mix(cfg.seed, 0xc03b));
        }
        save_sentences_file((out_dir / "corpus_structure.txt").string(), corpus.structure);
        save_sentences_file((out_dir / "corpus_lexical.txt").string(), corpus.lexical);
        save_sentences_file((out_dir / "corpus_combined.txt").string(), corpus.combined);
        Document all = merge(corpus, setting);
        save_sentences_file(merged_path.string(), all);
        manifest.entries["corpus"] = corpus_fp;
        result.stage_status["corpus"] = "computed";
        return all;
    });
    result.artifacts["corpus"] = merged_path.string();
    result.stats["corpus_sentences"] = merged.size();
    if (stop == PipelineStop::Corpus) return done();

    // --- train --------------------------------------------------------------
    std::string pretrained_fp = "none";
    if (!cfg.pretrained.empty()) pretrained_fp = hex64(hash_file(cfg.pretrained));
    const std::string train_fp = hex64(digest64_mix(
        hash_str(corpus_fp),
        hash_str(std::to_string(cfg.dim) + "/" + std::to_string(cfg.window) + "/" +
                     std::to_string(cfg.min_count) + "/" + std::to_string(cfg.epochs) +
                     "/" + std::to_string(cfg.negatives) + "/" +
                     std::to_string(cfg.initial_lr) + "/" + std::to_string(cfg.final_lr) +
                     "/" + std::to_string(cfg.subsample) + "/" +
                     std::to_string(cfg.workers) + "/" + bool_str(cfg.early_stop) + "/" +
                     std::to_string(cfg.seed) + "/" + pretrained_fp,
                 0x7247)));
    const auto vec_in_path = out_dir / "vectors_input.vec";
    const auto vec_out_path = out_dir / "vectors_output.vec";
    const auto vocab_path = out_dir / "vocab_stats.txt";
    EmbeddingModel model = stage_guard("train", [&]() -> EmbeddingModel {
        TrainConfig train_cfg = cfg.train_config();
        if (manifest.matches("train", train_fp) && fs::exists(vec_in_path) &&
            fs::exists(vec_out_path) && fs::exists(vocab_path)) {
            result.stage_status["train"] = "cached";
            EmbeddingModel cached =
                load_model(vec_in_path.string(), vec_out_path.string(), train_cfg);
            load_vocab_stats(cached, vocab_path.string());
            return cached;
        }
        PretrainedVectors pretrained;
        const PretrainedVectors* pretrained_ptr = nullptr;
        if (!cfg.pretrained.empty()) {
            int file_dim = 0;
            pretrained = load_pretrained(cfg.pretrained, &file_dim);
            if (file_dim != cfg.dim) {
                throw std::runtime_error(
                    "pre-trained dimension " + std::to_string(file_dim) +
                    " does not match configured dim " + std::to_string(cfg.dim));
            }
            pretrained_ptr = &pretrained;
        }
        EmbeddingModel trained = train(merged, train_cfg, pretrained_ptr);
        save_model(trained, vec_in_path.string(), vec_out_path.string());
        save_vocab_stats(trained.vocab, vocab_path.string());
        std::ofstream losses((out_dir / "epoch_losses.txt").string());
        for (std::size_t e = 0; e < trained.epoch_losses.size(); ++e) {
            losses << e + 1 << ' ' << trained.epoch_losses[e] << '\n';
        }
        manifest.entries["train"] = train_fp;
        result.stage_status["train"] = "computed";
        return trained;
    });
    result.artifacts["train"] = vec_in_path.string();
    result.stats["vocabulary"] = model.vocab.size();
    if (stop == PipelineStop::Train) return done();

    if (stop == PipelineStop::Distances) {
        stage_guard("distances", [&] {
            const Closure closure = classify(onto);
            const SplitDataset ds =
                make_dataset(onto, closure, cfg.task_kind(), cfg.split_seed);
            result.distances = emit_distance_report(model, onto, ds, cfg.tfidf);
            std::ofstream dist((out_dir / "distances.txt").string());
            dist << format_distance_report(result.distances);
            result.artifacts["distances"] = (out_dir / "distances.txt").string();
            result.stage_status["distances"] = "computed";
            return 0;
        });
        return done();
    }

    // --- evaluate -----------------------------------------------------------
    const std::string eval_fp = hex64(digest64_mix(
        hash_str(train_fp),
        hash_str(cfg.task + "/" + cfg.features + "/" + cfg.classifier + "/" +
                     bool_str(cfg.tfidf) + "/" + std::to_string(cfg.clf_lr) + "/" +
                     std::to_string(cfg.clf_epochs) + "/" + std::to_string(cfg.clf_batch) +
                     "/" + std::to_string(cfg.clf_hidden) + "/" +
                     std::to_string(cfg.split_seed),
                 0xe7a1)));
    const auto report_path = out_dir / "report.kv";
    stage_guard("evaluate", [&] {
        const Closure closure = classify(onto);
        const SplitDataset ds = make_dataset(onto, closure, cfg.task_kind(), cfg.split_seed);
        FeatureExtractor features{&model, &onto, cfg.feature_mode(), cfg.tfidf};

        if (manifest.matches("evaluate", eval_fp) && fs::exists(report_path)) {
            result.stage_status["evaluate"] = "cached";
            std::ifstream in(report_path);
            std::string line;
            while (std::getline(in, line)) {
                const auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = line.substr(0, eq);
                const std::string value = line.substr(eq + 1);
                if (key == "mrr") result.report.mrr = std::stod(value);
                else if (key == "hits1") result.report.hits1 = std::stod(value);
                else if (key == "hits5") result.report.hits5 = std::stod(value);
                else if (key == "hits10") result.report.hits10 = std::stod(value);
                else if (key == "queries") result.report.query_count = std::stoull(value);
                else if (key == "candidates") result.report.candidate_count = std::stoull(value);
            }
            result.distances = emit_distance_report(model, onto, ds, cfg.tfidf);
            return 0;
        }

        if (ds.skipped_negatives > 0) {
            std::cerr << "[evaluate] warning: " << ds.skipped_negatives
                      << " positives had no valid corruption and got no negative\n";
        }
        Classifier clf = train_classifier(ds, features, cfg.classifier_kind(),
                                          cfg.classifier_config());
        result.report = evaluate(clf, features, ds);
        result.zero_word_vectors = features.zero_word_vectors;
        if (features.zero_word_vectors > 0) {
            std::cerr << "[evaluate] warning: " << features.zero_word_vectors
                      << " zero word vectors (no in-vocabulary tokens)\n";
        }

        std::ofstream kv(report_path);
        kv << report_key_values(result.report);
        std::ofstream human((out_dir / "report.txt").string());
        human << format_report(result.report);

        result.distances = emit_distance_report(model, onto, ds, cfg.tfidf);
        std::ofstream dist((out_dir / "distances.txt").string());
        dist << format_distance_report(result.distances);

        manifest.entries["evaluate"] = eval_fp;
        result.stage_status["evaluate"] = "computed";
        return 0;
    });
    result.artifacts["evaluate"] = report_path.string();

    return done();
}

}  // namespace ontoembed
