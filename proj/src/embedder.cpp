#include "ontoembed/embedder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ontoembed/rng.hpp"
#include "ontoembed/vec.hpp"

namespace ontoembed {

void TrainConfig::validate() const {
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    if (window <= 0) throw std::invalid_argument("window must be positive");
    if (min_count <= 0) throw std::invalid_argument("min_count must be positive");
    if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
    if (negatives <= 0) throw std::invalid_argument("negatives must be positive");
    if (!(final_lr < initial_lr)) {
        throw std::invalid_argument("final_lr must be below initial_lr");
    }
    if (initial_lr <= 0) throw std::invalid_argument("initial_lr must be positive");
    if (subsample_threshold < 0) throw std::invalid_argument("subsample_threshold must be >= 0");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

Vocab build_vocab(const Document& corpus, int min_count) {
    if (corpus.empty()) throw std::runtime_error("empty corpus");
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;  // total, doc
    std::uint64_t sentences = 0;
    for (const auto& sentence : corpus) {
        if (sentence.tokens.empty()) continue;
        ++sentences;
        std::set<std::string_view> in_sentence;
        for (const auto& token : sentence.tokens) {
            ++counts[token].first;
            in_sentence.insert(token);
        }
        for (const auto token : in_sentence) ++counts[std::string(token)].second;
    }
    if (counts.empty()) throw std::runtime_error("empty corpus");

    std::vector<const std::pair<const std::string, std::pair<std::uint64_t, std::uint64_t>>*> order;
    for (const auto& entry : counts) {
        if (entry.second.first >= static_cast<std::uint64_t>(min_count)) {
            order.push_back(&entry);
        }
    }
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->second.first != b->second.first) return a->second.first > b->second.first;
        return a->first < b->first;
    });

    Vocab vocab;
    vocab.sentence_count = sentences;
    vocab.tokens.reserve(order.size());
    for (const auto* entry : order) {
        const int id = static_cast<int>(vocab.tokens.size());
        vocab.index.emplace(entry->first, id);
        vocab.tokens.push_back(entry->first);
        vocab.counts.push_back(entry->second.first);
        vocab.doc_counts.push_back(entry->second.second);
        vocab.total_count += entry->second.first;
    }
    return vocab;
}

namespace {

inline float sigmoidf(float x) {
    if (x > 16.0f) return 1.0f;
    if (x < -16.0f) return 0.0f;
    return 1.0f / (1.0f + std::exp(-x));
}

// Walker alias table over the unigram^(3/4) distribution.
class AliasTable {
  public:
    explicit AliasTable(const std::vector<std::uint64_t>& counts) {
        const std::size_t n = counts.size();
        prob_.resize(n);
        alias_.resize(n);
        std::vector<double> weights(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = std::pow(static_cast<double>(counts[i]), 0.75);
            total += weights[i];
        }
        std::vector<std::size_t> small, large;
        std::vector<double> scaled(n);
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = weights[i] * static_cast<double>(n) / total;
            (scaled[i] < 1.0 ? small : large).push_back(i);
        }
        while (!small.empty() && !large.empty()) {
            const std::size_t s = small.back();
            small.pop_back();
            const std::size_t l = large.back();
            large.pop_back();
            prob_[s] = scaled[s];
            alias_[s] = static_cast<int>(l);
            scaled[l] = scaled[l] + scaled[s] - 1.0;
            (scaled[l] < 1.0 ? small : large).push_back(l);
        }
        for (std::size_t s : small) {
            prob_[s] = 1.0;
            alias_[s] = static_cast<int>(s);
        }
        for (std::size_t l : large) {
            prob_[l] = 1.0;
            alias_[l] = static_cast<int>(l);
        }
    }

    int sample(Rng& rng) const {
        const std::size_t slot = static_cast<std::size_t>(rng.below(prob_.size()));
        return rng.real() < prob_[slot] ? static_cast<int>(slot) : alias_[slot];
    }

  private:
    std::vector<double> prob_;
    std::vector<int> alias_;
};

bool is_word_token(const std::string& token) {
    return token.rfind("kernel_", 0) != 0 && token.rfind("_:", 0) != 0 &&
           !looks_like_iri(token);
}

}  // namespace

double sgns_step(float* center, std::span<float* const> outputs,
                 std::span<const int> labels, float lr, int dim, float* work) {
    std::fill(work, work + dim, 0.0f);
    double loss = 0.0;
    for (std::size_t j = 0; j < outputs.size(); ++j) {
        float* out = outputs[j];
        const float f = vec::dot(center, out, static_cast<std::size_t>(dim));
        const float sig = sigmoidf(f);
        const int label = labels[j];
        const double p = label ? static_cast<double>(sig) : 1.0 - static_cast<double>(sig);
        loss -= std::log(std::max(p, 1e-10));
        const float g = (static_cast<float>(label) - sig) * lr;
        vec::axpy(g, out, work, static_cast<std::size_t>(dim));
        vec::axpy(g, center, out, static_cast<std::size_t>(dim));
    }
    vec::axpy(1.0f, work, center, static_cast<std::size_t>(dim));
    return loss;
}

EmbeddingModel train(const Document& corpus, const TrainConfig& cfg,
                     const PretrainedVectors* pretrained) {
    cfg.validate();

    EmbeddingModel model;
    model.config = cfg;
    model.dim = cfg.dim;
    model.vocab = build_vocab(corpus, cfg.min_count);
    const std::size_t vsize = model.vocab.size();
    const std::size_t dim = static_cast<std::size_t>(cfg.dim);

    model.input.resize(vsize * dim);
    model.output.assign(vsize * dim, 0.0f);
    Rng init_rng = Rng::stream(cfg.seed, 0x1a17);
    const float span = 0.5f / static_cast<float>(cfg.dim);
    for (auto& value : model.input) value = init_rng.real_in(-span, span);

    if (pretrained) {
        for (std::size_t i = 0; i < vsize; ++i) {
            const auto& token = model.vocab.tokens[i];
            if (!is_word_token(token)) continue;  // IRI/kernel tokens stay random
            const auto it = pretrained->find(token);
            if (it == pretrained->end()) continue;
            if (it->second.size() != dim) {
                throw std::runtime_error("pre-trained vector dimension mismatch for " + token);
            }
            std::copy(it->second.begin(), it->second.end(),
                      model.input.begin() + static_cast<std::ptrdiff_t>(i * dim));
        }
    }

    // token-id sentences, out-of-vocabulary tokens dropped
    std::vector<std::vector<int>> sentences;
    sentences.reserve(corpus.size());
    std::uint64_t tokens_per_epoch = 0;
    for (const auto& sentence : corpus) {
        std::vector<int> ids;
        ids.reserve(sentence.tokens.size());
        for (const auto& token : sentence.tokens) {
            const int id = model.vocab.find(token);
            if (id >= 0) ids.push_back(id);
        }
        if (!ids.empty()) {
            tokens_per_epoch += ids.size();
            sentences.push_back(std::move(ids));
        }
    }
    if (sentences.empty() || cfg.epochs == 0) return model;

    const AliasTable negatives_table(model.vocab.counts);
    const double total_tokens =
        static_cast<double>(tokens_per_epoch) * static_cast<double>(cfg.epochs);
    std::atomic<std::uint64_t> processed{0};

    // keep-probability for frequent-token subsampling
    std::vector<float> keep_prob;
    if (cfg.subsample_threshold > 0) {
        keep_prob.resize(vsize);
        for (std::size_t i = 0; i < vsize; ++i) {
            const double freq = static_cast<double>(model.vocab.counts[i]) /
                                static_cast<double>(model.vocab.total_count);
            const double ratio = cfg.subsample_threshold / freq;
            keep_prob[i] = static_cast<float>(std::min(1.0, std::sqrt(ratio) + ratio));
        }
    }

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::vector<double> worker_loss(static_cast<std::size_t>(cfg.workers), 0.0);
        std::vector<std::uint64_t> worker_pairs(static_cast<std::size_t>(cfg.workers), 0);

        auto run_worker = [&](int worker) {
            Rng rng = Rng::stream(cfg.seed,
                                  0x9000 + static_cast<std::uint64_t>(epoch) * 64 +
                                      static_cast<std::uint64_t>(worker));
            std::vector<float> work(dim);
            std::vector<int> reduced;
            std::vector<float*> outputs;
            std::vector<int> labels;
            double loss = 0.0;
            std::uint64_t pairs = 0;

            for (std::size_t s = worker; s < sentences.size();
                 s += static_cast<std::size_t>(cfg.workers)) {
                const auto& sentence = sentences[s];
                processed.fetch_add(sentence.size(), std::memory_order_relaxed);
                const double done = static_cast<double>(processed.load(std::memory_order_relaxed));
                float lr = cfg.initial_lr -
                           (cfg.initial_lr - cfg.final_lr) *
                               static_cast<float>(done / total_tokens);
                lr = std::max(lr, cfg.final_lr);

                reduced.clear();
                if (keep_prob.empty()) {
                    reduced = sentence;
                } else {
                    for (int id : sentence) {
                        if (keep_prob[static_cast<std::size_t>(id)] >= 1.0f ||
                            rng.real() < keep_prob[static_cast<std::size_t>(id)]) {
                            reduced.push_back(id);
                        }
                    }
                }

                const int len = static_cast<int>(reduced.size());
                for (int center_pos = 0; center_pos < len; ++center_pos) {
                    const int center = reduced[static_cast<std::size_t>(center_pos)];
                    const int lo = std::max(0, center_pos - cfg.window);
                    const int hi = std::min(len - 1, center_pos + cfg.window);
                    for (int ctx_pos = lo; ctx_pos <= hi; ++ctx_pos) {
                        if (ctx_pos == center_pos) continue;
                        const int ctx = reduced[static_cast<std::size_t>(ctx_pos)];
                        outputs.clear();
                        labels.clear();
                        outputs.push_back(model.out_row(ctx));
                        labels.push_back(1);
                        for (int n = 0; n < cfg.negatives; ++n) {
                            int neg = -1;
                            for (int attempt = 0; attempt < 10; ++attempt) {
                                const int candidate = negatives_table.sample(rng);
                                // never corrupt with the pair itself
                                if (candidate != ctx && candidate != center) {
                                    neg = candidate;
                                    break;
                                }
                            }
                            if (neg < 0) continue;
                            outputs.push_back(model.out_row(neg));
                            labels.push_back(0);
                        }
                        loss += sgns_step(model.in_row(center), outputs, labels, lr,
                                          cfg.dim, work.data());
                        ++pairs;
                    }
                }
            }
            worker_loss[static_cast<std::size_t>(worker)] = loss;
            worker_pairs[static_cast<std::size_t>(worker)] = pairs;
        };

        if (cfg.workers == 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(static_cast<std::size_t>(cfg.workers));
            for (int w = 0; w < cfg.workers; ++w) threads.emplace_back(run_worker, w);
            for (auto& t : threads) t.join();
        }

        double loss = 0.0;
        std::uint64_t pairs = 0;
        for (int w = 0; w < cfg.workers; ++w) {
            loss += worker_loss[static_cast<std::size_t>(w)];
            pairs += worker_pairs[static_cast<std::size_t>(w)];
        }
        const double mean = pairs > 0 ? loss / static_cast<double>(pairs) : 0.0;
        if (!std::isfinite(mean)) {
            throw std::runtime_error("non-finite training loss at epoch " +
                                     std::to_string(epoch + 1));
        }
        model.epoch_losses.push_back(mean);

        if (cfg.early_stop && model.epoch_losses.size() >= 2) {
            const double prev = model.epoch_losses[model.epoch_losses.size() - 2];
            if (prev > 0 && std::abs(prev - mean) / prev < 1e-3) break;
        }
    }
    return model;
}

FeatureMode parse_feature_mode(const std::string& name) {
    if (name == "iri") return FeatureMode::Iri;
    if (name == "word") return FeatureMode::Word;
    if (name == "concat") return FeatureMode::Concat;
    throw std::invalid_argument("unknown feature mode: " + name);
}

std::string feature_mode_name(FeatureMode mode) {
    switch (mode) {
        case FeatureMode::Iri: return "iri";
        case FeatureMode::Word: return "word";
        case FeatureMode::Concat: return "concat";
    }
    return "iri";
}

std::size_t entity_vector_dim(const EmbeddingModel& model, FeatureMode mode) {
    const auto dim = static_cast<std::size_t>(model.dim);
    return mode == FeatureMode::Concat ? 2 * dim : dim;
}

namespace {

std::vector<float> word_vector(const EmbeddingModel& model, const Ontology& onto,
                               const Iri& entity, bool tfidf) {
    const auto dim = static_cast<std::size_t>(model.dim);
    std::vector<float> acc(dim, 0.0f);
    double weight_sum = 0.0;
    for (const auto& token : lexical_tokens(onto, entity)) {
        const int id = model.vocab.find(token);
        if (id < 0) continue;  // out-of-vocabulary tokens are skipped
        double w = 1.0;
        if (tfidf) {
            const double df = static_cast<double>(model.vocab.doc_counts[static_cast<std::size_t>(id)]);
            w = std::log((1.0 + static_cast<double>(model.vocab.sentence_count)) / (1.0 + df)) + 1.0;
        }
        vec::axpy(static_cast<float>(w), model.in_row(id), acc.data(), dim);
        weight_sum += w;
    }
    if (weight_sum == 0.0) return acc;  // zero vector; caller warns
    vec::scale(static_cast<float>(1.0 / weight_sum), acc.data(), dim);
    return acc;
}

}  // namespace

std::vector<float> entity_vector(const EmbeddingModel& model, const Ontology& onto,
                                 const Iri& entity, FeatureMode mode, bool tfidf) {
    const auto dim = static_cast<std::size_t>(model.dim);
    if (mode == FeatureMode::Iri || mode == FeatureMode::Concat) {
        const int id = model.vocab.find(entity);
        if (id < 0) throw std::runtime_error("IRI token not in vocabulary: " + entity);
        std::vector<float> iri_vec(model.in_row(id), model.in_row(id) + dim);
        if (mode == FeatureMode::Iri) return iri_vec;
        auto word = word_vector(model, onto, entity, tfidf);
        iri_vec.insert(iri_vec.end(), word.begin(), word.end());
        return iri_vec;
    }
    return word_vector(model, onto, entity, tfidf);
}

void save_vectors(const std::string& path, const std::vector<std::string>& tokens,
                  const std::vector<float>& matrix, int dim) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << tokens.size() << ' ' << dim << '\n';
    char buffer[32];
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        out << tokens[i];
        const float* row = matrix.data() + i * static_cast<std::size_t>(dim);
        for (int d = 0; d < dim; ++d) {
            std::snprintf(buffer, sizeof(buffer), " %.6f", static_cast<double>(row[d]));
            out << buffer;
        }
        out << '\n';
    }
}

PretrainedVectors load_pretrained(const std::string& path, int* dim_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty vector file " + path);
    std::istringstream hs(header);
    std::size_t count = 0;
    int dim = 0;
    if (!(hs >> count >> dim) || dim <= 0) {
        throw std::runtime_error("bad vector file header in " + path);
    }
    PretrainedVectors vectors;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        std::vector<float> values;
        values.reserve(static_cast<std::size_t>(dim));
        float v = 0.0f;
        while (ls >> v) values.push_back(v);
        if (values.size() != static_cast<std::size_t>(dim)) {
            throw std::runtime_error("bad vector row for token " + token + " in " + path);
        }
        vectors[token] = std::move(values);
    }
    if (vectors.size() != count) {
        throw std::runtime_error("vector count mismatch in " + path);
    }
    if (dim_out) *dim_out = dim;
    return vectors;
}

void save_model(const EmbeddingModel& model, const std::string& input_path,
                const std::string& output_path) {
    save_vectors(input_path, model.vocab.tokens, model.input, model.dim);
    save_vectors(output_path, model.vocab.tokens, model.output, model.dim);
}

EmbeddingModel load_model(const std::string& input_path, const std::string& output_path,
                          const TrainConfig& cfg) {
    int dim = 0;
    auto input = load_pretrained(input_path, &dim);
    auto output = load_pretrained(output_path);
    EmbeddingModel model;
    model.config = cfg;
    model.dim = dim;
    // rebuild a stable vocabulary order (counts are not persisted)
    for (const auto& [token, values] : input) {
        const int id = static_cast<int>(model.vocab.tokens.size());
        model.vocab.index.emplace(token, id);
        model.vocab.tokens.push_back(token);
        model.vocab.counts.push_back(1);
        model.vocab.doc_counts.push_back(1);
        model.input.insert(model.input.end(), values.begin(), values.end());
        const auto it = output.find(token);
        if (it == output.end()) {
            throw std::runtime_error("token missing from output matrix: " + token);
        }
        model.output.insert(model.output.end(), it->second.begin(), it->second.end());
    }
    model.vocab.total_count = model.vocab.size();
    model.vocab.sentence_count = 1;
    return model;
}

}  // namespace ontoembed
