#include "ontoembed/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ontoembed/vec.hpp"

namespace ontoembed {

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[static_cast<std::size_t>(rng.below(i))]);
    }
}

}  // namespace

std::optional<Sample> corrupt_tail(const Sample& positive, const Ontology& onto,
                                   const Closure& closure, Task task, Rng& rng) {
    std::vector<Iri> valid;
    valid.reserve(onto.classes.size());
    for (const auto& cls : onto.classes) {
        if (cls == positive.tail) continue;
        if (task == Task::Subsumption && cls == positive.head) continue;
        if (is_entailed(closure, positive.head, cls, task)) continue;
        valid.push_back(cls);
    }
    if (valid.empty()) return std::nullopt;
    return Sample{positive.head, valid[static_cast<std::size_t>(rng.below(valid.size()))],
                  false};
}

SplitDataset make_dataset(const Ontology& onto, const Closure& closure, Task task,
                          std::uint64_t seed) {
    SplitDataset ds;
    ds.task = task;
    ds.seed = seed;

    std::vector<Sample> positives;
    for (const auto& axiom : onto.axioms) {
        if (task == Task::Membership) {
            const auto* c = std::get_if<ClassAssertion>(&axiom);
            if (!c) continue;
            const auto* cls = as_named(c->cls);
            if (!cls) continue;
            positives.push_back({c->instance, cls->iri, true});
        } else {
            const auto* s = std::get_if<SubClassOf>(&axiom);
            if (!s) continue;
            const auto* sub = as_named(s->sub);
            const auto* sup = as_named(s->sup);
            if (!sub || !sup || sub->iri == sup->iri) continue;
            positives.push_back({sub->iri, sup->iri, true});
        }
    }
    if (positives.size() < 10) {
        throw std::runtime_error("too few positives for " +
                                 std::string(task == Task::Membership ? "membership"
                                                                      : "subsumption") +
                                 ": " + std::to_string(positives.size()));
    }

    Rng rng = Rng::stream(seed, 0x5717);
    shuffle(positives, rng);
    const std::size_t n = positives.size();
    const std::size_t n_train = n * 70 / 100;
    const std::size_t n_valid = n * 10 / 100;
    ds.train_pos.assign(positives.begin(),
                        positives.begin() + static_cast<std::ptrdiff_t>(n_train));
    ds.valid_pos.assign(positives.begin() + static_cast<std::ptrdiff_t>(n_train),
                        positives.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid));
    ds.test_pos.assign(positives.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid),
                       positives.end());

    auto corrupt_all = [&](const std::vector<Sample>& pos, std::vector<Sample>& neg) {
        for (const auto& sample : pos) {
            auto corrupted = corrupt_tail(sample, onto, closure, task, rng);
            if (corrupted) neg.push_back(*corrupted);
            else ++ds.skipped_negatives;
        }
    };
    corrupt_all(ds.train_pos, ds.train_neg);
    corrupt_all(ds.valid_pos, ds.valid_neg);

    for (const auto& cls : onto.classes) {
        if (cls != vocab::owl_thing) ds.candidate_pool.push_back(cls);
    }
    return ds;
}

ClassifierKind parse_classifier_kind(const std::string& name) {
    if (name == "lr") return ClassifierKind::LogisticRegression;
    if (name == "mlp") return ClassifierKind::Mlp;
    throw std::invalid_argument("unknown classifier: " + name);
}

std::string classifier_kind_name(ClassifierKind kind) {
    return kind == ClassifierKind::LogisticRegression ? "lr" : "mlp";
}

// ---------------------------------------------------------------------------
// Classifier
// ---------------------------------------------------------------------------

namespace {

inline float sigmoidf(float x) {
    if (x > 16.0f) return 1.0f;
    if (x < -16.0f) return 0.0f;
    return 1.0f / (1.0f + std::exp(-x));
}

float gaussian(Rng& rng, float stddev) {
    // Box-Muller
    const double u1 = std::max(rng.real(), 1e-12);
    const double u2 = rng.real();
    return static_cast<float>(std::sqrt(-2.0 * std::log(u1)) *
                              std::cos(2.0 * M_PI * u2) * stddev);
}

}  // namespace

Classifier::Classifier(ClassifierKind kind, ClassifierConfig cfg)
    : kind_(kind), cfg_(cfg) {}

double Classifier::forward(const float* x, std::vector<float>* hidden_out) const {
    if (kind_ == ClassifierKind::LogisticRegression) {
        return vec::dot(w2_.data(), x, dim_) + b2_;
    }
    std::vector<float> local;
    std::vector<float>& h = hidden_out ? *hidden_out : local;
    h.resize(static_cast<std::size_t>(hidden_));
    for (int j = 0; j < hidden_; ++j) {
        const float z = vec::dot(w1_.data() + static_cast<std::size_t>(j) * dim_, x, dim_) +
                        b1_[static_cast<std::size_t>(j)];
        h[static_cast<std::size_t>(j)] = z > 0.0f ? z : 0.0f;
    }
    return vec::dot(w2_.data(), h.data(), static_cast<std::size_t>(hidden_)) + b2_;
}

float Classifier::score(const float* x) const {
    return sigmoidf(static_cast<float>(forward(x, nullptr)));
}

std::vector<float> Classifier::score_batch(const std::vector<float>& X, std::size_t n) const {
    std::vector<float> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = score(X.data() + i * dim_);
    return out;
}

double Classifier::batch_loss(const std::vector<float>& X, const std::vector<int>& y) const {
    double loss = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const float p = score(X.data() + i * dim_);
        const double q = y[i] ? static_cast<double>(p) : 1.0 - static_cast<double>(p);
        loss -= std::log(std::max(q, 1e-10));
    }
    return y.empty() ? 0.0 : loss / static_cast<double>(y.size());
}

void Classifier::fit(const std::vector<float>& X, const std::vector<int>& y,
                     std::size_t dim, const std::vector<float>* valid_X,
                     const std::vector<int>* valid_y) {
    if (y.empty()) throw std::runtime_error("empty training set");
    dim_ = dim;
    const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
    const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
    if (!has_pos || !has_neg) {
        throw std::runtime_error("degenerate single-class training set");
    }

    Rng rng = Rng::stream(cfg_.seed, 0xc1f);
    hidden_ = 0;
    if (kind_ == ClassifierKind::Mlp) {
        hidden_ = cfg_.hidden > 0
                      ? cfg_.hidden
                      : std::min<int>(200, std::max<int>(8, 2 * static_cast<int>(dim)));
        w1_.resize(static_cast<std::size_t>(hidden_) * dim_);
        b1_.assign(static_cast<std::size_t>(hidden_), 0.0f);
        const float he = std::sqrt(2.0f / static_cast<float>(dim_));
        for (auto& w : w1_) w = gaussian(rng, he);
        w2_.resize(static_cast<std::size_t>(hidden_));
        const float out_std = std::sqrt(2.0f / static_cast<float>(hidden_));
        for (auto& w : w2_) w = gaussian(rng, out_std);
    } else {
        w2_.assign(dim_, 0.0f);
    }
    b2_ = 0.0f;

    const std::size_t n = y.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    // momentum buffers
    std::vector<float> v1(w1_.size(), 0.0f), vb1(b1_.size(), 0.0f);
    std::vector<float> v2(w2_.size(), 0.0f);
    float vb2 = 0.0f;
    const float momentum = 0.9f;

    // epoch selection on the validation split
    double best_valid = std::numeric_limits<double>::infinity();
    std::vector<float> best_w1, best_b1, best_w2;
    float best_b2 = 0.0f;

    std::vector<float> h;
    std::vector<float> g1(w1_.size()), gb1(b1_.size()), g2(w2_.size());
    const std::size_t batch = static_cast<std::size_t>(std::max(1, cfg_.batch));

    for (int epoch = 0; epoch < cfg_.epochs; ++epoch) {
        shuffle(order, rng);
        for (std::size_t start = 0; start < n; start += batch) {
            const std::size_t end = std::min(n, start + batch);
            const float inv = 1.0f / static_cast<float>(end - start);
            std::fill(g1.begin(), g1.end(), 0.0f);
            std::fill(gb1.begin(), gb1.end(), 0.0f);
            std::fill(g2.begin(), g2.end(), 0.0f);
            float gb2 = 0.0f;

            for (std::size_t i = start; i < end; ++i) {
                const float* x = X.data() + order[i] * dim_;
                const float target = static_cast<float>(y[order[i]]);
                const float p = sigmoidf(static_cast<float>(forward(x, &h)));
                const float dz = p - target;  // d(BCE)/d(logit)
                if (kind_ == ClassifierKind::LogisticRegression) {
                    vec::axpy(dz, x, g2.data(), dim_);
                    gb2 += dz;
                } else {
                    vec::axpy(dz, h.data(), g2.data(), static_cast<std::size_t>(hidden_));
                    gb2 += dz;
                    for (int j = 0; j < hidden_; ++j) {
                        if (h[static_cast<std::size_t>(j)] <= 0.0f) continue;
                        const float dh = dz * w2_[static_cast<std::size_t>(j)];
                        vec::axpy(dh, x, g1.data() + static_cast<std::size_t>(j) * dim_, dim_);
                        gb1[static_cast<std::size_t>(j)] += dh;
                    }
                }
            }

            auto apply = [&](std::vector<float>& param, std::vector<float>& velocity,
                             const std::vector<float>& grad) {
                for (std::size_t k = 0; k < param.size(); ++k) {
                    velocity[k] = momentum * velocity[k] - cfg_.lr * grad[k] * inv;
                    param[k] += velocity[k];
                }
            };
            if (kind_ == ClassifierKind::Mlp) {
                apply(w1_, v1, g1);
                apply(b1_, vb1, gb1);
            }
            apply(w2_, v2, g2);
            vb2 = momentum * vb2 - cfg_.lr * gb2 * inv;
            b2_ += vb2;
        }

        if (valid_X && valid_y && !valid_y->empty()) {
            const double loss = batch_loss(*valid_X, *valid_y);
            if (loss < best_valid) {
                best_valid = loss;
                best_w1 = w1_;
                best_b1 = b1_;
                best_w2 = w2_;
                best_b2 = b2_;
            }
        }
    }

    if (!best_w2.empty()) {
        w1_ = std::move(best_w1);
        b1_ = std::move(best_b1);
        w2_ = std::move(best_w2);
        b2_ = best_b2;
    }
}

// ---------------------------------------------------------------------------
// Features, ranking, metrics
// ---------------------------------------------------------------------------

std::vector<float> FeatureExtractor::entity(const Iri& e) const {
    auto v = entity_vector(*model, *onto, e, mode, tfidf);
    if (mode != FeatureMode::Iri) {
        const bool all_zero = std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f; });
        if (all_zero) ++zero_word_vectors;
    }
    return v;
}

std::vector<float> FeatureExtractor::pair(const Iri& head, const Iri& tail) const {
    auto v = entity(head);
    const auto t = entity(tail);
    v.insert(v.end(), t.begin(), t.end());
    return v;
}

Classifier train_classifier(const SplitDataset& ds, const FeatureExtractor& features,
                            ClassifierKind kind, const ClassifierConfig& cfg) {
    const std::size_t dim = features.pair_dim();
    std::vector<float> X;
    std::vector<int> y;
    auto push = [&](const std::vector<Sample>& samples, std::vector<float>& matrix,
                    std::vector<int>& labels) {
        for (const auto& s : samples) {
            const auto v = features.pair(s.head, s.tail);
            matrix.insert(matrix.end(), v.begin(), v.end());
            labels.push_back(s.positive ? 1 : 0);
        }
    };
    push(ds.train_pos, X, y);
    push(ds.train_neg, X, y);

    std::vector<float> valid_X;
    std::vector<int> valid_y;
    push(ds.valid_pos, valid_X, valid_y);
    push(ds.valid_neg, valid_X, valid_y);

    Classifier clf(kind, cfg);
    clf.fit(X, y, dim, valid_y.empty() ? nullptr : &valid_X,
            valid_y.empty() ? nullptr : &valid_y);
    return clf;
}

std::vector<std::pair<Iri, float>> rank_candidates(const Classifier& clf,
                                                   const FeatureExtractor& features,
                                                   const Iri& head,
                                                   const std::vector<Iri>& candidates) {
    if (candidates.empty()) throw std::runtime_error("empty candidate set");
    const std::size_t dim = features.pair_dim();
    const auto head_vec = features.entity(head);
    std::vector<float> X;
    X.reserve(candidates.size() * dim);
    for (const auto& candidate : candidates) {
        auto v = head_vec;
        const auto t = features.entity(candidate);
        v.insert(v.end(), t.begin(), t.end());
        X.insert(X.end(), v.begin(), v.end());
    }
    const auto scores = clf.score_batch(X, candidates.size());
    std::vector<std::pair<Iri, float>> ranked;
    ranked.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        ranked.emplace_back(candidates[i], scores[i]);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

EvalReport report_from_ranks(const std::vector<std::size_t>& ranks,
                             std::size_t candidate_count) {
    EvalReport report;
    report.ranks = ranks;
    report.candidate_count = candidate_count;
    report.query_count = ranks.size();
    if (ranks.empty()) return report;
    double mrr = 0.0;
    std::size_t h1 = 0, h5 = 0, h10 = 0;
    for (const std::size_t rank : ranks) {
        mrr += 1.0 / static_cast<double>(rank);
        h1 += rank <= 1;
        h5 += rank <= 5;
        h10 += rank <= 10;
    }
    const double n = static_cast<double>(ranks.size());
    report.mrr = mrr / n;
    report.hits1 = static_cast<double>(h1) / n;
    report.hits5 = static_cast<double>(h5) / n;
    report.hits10 = static_cast<double>(h10) / n;
    return report;
}

EvalReport evaluate(const Classifier& clf, const FeatureExtractor& features,
                    const SplitDataset& ds) {
    if (ds.test_pos.empty()) throw std::runtime_error("empty test split");
    std::vector<std::size_t> ranks;
    ranks.reserve(ds.test_pos.size());
    std::size_t pool = 0;
    for (const auto& sample : ds.test_pos) {
        std::vector<Iri> candidates;
        candidates.reserve(ds.candidate_pool.size());
        for (const auto& c : ds.candidate_pool) {
            if (ds.task == Task::Subsumption && c == sample.head) continue;
            candidates.push_back(c);
        }
        pool = std::max(pool, candidates.size());
        const auto ranked = rank_candidates(clf, features, sample.head, candidates);
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            if (ranked[i].first == sample.tail) {
                ranks.push_back(i + 1);
                break;
            }
        }
    }
    return report_from_ranks(ranks, pool);
}

double random_ranking_mrr(std::size_t n) {
    double h = 0.0;
    for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
    return n == 0 ? 0.0 : h / static_cast<double>(n);
}

std::string format_report(const EvalReport& report) {
    std::ostringstream out;
    out << "queries    " << report.query_count << "\n"
        << "candidates " << report.candidate_count << "\n";
    char line[64];
    std::snprintf(line, sizeof(line), "MRR        %.4f\n", report.mrr);
    out << line;
    std::snprintf(line, sizeof(line), "Hits@1     %.4f\n", report.hits1);
    out << line;
    std::snprintf(line, sizeof(line), "Hits@5     %.4f\n", report.hits5);
    out << line;
    std::snprintf(line, sizeof(line), "Hits@10    %.4f\n", report.hits10);
    out << line;
    return out.str();
}

std::string report_key_values(const EvalReport& report) {
    std::ostringstream out;
    char line[64];
    std::snprintf(line, sizeof(line), "mrr=%.6f\n", report.mrr);
    out << line;
    std::snprintf(line, sizeof(line), "hits1=%.6f\n", report.hits1);
    out << line;
    std::snprintf(line, sizeof(line), "hits5=%.6f\n", report.hits5);
    out << line;
    std::snprintf(line, sizeof(line), "hits10=%.6f\n", report.hits10);
    out << line;
    out << "queries=" << report.query_count << "\n";
    out << "candidates=" << report.candidate_count << "\n";
    return out.str();
}

}  // namespace ontoembed
