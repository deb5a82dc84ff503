#include "ontoembed/walker.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ontoembed {

void WalkConfig::validate() const {
    if (depth < 2) throw std::invalid_argument("walk depth must be >= 2");
    if (walks_per_entity < 1) throw std::invalid_argument("walks_per_entity must be >= 1");
    if (max_kernel_size < 0) throw std::invalid_argument("max_kernel_size must be >= 0");
}

namespace {

// Token ids along a walk; positions alternate entity, relation, entity, ...
std::vector<int> walk_ids(const WalkGraph& g, int start, int depth, Rng& rng) {
    std::vector<int> ids{start};
    int current = start;
    int moves = depth;
    while (moves > 0) {
        const auto& out = g.adjacency[static_cast<std::size_t>(current)];
        if (out.empty()) break;
        const auto& [rel, target] =
            out[static_cast<std::size_t>(rng.below(out.size()))];
        ids.push_back(rel);
        if (--moves == 0) break;
        ids.push_back(target);
        --moves;
        current = target;
    }
    return ids;
}

Walk to_walk(const WalkGraph& g, const std::vector<int>& ids) {
    Walk w;
    w.tokens.reserve(ids.size());
    for (int id : ids) w.tokens.push_back(g.tokens[static_cast<std::size_t>(id)]);
    return w;
}

int require_vertex(const WalkGraph& g, const std::string& start) {
    const int id = g.find(start);
    if (id < 0) throw std::runtime_error("unknown start vertex: " + start);
    return id;
}

}  // namespace

Walk random_walk(const WalkGraph& g, const std::string& start, const WalkConfig& cfg,
                 Rng& rng) {
    cfg.validate();
    return to_walk(g, walk_ids(g, require_vertex(g, start), cfg.depth, rng));
}

WlLabeling::WlLabeling(const WalkGraph& g, int max_size) : max_size_(max_size) {
    const std::size_t n = g.vertex_count();
    vertex_labels_.assign(static_cast<std::size_t>(max_size) + 1,
                          std::vector<std::uint64_t>(n, 0));

    std::vector<std::uint64_t>& base = vertex_labels_[0];
    for (std::size_t v = 0; v < n; ++v) {
        base[v] = digest64(g.tokens[v].data(), g.tokens[v].size());
    }

    // relation-instance labels, parallel to the adjacency entries
    std::vector<std::vector<std::uint64_t>> rel_prev(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& out = g.adjacency[v];
        rel_prev[v].resize(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const auto& token = g.tokens[static_cast<std::size_t>(out[i].first)];
            rel_prev[v][i] = digest64(token.data(), token.size());
        }
    }

    std::vector<std::uint64_t> sorted;
    for (int k = 1; k <= max_size; ++k) {
        const auto& prev = vertex_labels_[static_cast<std::size_t>(k - 1)];
        auto& cur = vertex_labels_[static_cast<std::size_t>(k)];
        std::vector<std::vector<std::uint64_t>> rel_cur(n);
        for (std::size_t v = 0; v < n; ++v) {
            const auto& out = g.adjacency[v];
            sorted.assign(rel_prev[v].begin(), rel_prev[v].end());
            std::sort(sorted.begin(), sorted.end());
            std::uint64_t h = prev[v];
            for (const std::uint64_t neighbor : sorted) h = digest64_mix(h, neighbor);
            cur[v] = h;
            rel_cur[v].resize(out.size());
            for (std::size_t i = 0; i < out.size(); ++i) {
                rel_cur[v][i] = digest64_mix(
                    rel_prev[v][i], prev[static_cast<std::size_t>(out[i].second)]);
            }
        }
        rel_prev = std::move(rel_cur);
    }
}

std::string WlLabeling::token(const WalkGraph& g, int vertex, int size) const {
    if (size == 0) return g.tokens[static_cast<std::size_t>(vertex)];
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(label(vertex, size)));
    return "kernel_" + std::to_string(size) + "_" + hex;
}

WlLabeling wl_relabel(const WalkGraph& g, int max_size) {
    return WlLabeling(g, max_size);
}

std::vector<Walk> kernel_walks(const WalkGraph& g, const WlLabeling& labeling,
                               const std::string& start, const WalkConfig& cfg, Rng& rng) {
    cfg.validate();
    const int start_id = require_vertex(g, start);
    std::vector<Walk> out;
    for (int w = 0; w < cfg.walks_per_entity; ++w) {
        const auto ids = walk_ids(g, start_id, cfg.depth, rng);
        for (int k = 0; k <= cfg.max_kernel_size; ++k) {
            Walk walk = to_walk(g, ids);
            // replace non-start subject/object positions (even index >= 2)
            for (std::size_t p = 2; p < ids.size(); p += 2) {
                walk.tokens[p] = labeling.token(g, ids[p], k);
            }
            out.push_back(std::move(walk));
        }
    }
    return out;
}

std::vector<Walk> generate_walks(const WalkGraph& g, const std::vector<Iri>& starts,
                                 WalkerKind kind, const WalkConfig& cfg) {
    cfg.validate();
    std::vector<Walk> out;
    WlLabeling labeling =
        kind == WalkerKind::Wl ? wl_relabel(g, cfg.max_kernel_size) : WlLabeling(g, 0);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (g.find(starts[i]) < 0) continue;  // entity absent from this graph
        Rng rng = Rng::stream(cfg.seed, i);
        if (kind == WalkerKind::Wl) {
            auto walks = kernel_walks(g, labeling, starts[i], cfg, rng);
            for (auto& w : walks) out.push_back(std::move(w));
        } else {
            for (int w = 0; w < cfg.walks_per_entity; ++w) {
                out.push_back(random_walk(g, starts[i], cfg, rng));
            }
        }
    }
    return out;
}

}  // namespace ontoembed
