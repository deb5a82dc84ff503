#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ontoembed/projection.hpp"
#include "ontoembed/rng.hpp"

namespace ontoembed {

enum class WalkerKind { Random, Wl };

struct WalkConfig {
    int depth = 4;             // steps in the single-relation graph (tokens - 1)
    int walks_per_entity = 10;
    int max_kernel_size = 4;   // WL sub-graph sizes 0..max are all emitted
    std::uint64_t seed = 0;

    void validate() const;
};

struct Walk {
    std::vector<std::string> tokens;  // first token is the start entity
};

// One random walk from `start`; each step picks uniformly among the current
// vertex's outgoing (relation, target) pairs and the walk truncates at sinks.
// Throws if `start` is not a vertex.
Walk random_walk(const WalkGraph& g, const std::string& start, const WalkConfig& cfg,
                 Rng& rng);

// Iterative WL refinement over the single-relation graph. Level-0 labels are
// the vertex tokens themselves; level-k labels digest the level-(k-1) label
// together with the sorted multiset of out-neighbor labels. Byte-stable
// across runs and platforms.
class WlLabeling {
  public:
    WlLabeling(const WalkGraph& g, int max_size);

    int max_size() const { return max_size_; }
    std::uint64_t label(int vertex, int size) const {
        return vertex_labels_[static_cast<std::size_t>(size)]
                             [static_cast<std::size_t>(vertex)];
    }
    // "kernel_<k>_<hex>" for k >= 1; the vertex's own token at size 0.
    std::string token(const WalkGraph& g, int vertex, int size) const;

  private:
    int max_size_;
    std::vector<std::vector<std::uint64_t>> vertex_labels_;  // [size][vertex]
};

WlLabeling wl_relabel(const WalkGraph& g, int max_size);

// Base random walks plus one variant per WL size in [0, max_kernel_size]:
// non-start subject/object positions are replaced by their kernel token.
// The size-0 variant is token-identical to the base walk.
std::vector<Walk> kernel_walks(const WalkGraph& g, const WlLabeling& labeling,
                               const std::string& start, const WalkConfig& cfg, Rng& rng);

// Walks for every start entity present in the graph, in start order; each
// entity draws from an independent rng stream so the corpus is identical
// whether entities are processed serially or in parallel.
std::vector<Walk> generate_walks(const WalkGraph& g, const std::vector<Iri>& starts,
                                 WalkerKind kind, const WalkConfig& cfg);

}  // namespace ontoembed
