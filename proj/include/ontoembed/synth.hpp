#pragma once

#include <cstdint>

#include "ontoembed/ontology.hpp"

namespace ontoembed {

// Synthetic benchmark ontology: a clustered class hierarchy (root, mid and
// leaf classes per cluster) with labeled instances, per-cluster label
// vocabulary, intra-cluster object-property links, data values and
// definition annotations. Makes the evaluation runnable offline.
struct SynthConfig {
    int clusters = 6;
    int mids_per_cluster = 3;
    int leaves_per_mid = 2;   // classes per cluster = 1 + mids + mids*leaves
    int instances = 300;
    std::uint64_t seed = 7;
};

Ontology generate_synthetic(const SynthConfig& cfg);

}  // namespace ontoembed
