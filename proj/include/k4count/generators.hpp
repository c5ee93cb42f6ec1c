#pragma once

#include "k4count/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace k4count {

// Deterministic RNG used by all generators: mt19937_64 raw draws plus
// rejection sampling, so the same seed yields the same graph on every
// platform (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("bound must be positive");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        while (true) {
            std::uint64_t r = eng_();
            if (r < limit) return r % bound;
        }
    }
    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
};

Graph wheel(int n);
Graph complete(int n);
Graph complete_bipartite(int p, int q);
Graph cycle_graph(int n);
Graph prism();

// Chain of `cells` diamond cells: junctions 0..cells, cell i adds internal
// vertices cells+1+2i and cells+2+2i adjacent to junctions i and i+1.
struct GadgetChain {
    int cells = 0;
    Graph graph;
    std::pair<int, int> endpoints;   // junctions 0 and cells
    std::vector<int> junctions;      // 0..cells
};

GadgetChain gadget_chain(int cells);

// Random 2-connected graph with exactly n_target vertices and ears_target
// ears: a cycle plus ears_target - 1 random open ears.
Graph random_2connected(int n_target, int ears_target, std::uint64_t seed);

// Random 3-connected graph on n vertices: grown from K4 by vertex splits and
// edge additions, re-verified 3-connected after every step.
Graph random_3connected(int n, std::uint64_t seed);

}  // namespace k4count
