#pragma once

#include "k4count/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace k4count {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// Distinct cycles of g, each canonical: rotated to start at its minimum
// vertex id, direction chosen so the second vertex is the smaller of the two
// neighbors of the first.  No closure entry.  `truncated` is set when more
// than `cap` cycles exist; exactly `cap` are kept.
struct CycleList {
    std::vector<std::vector<int>> cycles;
    bool truncated = false;
};

CycleList enumerate_cycles(const Graph& g, std::uint64_t cap = kDefaultCap);

struct CountResult {
    std::uint64_t count = 0;   // saturates at cap
    bool truncated = false;
};

CountResult count_cycles(const Graph& g, std::uint64_t cap = kDefaultCap);

// Calls visit once per distinct cycle (canonical form); stops early when
// visit returns false.  Returns false iff stopped early.
bool for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit);

// Simple s-t paths; count saturates at cap.
CountResult count_st_paths(const Graph& g, int s, int t, std::uint64_t cap = kDefaultCap);

bool for_each_st_path(const Graph& g, int s, int t,
                      const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace k4count
