#pragma once

#include <cstdint>
#include <vector>

namespace mcolour {

// Integral max flow via shortest augmenting paths (BFS), with arcs
// explored in insertion order. Given the same construction sequence the
// resulting flow is identical across runs, which is what the callers
// rely on; the networks here are tiny, so asymptotics do not matter.
class FlowNetwork {
 public:
  int add_node();
  // returns an arc id usable with flow_on(); capacities must be >= 0
  int add_arc(int from, int to, std::int64_t capacity);

  std::int64_t max_flow(int source, int sink);
  std::int64_t flow_on(int arc) const;

  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct HalfArc {
    int to;
    std::int64_t residual;
  };
  // arc 2i is forward, 2i+1 its reverse
  std::vector<HalfArc> arcs_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace mcolour
