#include "mcolour/maxflow.hpp"

#include <cassert>
#include <deque>
#include <limits>

namespace mcolour {

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return static_cast<int>(adjacency_.size()) - 1;
}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  assert(capacity >= 0);
  assert(from >= 0 && from < node_count() && to >= 0 && to < node_count());
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  capacity_.push_back(capacity);
  return id / 2;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  std::vector<int> parent_arc(node_count());
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[source] = -2;
    std::deque<int> queue{source};
    while (!queue.empty() && parent_arc[sink] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int half : adjacency_[u]) {
        const HalfArc& arc = arcs_[half];
        if (arc.residual > 0 && parent_arc[arc.to] == -1) {
          parent_arc[arc.to] = half;
          queue.push_back(arc.to);
        }
      }
    }
    if (parent_arc[sink] == -1) break;

    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = sink; v != source;) {
      const int half = parent_arc[v];
      push = std::min(push, arcs_[half].residual);
      v = arcs_[half ^ 1].to;
    }
    for (int v = sink; v != source;) {
      const int half = parent_arc[v];
      arcs_[half].residual -= push;
      arcs_[half ^ 1].residual += push;
      v = arcs_[half ^ 1].to;
    }
    total += push;
  }
  return total;
}

std::int64_t FlowNetwork::flow_on(int arc) const {
  return capacity_[arc] - arcs_[2 * arc].residual;
}

}  // namespace mcolour
