#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace bicon {

// Dinic's blocking-flow max-flow over a fixed arc set. Flows can be cleared and
// the network re-solved for another terminal pair without rebuilding it.
template <typename Capacity = int>
class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    Capacity capacity;
    Capacity flow;
  };

  explicit FlowNetwork(std::size_t nodes) : out_(nodes), level_(nodes), next_(nodes) {}

  [[nodiscard]] std::size_t node_count() const noexcept { return out_.size(); }

  // Adds u->v with the given capacity and its paired residual arc v->u with
  // reverse_capacity. Returns the id of the forward arc; the pair is id ^ 1.
  std::size_t add_arc(std::size_t u, std::size_t v, Capacity capacity, Capacity reverse_capacity = 0) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({v, capacity, 0});
    arcs_.push_back({u, reverse_capacity, 0});
    out_[u].push_back(id);
    out_[v].push_back(id + 1);
    return id;
  }

  [[nodiscard]] const Arc& arc(std::size_t id) const { return arcs_[id]; }

  void clear_flow() {
    for (Arc& a : arcs_) a.flow = 0;
  }

  // Max flow from source to sink, stopping early once `limit` units are
  // routed. When the returned value is below `limit` it is the true maximum
  // and reachable_from_source() describes a minimum cut.
  Capacity max_flow(std::size_t source, std::size_t sink,
                    Capacity limit = std::numeric_limits<Capacity>::max()) {
    source_ = source;
    Capacity total = 0;
    if (source == sink) return total;
    while (total < limit && build_levels(source, sink)) {
      for (std::size_t v = 0; v < next_.size(); ++v) next_[v] = 0;
      while (total < limit) {
        const Capacity pushed = augment(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Nodes reachable from the last source in the residual network.
  [[nodiscard]] std::vector<bool> reachable_from_source() const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{source_};
    seen[source_] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t id : out_[u]) {
        const Arc& a = arcs_[id];
        if (a.capacity - a.flow > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels(std::size_t source, std::size_t sink) {
    for (auto& l : level_) l = -1;
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t id : out_[u]) {
        const Arc& a = arcs_[id];
        if (a.capacity - a.flow > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity augment(std::size_t u, std::size_t sink, Capacity budget) {
    if (u == sink) return budget;
    for (std::size_t& i = next_[u]; i < out_[u].size(); ++i) {
      const std::size_t id = out_[u][i];
      Arc& a = arcs_[id];
      if (a.capacity - a.flow <= 0 || level_[a.to] != level_[u] + 1) continue;
      const Capacity room = a.capacity - a.flow;
      const Capacity pushed = augment(a.to, sink, budget < room ? budget : room);
      if (pushed > 0) {
        a.flow += pushed;
        arcs_[id ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::size_t source_ = 0;
};

}  // namespace bicon
