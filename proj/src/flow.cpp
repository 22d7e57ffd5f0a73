#include "densekit/flow.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "densekit/error.hpp"

namespace densekit::flow {

FlowNetwork::FlowNetwork(NodeId nodes, NodeId source, NodeId sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (nodes < 2 || source < 0 || sink < 0 || source >= nodes || sink >= nodes || source == sink) {
    throw InputError("invalid flow network terminals");
  }
}

ArcId FlowNetwork::add_arc(NodeId from, NodeId to, Capacity capacity) {
  if (from < 0 || to < 0 || from >= nodes_ || to >= nodes_) throw InputError("arc endpoint out of range");
  if (from == to) throw InputError("self arc");
  if (capacity < 0) throw InputError("negative capacity");
  arcs_.push_back({from, to, capacity, 0});
  return static_cast<ArcId>(arcs_.size() - 1);
}

void FlowNetwork::write_dimacs(std::ostream& out) const {
  out << "c densekit feasibility network\n";
  out << "p max " << nodes_ << ' ' << arcs_.size() << '\n';
  out << "n " << source_ + 1 << " s\n";
  out << "n " << sink_ + 1 << " t\n";
  for (const auto& a : arcs_) out << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.capacity << '\n';
}

namespace {

// Residual network in CSR form; residual arc 2k+... is not used, instead each
// original arc gets a forward slot in its tail's range and a backward slot in
// its head's range.
class PushRelabel {
 public:
  explicit PushRelabel(const FlowNetwork& net)
      : n_(net.nodes()), s_(net.source()), t_(net.sink()) {
    const auto arcs = net.arcs();
    first_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& a : arcs) {
      ++first_[static_cast<std::size_t>(a.from) + 1];
      ++first_[static_cast<std::size_t>(a.to) + 1];
    }
    for (std::size_t i = 1; i < first_.size(); ++i) first_[i] += first_[i - 1];
    const auto slots = first_.back();
    head_.resize(slots);
    rescap_.resize(slots);
    reverse_.resize(slots);
    forward_slot_.resize(arcs.size());
    auto fill = first_;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const auto& a = arcs[k];
      const auto f = fill[static_cast<std::size_t>(a.from)]++;
      const auto b = fill[static_cast<std::size_t>(a.to)]++;
      head_[f] = a.to;
      rescap_[f] = a.capacity;
      reverse_[f] = b;
      head_[b] = a.from;
      rescap_[b] = 0;
      reverse_[b] = f;
      forward_slot_[k] = f;
    }
    const auto nn = static_cast<std::size_t>(n_);
    height_.assign(nn, 0);
    excess_.assign(nn, 0);
    current_.assign(nn, 0);
    layer_next_.assign(nn, -1);
    layer_prev_.assign(nn, -1);
    layer_head_.assign(nn, -1);
    active_.resize(2 * nn + 1);
  }

  Capacity run(PushRelabelStats* stats) {
    height_[idx(s_)] = n_;
    for (auto a = first_[idx(s_)]; a < first_[idx(s_) + 1]; ++a) {
      const auto delta = rescap_[a];
      if (delta == 0) continue;
      rescap_[a] -= delta;
      rescap_[reverse_[a]] += delta;
      excess_[idx(head_[a])] += delta;
      excess_[idx(s_)] -= delta;
    }
    global_relabel();
    const std::int64_t relabel_budget = 6 * static_cast<std::int64_t>(n_) + static_cast<std::int64_t>(head_.size()) / 2;

    while (max_active_ >= 0) {
      auto& bucket = active_[static_cast<std::size_t>(max_active_)];
      if (bucket.empty()) {
        --max_active_;
        continue;
      }
      const NodeId v = bucket.back();
      bucket.pop_back();
      if (height_[idx(v)] != max_active_ || excess_[idx(v)] == 0) continue;
      discharge(v);
      if (work_ > relabel_budget) {
        work_ = 0;
        global_relabel();
      }
    }
    if (stats != nullptr) *stats = stats_;
    return excess_[idx(t_)];
  }

  void write_flows(FlowNetwork& net) const {
    auto arcs = net.mutable_arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      arcs[k].flow = arcs[k].capacity - rescap_[forward_slot_[k]];
    }
  }

  std::vector<char> source_side() const {
    std::vector<char> seen(idx(n_), 0);
    std::vector<NodeId> queue{s_};
    seen[idx(s_)] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto v = queue[q];
      for (auto a = first_[idx(v)]; a < first_[idx(v) + 1]; ++a) {
        const auto w = head_[a];
        if (rescap_[a] > 0 && !seen[idx(w)]) {
          seen[idx(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

  bool is_inner(NodeId v) const { return v != s_ && v != t_; }

  void activate(NodeId v) {
    const auto h = height_[idx(v)];
    if (h >= 2 * n_) return;
    active_[static_cast<std::size_t>(h)].push_back(v);
    max_active_ = std::max(max_active_, h);
  }

  void layer_insert(NodeId v) {
    const auto h = height_[idx(v)];
    if (h >= n_) return;
    auto& head = layer_head_[static_cast<std::size_t>(h)];
    layer_prev_[idx(v)] = -1;
    layer_next_[idx(v)] = head;
    if (head >= 0) layer_prev_[idx(head)] = v;
    head = v;
    max_layer_ = std::max(max_layer_, h);
  }

  void layer_remove(NodeId v) {
    const auto h = height_[idx(v)];
    if (h >= n_) return;
    const auto prev = layer_prev_[idx(v)];
    const auto next = layer_next_[idx(v)];
    if (prev >= 0) {
      layer_next_[idx(prev)] = next;
    } else {
      layer_head_[static_cast<std::size_t>(h)] = next;
    }
    if (next >= 0) layer_prev_[idx(next)] = prev;
  }

  // Exact distances to the sink in the residual graph; nodes that cannot
  // reach it get n + distance to the source.
  void global_relabel() {
    ++stats_.global_relabels;
    const auto nn = idx(n_);
    std::fill(height_.begin(), height_.end(), 2 * n_);
    std::fill(layer_head_.begin(), layer_head_.end(), -1);
    for (auto& b : active_) b.clear();
    max_active_ = -1;
    max_layer_ = -1;

    auto bfs = [&](NodeId root, NodeId base) {
      std::vector<NodeId> queue{root};
      height_[idx(root)] = base;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto v = queue[q];
        for (auto a = first_[idx(v)]; a < first_[idx(v) + 1]; ++a) {
          const auto w = head_[a];
          // Residual arc w -> v is the reverse slot of a.
          if (rescap_[reverse_[a]] > 0 && height_[idx(w)] == 2 * n_ && w != s_ && w != t_) {
            height_[idx(w)] = height_[idx(v)] + 1;
            queue.push_back(w);
          }
        }
      }
    };
    bfs(t_, 0);
    bfs(s_, n_);

    for (std::size_t v = 0; v < nn; ++v) {
      const auto node = static_cast<NodeId>(v);
      current_[v] = first_[v];
      if (!is_inner(node)) continue;
      layer_insert(node);
      if (excess_[v] > 0) activate(node);
    }
  }

  void gap(NodeId emptied) {
    ++stats_.gaps;
    for (NodeId h = emptied + 1; h <= max_layer_; ++h) {
      auto v = layer_head_[static_cast<std::size_t>(h)];
      layer_head_[static_cast<std::size_t>(h)] = -1;
      while (v >= 0) {
        const auto next = layer_next_[idx(v)];
        height_[idx(v)] = n_;
        current_[idx(v)] = first_[idx(v)];
        if (excess_[idx(v)] > 0) activate(v);
        v = next;
      }
    }
    max_layer_ = emptied - 1;
  }

  void relabel(NodeId v) {
    ++stats_.relabels;
    const auto vi = idx(v);
    NodeId lowest = 2 * n_;
    auto best_arc = first_[vi];
    for (auto a = first_[vi]; a < first_[vi + 1]; ++a) {
      work_ += 1;
      if (rescap_[a] > 0 && height_[idx(head_[a])] < lowest) {
        lowest = height_[idx(head_[a])];
        best_arc = a;
      }
    }
    work_ += 12;
    const auto old = height_[vi];
    layer_remove(v);
    NodeId next = std::min<NodeId>(lowest + 1, 2 * n_);
    if (old < n_ && layer_head_[static_cast<std::size_t>(old)] < 0) {
      gap(old);
      next = std::max(next, n_);
    }
    height_[vi] = next;
    current_[vi] = best_arc;
    layer_insert(v);
  }

  void discharge(NodeId v) {
    const auto vi = idx(v);
    while (excess_[vi] > 0) {
      if (current_[vi] == first_[vi + 1]) {
        relabel(v);
        if (height_[vi] >= 2 * n_) break;
        continue;
      }
      const auto a = current_[vi];
      const auto w = head_[a];
      if (rescap_[a] > 0 && height_[vi] == height_[idx(w)] + 1) {
        const auto delta = std::min(excess_[vi], rescap_[a]);
        ++stats_.pushes;
        rescap_[a] -= delta;
        rescap_[reverse_[a]] += delta;
        excess_[vi] -= delta;
        const bool was_idle = excess_[idx(w)] == 0;
        excess_[idx(w)] += delta;
        if (was_idle && is_inner(w)) activate(w);
        if (excess_[vi] == 0) break;
      }
      ++current_[vi];
    }
  }

  NodeId n_;
  NodeId s_;
  NodeId t_;
  std::vector<std::size_t> first_;
  std::vector<NodeId> head_;
  std::vector<Capacity> rescap_;
  std::vector<std::size_t> reverse_;
  std::vector<std::size_t> forward_slot_;

  std::vector<NodeId> height_;
  std::vector<Capacity> excess_;
  std::vector<std::size_t> current_;
  std::vector<NodeId> layer_next_;
  std::vector<NodeId> layer_prev_;
  std::vector<NodeId> layer_head_;
  NodeId max_layer_ = -1;
  std::vector<std::vector<NodeId>> active_;
  NodeId max_active_ = -1;
  std::int64_t work_ = 0;
  PushRelabelStats stats_;
};

void check_overflow(const FlowNetwork& net) {
  Capacity out = 0;
  Capacity in = 0;
  for (const auto& a : net.arcs()) {
    if (a.from == net.source() && __builtin_add_overflow(out, a.capacity, &out)) {
      throw InputError("source capacity sum overflows 64-bit integers");
    }
    if (a.to == net.sink() && __builtin_add_overflow(in, a.capacity, &in)) {
      throw InputError("sink capacity sum overflows 64-bit integers");
    }
  }
}

}  // namespace

MaxFlowResult max_flow(FlowNetwork& net, PushRelabelStats* stats) {
  check_overflow(net);
  PushRelabel solver(net);
  MaxFlowResult result;
  result.value = solver.run(stats);
  solver.write_flows(net);
  result.source_side = solver.source_side();
  return result;
}

Capacity cut_capacity(const FlowNetwork& net, std::span<const char> source_side) {
  if (source_side.size() != static_cast<std::size_t>(net.nodes())) throw InputError("cut size mismatch");
  Capacity total = 0;
  for (const auto& a : net.arcs()) {
    if (source_side[static_cast<std::size_t>(a.from)] && !source_side[static_cast<std::size_t>(a.to)]) {
      total += a.capacity;
    }
  }
  return total;
}

Capacity flow_value(const FlowNetwork& net) {
  Capacity value = 0;
  for (const auto& a : net.arcs()) {
    if (a.from == net.source()) value += a.flow;
    if (a.to == net.source()) value -= a.flow;
  }
  return value;
}

bool is_valid_flow(const FlowNetwork& net, std::string* why) {
  std::vector<Capacity> balance(static_cast<std::size_t>(net.nodes()), 0);
  const auto arcs = net.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& a = arcs[k];
    if (a.flow < 0 || a.flow > a.capacity) {
      if (why != nullptr) *why = "arc " + std::to_string(k) + " violates its capacity";
      return false;
    }
    balance[static_cast<std::size_t>(a.from)] -= a.flow;
    balance[static_cast<std::size_t>(a.to)] += a.flow;
  }
  for (NodeId v = 0; v < net.nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) {
      if (why != nullptr) *why = "node " + std::to_string(v) + " is not conserved";
      return false;
    }
  }
  return true;
}

}  // namespace densekit::flow
