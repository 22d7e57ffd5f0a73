#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace densekit::flow {

using NodeId = std::int32_t;
using ArcId = std::int32_t;
using Capacity = std::int64_t;

struct Arc {
  NodeId from;
  NodeId to;
  Capacity capacity;
  Capacity flow = 0;
};

// Directed network with integer capacities. max_flow() stores its result in
// the per-arc flow fields.
class FlowNetwork {
 public:
  FlowNetwork(NodeId nodes, NodeId source, NodeId sink);

  ArcId add_arc(NodeId from, NodeId to, Capacity capacity);

  NodeId nodes() const noexcept { return nodes_; }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<Arc> mutable_arcs() noexcept { return arcs_; }

  // DIMACS max-flow format with 1-based node ids.
  void write_dimacs(std::ostream& out) const;

 private:
  NodeId nodes_;
  NodeId source_;
  NodeId sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Capacity value = 0;
  // Nodes reachable from the source in the final residual network.
  std::vector<char> source_side;
};

struct PushRelabelStats {
  std::int64_t pushes = 0;
  std::int64_t relabels = 0;
  std::int64_t gaps = 0;
  std::int64_t global_relabels = 0;
};

// Highest-label push-relabel with the gap heuristic and periodic global
// relabeling. Throws InputError if the capacities leaving the source or
// entering the sink would overflow 64 bits.
MaxFlowResult max_flow(FlowNetwork& net, PushRelabelStats* stats = nullptr);

Capacity cut_capacity(const FlowNetwork& net, std::span<const char> source_side);

// Net flow leaving the source, as stored in the arcs.
Capacity flow_value(const FlowNetwork& net);

// Checks 0 <= flow <= capacity on every arc and conservation at every node
// other than source and sink. On failure `why` (if given) says where.
bool is_valid_flow(const FlowNetwork& net, std::string* why = nullptr);

}  // namespace densekit::flow
