#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace densekit {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId u;
  VertexId v;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Immutable undirected simple graph with dense vertex ids in [0, n).
//
// Edges are stored with u < v in insertion order; the adjacency of every
// vertex lists its incident edges in ascending edge id. Each vertex keeps an
// external label (the token it had in the input file, or its decimal id).
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicate pairs, or out-of-range ids.
  // `weighted` false requires every weight to be exactly 1.
  static Graph from_edges(VertexId n, std::vector<Edge> edges, bool weighted = false,
                          std::vector<std::string> labels = {});

  VertexId n() const noexcept { return n_; }
  EdgeId m() const noexcept { return static_cast<EdgeId>(edges_.size()); }
  bool weighted() const noexcept { return weighted_; }
  bool is_signed() const noexcept { return signed_; }
  // True when every weight is an integer, so densities are exact rationals.
  bool integral() const noexcept { return integral_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> neighbors(VertexId v) const noexcept {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, e - b};
  }

  std::int64_t degree(VertexId v) const noexcept {
    return static_cast<std::int64_t>(neighbors(v).size());
  }
  // Sum of incident weights, accumulated in ascending edge id.
  double weighted_degree(VertexId v) const noexcept {
    return weighted_degree_[static_cast<std::size_t>(v)];
  }
  std::int64_t max_degree() const noexcept { return max_degree_; }
  double max_weighted_degree() const noexcept { return max_weighted_degree_; }
  double total_weight() const noexcept { return total_weight_; }

  const std::string& label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.weighted_ == b.weighted_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  VertexId n_ = 0;
  bool weighted_ = false;
  bool signed_ = false;
  bool integral_ = true;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<double> weighted_degree_;
  std::int64_t max_degree_ = 0;
  double max_weighted_degree_ = 0.0;
  double total_weight_ = 0.0;
  std::vector<std::string> labels_;
};

struct ParseOptions {
  bool weighted = false;
  std::string comment_prefix = "#";
  // Receives non-fatal diagnostics such as dropped duplicate weighted edges.
  std::function<void(const std::string&)> on_warning;
};

// Reads a SNAP-style edge list. Self-loops are dropped, duplicate undirected
// pairs collapse to their first occurrence, and labels are remapped to dense
// ids in order of first appearance in a kept edge.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});
Graph read_edge_list_file(const std::string& path, const ParseOptions& options = {});

// Writes "label label [weight]" lines that parse back to an identical graph.
void write_edge_list(std::ostream& out, const Graph& g);

// Rounds weight * scale to integers; fails if any product is not within
// 1e-9 of an integer.
Graph scale_to_integral(const Graph& g, double scale);

// e[S] / |S| (or w(S) / |S|). The numerator is an exact integer whenever the
// graph is integral.
struct DensityValue {
  double numerator = 0.0;
  std::int64_t denominator = 1;
  bool exact = true;

  double value() const noexcept { return numerator / static_cast<double>(denominator); }

  friend bool operator==(const DensityValue&, const DensityValue&) = default;
};

// Strict "a is denser than b". Exact values compare by integer
// cross-multiplication, others with relative tolerance 1e-12.
bool denser(const DensityValue& a, const DensityValue& b);
bool same_density(const DensityValue& a, const DensityValue& b);

// Throws UndefinedDensityError for an empty subset and InputError for ids
// outside [0, n). Repeated ids count once.
DensityValue density(const Graph& g, std::span<const VertexId> subset);
DensityValue whole_density(const Graph& g);

std::vector<std::string> to_labels(const Graph& g, std::span<const VertexId> subset);

}  // namespace densekit
