#include "densekit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "densekit/error.hpp"

namespace densekit {

namespace {

constexpr double kRelativeTolerance = 1e-12;
// Largest magnitude at which doubles still represent every integer.
constexpr double kExactIntegerLimit = 9007199254740992.0;

bool is_integer(double w) {
  return std::isfinite(w) && std::abs(w) < kExactIntegerLimit && std::floor(w) == w;
}

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

double parse_weight(std::string_view token, std::size_t line_no) {
  // std::from_chars for double is available in libstdc++ 11.
  double w = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, w);
  if (ec != std::errc() || ptr != last || !std::isfinite(w)) {
    throw ParseError(line_no, "invalid weight '" + std::string(token) + "'");
  }
  return w;
}

}  // namespace

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges, bool weighted,
                        std::vector<std::string> labels) {
  if (n < 0) throw InputError("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
    throw InputError("label count does not match vertex count");
  }
  if (edges.size() > static_cast<std::size_t>(std::numeric_limits<EdgeId>::max())) {
    throw InputError("too many edges");
  }

  Graph g;
  g.n_ = n;
  g.weighted_ = weighted;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!std::isfinite(e.weight)) throw InputError("non-finite edge weight");
    if (!weighted && e.weight != 1.0) throw InputError("unweighted graph with weight != 1");
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    if (e.weight < 0) g.signed_ = true;
    if (!is_integer(e.weight)) g.integral_ = false;
  }
  g.edges_ = std::move(edges);

  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : g.edges_) {
    ++counts[static_cast<std::size_t>(e.u) + 1];
    ++counts[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
  g.offsets_ = counts;
  g.adjacency_.resize(2 * g.edges_.size());
  auto cursor = counts;
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edges_[static_cast<std::size_t>(id)];
    g.adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, id};
    g.adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, id};
  }

  g.weighted_degree_.assign(static_cast<std::size_t>(n), 0.0);
  for (VertexId v = 0; v < n; ++v) {
    double sum = 0.0;
    for (const auto& inc : g.neighbors(v)) sum += g.edges_[static_cast<std::size_t>(inc.edge)].weight;
    g.weighted_degree_[static_cast<std::size_t>(v)] = sum;
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    g.max_weighted_degree_ = std::max(g.max_weighted_degree_, sum);
  }
  for (const auto& e : g.edges_) g.total_weight_ += e.weight;

  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  const std::size_t expected = options.weighted ? 3 : 2;

  auto id_of = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (!options.comment_prefix.empty() && view.starts_with(options.comment_prefix)) continue;

    const auto tokens = split_tokens(view);
    if (tokens.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                    std::to_string(tokens.size()));
    }
    const double w = options.weighted ? parse_weight(tokens[2], line_no) : 1.0;
    if (tokens[0] == tokens[1]) continue;

    // Look up without inserting so labels only seen on dropped lines stay out.
    const auto a = ids.find(std::string(tokens[0]));
    const auto b = ids.find(std::string(tokens[1]));
    if (a != ids.end() && b != ids.end()) {
      const auto u = std::min(a->second, b->second);
      const auto v = std::max(a->second, b->second);
      if (seen.contains(pair_key(u, v))) {
        if (options.weighted && options.on_warning) {
          options.on_warning("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::string(tokens[0]) + " " + std::string(tokens[1]) +
                             " ignored; keeping first occurrence");
        }
        continue;
      }
    }
    auto u = id_of(tokens[0]);
    auto v = id_of(tokens[1]);
    if (u > v) std::swap(u, v);
    seen.insert(pair_key(u, v));
    edges.push_back({u, v, w});
  }
  if (in.bad()) throw InputError("read error");
  if (edges.empty()) throw EmptyGraphError();

  const auto n = static_cast<VertexId>(labels.size());
  return Graph::from_edges(n, std::move(edges), options.weighted, std::move(labels));
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Graph read_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v);
    if (g.weighted()) out << ' ' << e.weight;
    out << '\n';
  }
  out.precision(old_precision);
}

Graph scale_to_integral(const Graph& g, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InputError("scale must be positive");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) {
    const double scaled = e.weight * scale;
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
      throw InputError("weight " + std::to_string(e.weight) + " times scale " +
                       std::to_string(scale) + " is not an integer");
    }
    e.weight = rounded;
  }
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return Graph::from_edges(g.n(), std::move(edges), true, std::move(labels));
}

bool denser(const DensityValue& a, const DensityValue& b) {
  if (a.exact && b.exact) {
    const auto lhs = static_cast<__int128>(std::llround(a.numerator)) * b.denominator;
    const auto rhs = static_cast<__int128>(std::llround(b.numerator)) * a.denominator;
    return lhs > rhs;
  }
  const double x = a.value();
  const double y = b.value();
  return x - y > kRelativeTolerance * std::max(std::abs(x), std::abs(y));
}

bool same_density(const DensityValue& a, const DensityValue& b) {
  return !denser(a, b) && !denser(b, a);
}

DensityValue density(const Graph& g, std::span<const VertexId> subset) {
  std::vector<char> member(static_cast<std::size_t>(g.n()), 0);
  std::int64_t size = 0;
  for (const auto v : subset) {
    if (v < 0 || v >= g.n()) throw InputError("vertex id " + std::to_string(v) + " out of range");
    auto& flag = member[static_cast<std::size_t>(v)];
    if (!flag) {
      flag = 1;
      ++size;
    }
  }
  if (size == 0) throw UndefinedDensityError();
  double weight = 0.0;
  for (const auto& e : g.edges()) {
    if (member[static_cast<std::size_t>(e.u)] && member[static_cast<std::size_t>(e.v)]) weight += e.weight;
  }
  return {weight, size, g.integral()};
}

DensityValue whole_density(const Graph& g) {
  if (g.n() == 0) throw UndefinedDensityError();
  return {g.total_weight(), g.n(), g.integral()};
}

std::vector<std::string> to_labels(const Graph& g, std::span<const VertexId> subset) {
  std::vector<std::string> out;
  out.reserve(subset.size());
  for (const auto v : subset) out.push_back(g.label(v));
  return out;
}

}  // namespace densekit
