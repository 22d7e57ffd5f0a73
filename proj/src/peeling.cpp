#include "densekit/peeling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "densekit/error.hpp"

namespace densekit {

class LoadAccess {
 public:
  static std::vector<std::int64_t>& integer(LoadVector& l) { return l.integer_; }
  static std::vector<double>& real(LoadVector& l) { return l.real_; }
  static void set_exact(LoadVector& l, bool exact) { l.exact_ = exact; }
  static void bump(LoadVector& l) { ++l.iterations_; }
};

LoadVector LoadVector::zeros(const Graph& g) {
  LoadVector l;
  const auto n = static_cast<std::size_t>(g.n());
  LoadAccess::set_exact(l, g.integral());
  if (g.integral()) {
    LoadAccess::integer(l).assign(n, 0);
  } else {
    LoadAccess::real(l).assign(n, 0.0);
  }
  return l;
}

LoadVector LoadVector::from_exact(std::vector<std::int64_t> values, std::int64_t iterations) {
  if (iterations < 0) throw InputError("negative iteration count");
  LoadVector l;
  l.exact_ = true;
  l.integer_ = std::move(values);
  l.iterations_ = iterations;
  return l;
}

LoadVector LoadVector::from_real(std::vector<double> values, std::int64_t iterations) {
  if (iterations < 0) throw InputError("negative iteration count");
  LoadVector l;
  l.exact_ = false;
  l.real_ = std::move(values);
  l.iterations_ = iterations;
  return l;
}

VertexId LoadVector::size() const noexcept {
  return static_cast<VertexId>(exact_ ? integer_.size() : real_.size());
}

double LoadVector::operator[](VertexId v) const {
  const auto i = static_cast<std::size_t>(v);
  return exact_ ? static_cast<double>(integer_.at(i)) : real_.at(i);
}

double LoadVector::max() const {
  if (exact_) {
    return integer_.empty() ? 0.0 : static_cast<double>(*std::max_element(integer_.begin(), integer_.end()));
  }
  return real_.empty() ? 0.0 : *std::max_element(real_.begin(), real_.end());
}

double LoadVector::sum() const {
  if (exact_) return static_cast<double>(std::accumulate(integer_.begin(), integer_.end(), std::int64_t{0}));
  return std::accumulate(real_.begin(), real_.end(), 0.0);
}

std::vector<VertexId> PeelResult::best_subset() const {
  std::vector<VertexId> s(order.begin() + static_cast<std::ptrdiff_t>(best_removed), order.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<VertexId> GreedyPPResult::best_subset() const {
  std::vector<VertexId> s(best_order.begin() + static_cast<std::ptrdiff_t>(best_removed),
                          best_order.end());
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Keys are load + residual degree. Entries whose key no longer matches the
// vertex's current key (or whose vertex is gone) are stale and skipped.
template <class Key>
class HeapTracker {
 public:
  HeapTracker(const std::vector<Key>& keys, const std::vector<char>& removed)
      : keys_(keys), removed_(removed) {
    std::vector<Entry> init;
    init.reserve(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) init.push_back({keys[v], static_cast<VertexId>(v)});
    heap_ = Heap(std::greater<>{}, std::move(init));
  }

  void update(VertexId v) { heap_.push({keys_[static_cast<std::size_t>(v)], v}); }

  VertexId pop() {
    for (;;) {
      const auto [key, v] = heap_.top();
      heap_.pop();
      const auto i = static_cast<std::size_t>(v);
      if (!removed_[i] && keys_[i] == key) return v;
    }
  }

 private:
  using Entry = std::pair<Key, VertexId>;
  using Heap = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;
  const std::vector<Key>& keys_;
  const std::vector<char>& removed_;
  Heap heap_;
};

// One bucket per integer key in [min load, max initial key]. Each bucket is a
// small min-heap of ids so ties resolve to the smallest id. Keys only
// decrease within a pass, so the cursor resumes at the lowest key touched
// since the last pop.
class BucketTracker {
 public:
  BucketTracker(const std::vector<std::int64_t>& keys, std::int64_t base,
                const std::vector<char>& removed)
      : keys_(keys), removed_(removed), base_(base) {
    std::int64_t top = base;
    for (const auto k : keys) top = std::max(top, k);
    buckets_.resize(static_cast<std::size_t>(top - base + 1));
    for (std::size_t v = 0; v < keys.size(); ++v) {
      buckets_[static_cast<std::size_t>(keys[v] - base)].push_back(static_cast<VertexId>(v));
    }
    // Ids were appended in increasing order, so each bucket is already a valid
    // min-heap under std::greater.
  }

  void update(VertexId v) {
    const auto slot = static_cast<std::size_t>(keys_[static_cast<std::size_t>(v)] - base_);
    auto& bucket = buckets_[slot];
    bucket.push_back(v);
    std::push_heap(bucket.begin(), bucket.end(), std::greater<>{});
    cursor_ = std::min(cursor_, slot);
  }

  VertexId pop() {
    for (;; ++cursor_) {
      auto& bucket = buckets_[cursor_];
      while (!bucket.empty()) {
        const VertexId v = bucket.front();
        std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
        bucket.pop_back();
        const auto i = static_cast<std::size_t>(v);
        if (!removed_[i] && static_cast<std::size_t>(keys_[i] - base_) == cursor_) return v;
      }
    }
  }

 private:
  const std::vector<std::int64_t>& keys_;
  const std::vector<char>& removed_;
  std::int64_t base_;
  std::vector<std::vector<VertexId>> buckets_;
  std::size_t cursor_ = 0;
};

template <class Key>
Key edge_weight(const Edge& e) {
  if constexpr (std::is_integral_v<Key>) {
    return static_cast<Key>(std::llround(e.weight));
  } else {
    return e.weight;
  }
}

template <class Key, class Tracker>
void peel_with(const Graph& g, std::vector<Key>& loads, std::vector<Key>& residual,
               std::vector<Key>& keys, std::vector<char>& removed, Tracker& tracker,
               PeelResult& out, std::vector<std::int64_t>* charge_counts) {
  const auto n = static_cast<std::size_t>(g.n());
  Key remaining_weight{};
  for (const auto& e : g.edges()) remaining_weight += edge_weight<Key>(e);

  out.order.reserve(n);
  out.density_trace.reserve(n);
  out.increments.assign(n, 0.0);
  DensityValue best{static_cast<double>(remaining_weight), static_cast<std::int64_t>(n), g.integral()};
  out.best_removed = 0;
  out.density_trace.push_back(best.value());

  for (std::size_t step = 0; step < n; ++step) {
    const VertexId u = tracker.pop();
    const auto ui = static_cast<std::size_t>(u);
    removed[ui] = 1;
    out.order.push_back(u);
    const Key charge = residual[ui];
    loads[ui] += charge;
    out.increments[ui] = static_cast<double>(charge);
    remaining_weight -= charge;

    for (const auto& inc : g.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(inc.neighbor);
      if (removed[wi]) continue;
      const auto& e = g.edge(inc.edge);
      if (charge_counts != nullptr && u == e.u) ++(*charge_counts)[static_cast<std::size_t>(inc.edge)];
      residual[wi] -= edge_weight<Key>(e);
      keys[wi] = loads[wi] + residual[wi];
      tracker.update(inc.neighbor);
    }

    const auto left = static_cast<std::int64_t>(n - step - 1);
    if (left == 0) break;
    const DensityValue current{static_cast<double>(remaining_weight), left, g.integral()};
    out.density_trace.push_back(current.value());
    if (denser(current, best)) {
      best = current;
      out.best_removed = step + 1;
    }
  }
  out.best_density = density(g, out.best_subset());
}

template <class Key>
PeelResult run_pass(const Graph& g, std::vector<Key>& loads, const PeelOptions& options) {
  if (g.m() == 0) throw EmptyGraphError();
  const auto n = static_cast<std::size_t>(g.n());
  if (loads.size() != n) throw InputError("load vector size does not match graph");
  if (options.charge_counts != nullptr &&
      options.charge_counts->size() != static_cast<std::size_t>(g.m())) {
    throw InputError("charge counter size does not match edge count");
  }

  std::vector<Key> residual(n);
  std::vector<Key> keys(n);
  for (std::size_t v = 0; v < n; ++v) {
    Key sum{};
    for (const auto& inc : g.neighbors(static_cast<VertexId>(v))) sum += edge_weight<Key>(g.edge(inc.edge));
    residual[v] = sum;
    keys[v] = loads[v] + sum;
  }
  std::vector<char> removed(n, 0);
  PeelResult out;

  MinTracker tracker = options.tracker;
  if (tracker == MinTracker::automatic) tracker = g.weighted() ? MinTracker::heap : MinTracker::buckets;
  if constexpr (std::is_integral_v<Key>) {
    if (tracker == MinTracker::buckets) {
      if (g.is_signed()) throw InputError("bucket tracker requires non-negative weights");
      const auto base = *std::min_element(loads.begin(), loads.end());
      BucketTracker buckets(keys, base, removed);
      peel_with(g, loads, residual, keys, removed, buckets, out, options.charge_counts);
      return out;
    }
  } else {
    if (tracker == MinTracker::buckets) throw InputError("bucket tracker requires integral weights");
  }
  HeapTracker<Key> heap(keys, removed);
  peel_with(g, loads, residual, keys, removed, heap, out, options.charge_counts);
  return out;
}

}  // namespace

PeelResult peel_iteration(const Graph& g, LoadVector& loads, const PeelOptions& options) {
  if (loads.size() != g.n()) throw InputError("load vector size does not match graph");
  if (loads.exact() != g.integral()) throw InputError("load vector kind does not match graph weights");
  PeelResult result = loads.exact() ? run_pass(g, LoadAccess::integer(loads), options)
                                    : run_pass(g, LoadAccess::real(loads), options);
  LoadAccess::bump(loads);
  return result;
}

PeelResult charikar_peel(const Graph& g, const PeelOptions& options) {
  auto loads = LoadVector::zeros(g);
  return peel_iteration(g, loads, options);
}

GreedyPPResult greedy_pp(const Graph& g, std::int64_t iterations, const GreedyPPOptions& options) {
  if (iterations < 1) throw InputError("iteration count must be at least 1");
  if (g.m() == 0) throw EmptyGraphError();

  GreedyPPResult result;
  result.final_loads = LoadVector::zeros(g);

  const PeelOptions pass_options{options.tracker, options.charge_counts};
  for (std::int64_t i = 1; i <= iterations; ++i) {
    auto pass = peel_iteration(g, result.final_loads, pass_options);
    // Pass 1 always installs its order; its best is at least the whole graph.
    if (i == 1 || denser(pass.best_density, result.best_density)) {
      result.best_density = pass.best_density;
      result.best_order = std::move(pass.order);
      result.best_removed = pass.best_removed;
    }
    result.iterations = i;
    IterationSummary summary{i, pass.best_density, result.best_density,
                             static_cast<std::int64_t>(result.best_order.size() - result.best_removed),
                             result.final_loads.max()};
    result.per_iteration.push_back(summary);
    if (options.observer && !options.observer(summary, result.final_loads)) break;
  }
  return result;
}

}  // namespace densekit
