#include "densekit/mwu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "densekit/error.hpp"

namespace densekit::mwu {

double DualAssignment::max_load() const {
  return loads.empty() ? 0.0 : *std::max_element(loads.begin(), loads.end());
}

namespace {

double weighted_sum(std::span<const double> x, std::span<const double> loads) {
  double value = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) value += x[v] * loads[v];
  return value;
}

}  // namespace

OracleResult oracle_min(const Graph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.n())) throw InputError("oracle point has wrong dimension");
  for (const double xi : x) {
    if (!(xi >= 0.0) || !std::isfinite(xi)) throw InputError("oracle point must be non-negative");
  }
  OracleResult out;
  std::vector<std::uint8_t> to_v(static_cast<std::size_t>(g.m()));
  out.assignment.loads.assign(static_cast<std::size_t>(g.n()), 0.0);
  kernels::assign_serial(g, x, to_v, out.assignment.loads);
  out.assignment.share.resize(to_v.size());
  for (std::size_t e = 0; e < to_v.size(); ++e) {
    out.assignment.share[e] = to_v[e] ? std::array<double, 2>{0.0, 1.0} : std::array<double, 2>{1.0, 0.0};
  }
  out.value = weighted_sum(x, out.assignment.loads);
  return out;
}

std::int64_t iteration_bound(const Graph& g, double eps, double iteration_constant) {
  const double width = g.weighted() ? g.max_weighted_degree() : static_cast<double>(g.max_degree());
  const double log_n = std::log(static_cast<double>(std::max<VertexId>(g.n(), 2)));
  const double rounds = std::ceil(iteration_constant * width * log_n / (eps * eps));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(rounds));
}

MwuResult mwu_solve(const Graph& g, const MwuOptions& options) {
  if (!(options.eps > 0.0 && options.eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  if (g.m() == 0) throw EmptyGraphError();
  if (g.is_signed()) throw InputError("multiplicative weights solver needs non-negative weights");
  if (options.renormalize_every < 1) throw InputError("renormalization period must be positive");
  if (options.max_iters && *options.max_iters < 1) throw InputError("max_iters must be positive");

  const auto n = static_cast<std::size_t>(g.n());
  const auto m = static_cast<std::size_t>(g.m());
  MwuResult result;
  result.width = g.weighted() ? g.max_weighted_degree() : static_cast<double>(g.max_degree());
  if (!(result.width > 0.0)) throw InputError("graph has zero total weight");
  result.eta = options.eps / (2.0 * result.width);
  result.rounds = iteration_bound(g, options.eps, options.iteration_constant);
  if (options.max_iters) result.rounds = std::min(result.rounds, *options.max_iters);

  std::vector<double> w(n, 1.0);
  std::vector<double> x(n);
  std::vector<double> loads(n);
  std::vector<std::uint8_t> to_v(m);
  std::vector<double> load_total(n, 0.0);
  result.lower_counts.assign(m, 0);
  double value_total = 0.0;
  if (options.record_rounds) {
    result.round_values.reserve(static_cast<std::size_t>(result.rounds));
    result.round_max_increment.reserve(static_cast<std::size_t>(result.rounds));
  }

  constexpr double kFloor = std::numeric_limits<double>::min();
  for (std::int64_t t = 1; t <= result.rounds; ++t) {
    double norm = 0.0;
    for (const double wi : w) norm += wi;
    for (std::size_t i = 0; i < n; ++i) x[i] = w[i] / norm;

    if (options.parallel) {
      kernels::assign_parallel(g, x, to_v, loads);
    } else {
      kernels::assign_serial(g, x, to_v, loads);
    }
    const double value = weighted_sum(x, loads);
    value_total += value;
    for (std::size_t e = 0; e < m; ++e) result.lower_counts[e] += to_v[e] ? 0 : 1;
    for (std::size_t i = 0; i < n; ++i) load_total[i] += loads[i];
    if (options.record_rounds) {
      result.round_values.push_back(value);
      result.round_max_increment.push_back(*std::max_element(loads.begin(), loads.end()));
    }

    if (options.parallel) {
      kernels::update_weights_parallel(w, loads, result.eta);
    } else {
      kernels::update_weights_serial(w, loads, result.eta);
    }
    if (t % options.renormalize_every == 0) {
      const double top = *std::max_element(w.begin(), w.end());
      for (auto& wi : w) wi = std::max(wi / top, kFloor);
    }
  }

  const auto rounds = static_cast<double>(result.rounds);
  result.average_value = value_total / rounds;
  result.average.share.resize(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto lower = result.lower_counts[e];
    result.average.share[e] = {static_cast<double>(lower) / rounds,
                               static_cast<double>(result.rounds - lower) / rounds};
  }
  result.average.loads.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.average.loads[i] = load_total[i] / rounds;
  result.max_load = result.average.max_load();
  return result;
}

}  // namespace densekit::mwu
