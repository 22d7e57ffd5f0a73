#include "densekit/dual_cert.hpp"

#include <string>

#include "densekit/error.hpp"

namespace densekit {

namespace {

void check_iterations(const LoadVector& loads, std::int64_t iterations) {
  if (iterations < 1) throw InputError("certificate needs at least one completed iteration");
  if (loads.iterations() != iterations) {
    throw InputError("loads reflect " + std::to_string(loads.iterations()) + " iterations, not " +
                     std::to_string(iterations));
  }
}

}  // namespace

DensityValue dual_upper_bound_exact(const LoadVector& loads, std::int64_t iterations) {
  check_iterations(loads, iterations);
  return {loads.max(), iterations, loads.exact()};
}

double dual_upper_bound(const LoadVector& loads, std::int64_t iterations) {
  return dual_upper_bound_exact(loads, iterations).value();
}

DualCertificate certify(const DensityValue& best, const LoadVector& loads, std::int64_t iterations) {
  DualCertificate cert;
  cert.upper = dual_upper_bound_exact(loads, iterations);
  cert.lower = best;
  cert.iterations = iterations;
  if (denser(best, cert.upper)) {
    throw InputError("achieved density exceeds the dual bound; inputs are from different runs");
  }
  const double upper = cert.upper.value();
  cert.ratio = upper > 0.0 ? best.value() / upper : 0.0;
  if (same_density(best, cert.upper)) cert.ratio = 1.0;
  return cert;
}

AveragedDual reconstruct_average_dual(const Graph& g, std::span<const std::int64_t> charge_counts,
                                      std::int64_t iterations) {
  if (iterations < 1) throw InputError("iteration count must be at least 1");
  if (charge_counts.size() != static_cast<std::size_t>(g.m())) {
    throw InputError("charge counter size does not match edge count");
  }
  AveragedDual dual;
  dual.share.resize(charge_counts.size());
  dual.vertex_load.assign(static_cast<std::size_t>(g.n()), 0.0);
  const auto t = static_cast<double>(iterations);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto count = charge_counts[static_cast<std::size_t>(e)];
    if (count < 0 || count > iterations) throw InputError("charge count out of range");
    const auto& edge = g.edge(e);
    auto& s = dual.share[static_cast<std::size_t>(e)];
    s = {static_cast<double>(count) / t, static_cast<double>(iterations - count) / t};
    dual.vertex_load[static_cast<std::size_t>(edge.u)] += edge.weight * s[0];
    dual.vertex_load[static_cast<std::size_t>(edge.v)] += edge.weight * s[1];
  }
  return dual;
}

}  // namespace densekit
