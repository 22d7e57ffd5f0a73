#include <doctest.h>

#include <random>
#include <sstream>

#include "densekit/flow.hpp"
#include "support/reference_flow.hpp"

using namespace densekit;
using namespace densekit::flow;

namespace {

FlowNetwork random_network(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<NodeId>(4 + rng() % 30);
  FlowNetwork net(n, 0, n - 1);
  const auto arcs = 2 * n + static_cast<NodeId>(rng() % static_cast<std::uint64_t>(4 * n));
  for (NodeId i = 0; i < arcs; ++i) {
    const auto a = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
    const auto b = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
    if (a == b) continue;
    net.add_arc(a, b, static_cast<Capacity>(rng() % 50));
  }
  return net;
}

}  // namespace

TEST_CASE("two-arc path") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 2, 1);
  const auto r = max_flow(net);
  CHECK(r.value == 1);
  CHECK(r.source_side == std::vector<char>{1, 1, 0});
  CHECK(cut_capacity(net, r.source_side) == 1);
  CHECK(is_valid_flow(net));
}

TEST_CASE("disconnected source and sink") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 5);
  net.add_arc(2, 3, 5);
  const auto r = max_flow(net);
  CHECK(r.value == 0);
  CHECK(flow_value(net) == 0);
  CHECK(r.source_side[3] == 0);
}

TEST_CASE("push-relabel agrees with augmenting paths") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto net = random_network(seed);
    const auto expected = testing::reference_max_flow(net);
    PushRelabelStats stats;
    const auto r = max_flow(net, &stats);
    CHECK(r.value == expected);
    CHECK(flow_value(net) == expected);
    std::string why;
    CHECK_MESSAGE(is_valid_flow(net, &why), why);
    CHECK(r.source_side[static_cast<std::size_t>(net.source())] == 1);
    CHECK(r.source_side[static_cast<std::size_t>(net.sink())] == 0);
    CHECK(cut_capacity(net, r.source_side) == expected);
  }
}

TEST_CASE("validity check catches bad flows") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 2, 2);
  net.mutable_arcs()[0].flow = 2;
  net.mutable_arcs()[1].flow = 1;
  CHECK_FALSE(is_valid_flow(net));
  net.mutable_arcs()[1].flow = 3;
  CHECK_FALSE(is_valid_flow(net));
}

TEST_CASE("overflowing capacities are rejected") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, INT64_MAX);
  net.add_arc(0, 2, INT64_MAX);
  CHECK_THROWS(max_flow(net));
}

TEST_CASE("dimacs output") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 2);
  net.add_arc(1, 2, 1);
  std::ostringstream out;
  net.write_dimacs(out);
  const auto text = out.str();
  CHECK(text.find("p max 3 2\n") != std::string::npos);
  CHECK(text.find("n 1 s\n") != std::string::npos);
  CHECK(text.find("n 3 t\n") != std::string::npos);
  CHECK(text.find("a 1 2 2\n") != std::string::npos);
  CHECK(text.find("a 2 3 1\n") != std::string::npos);
}
