// Words of length n with an even number of ones, read off the unrolled
// automaton network, and the heaviest such word under position weights.

#include <iostream>

#include "flowext/flowext.hpp"

int main() {
  const std::size_t n = 5;
  flowext::Network net = flowext::dfa_network(flowext::Dfa::even_parity(), n);
  std::cout << net.node_count() << " nodes, " << net.arc_count() << " arcs, "
            << flowext::count_st_paths(net) << " words\n";

  for (const flowext::Point& word : flowext::vertex_image(net)) {
    for (const auto& bit : word) std::cout << bit;
    std::cout << '\n';
  }

  std::vector<flowext::Rational> weight{3, -1, 4, -1, 5};
  flowext::OptResult best = flowext::optimize_linear(net, weight, flowext::Sense::max);
  std::cout << "best weight " << best.value << " at ";
  for (const auto& bit : best.vertex) std::cout << bit;
  std::cout << '\n';
}
