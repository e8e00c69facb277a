// Shortest tour through points on a small grid, solved as a best path in the
// Held-Karp network.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "flowext/flowext.hpp"

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 10;
  if (n < 3) n = 3;
  std::vector<std::pair<int, int>> points;
  for (std::size_t i = 0; i < n; ++i) points.emplace_back(static_cast<int>(i * 7 % 11), static_cast<int>(i * 5 % 13));

  // Manhattan distances keep the weights integral.
  std::vector<std::vector<flowext::Rational>> w(n, std::vector<flowext::Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w[i][j] = std::abs(points[i].first - points[j].first) + std::abs(points[i].second - points[j].second);
    }
  }

  flowext::OptResult best = flowext::solve_tsp(w);
  std::cout << "tour length " << best.value << "\norder";
  for (std::size_t v : flowext::tour_from_path(best.path, n)) std::cout << ' ' << v + 1;
  std::cout << '\n';
}
