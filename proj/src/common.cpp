#include "utn/common.hpp"

#include <sstream>

namespace utn {

int edge_index(int n, Edge e) {
  check_edge(n, e);
  // Positions with first coordinate < i come first:
  // sum_{a=1}^{i-1} (n-a) = (i-1)*n - i*(i-1)/2.
  return (e.i - 1) * n - e.i * (e.i - 1) / 2 + (e.j - e.i - 1);
}

Edge edge_at(int n, int index) {
  if (index < 0 || index >= edge_count(n)) {
    throw UsageError("edge_at: index " + std::to_string(index) +
                     " out of range for n=" + std::to_string(n));
  }
  int i = 1;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return Edge{i, i + 1 + index};
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(edge_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Edge{i, j});
  return out;
}

std::string to_string(Edge e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

std::string to_string(const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << '{';
  for (size_t k = 0; k < edges.size(); ++k) {
    if (k) os << ',';
    os << to_string(edges[k]);
  }
  os << '}';
  return os.str();
}

void check_edge(int n, Edge e) {
  if (!(1 <= e.i && e.i < e.j && e.j <= n)) {
    throw UsageError("position " + to_string(e) +
                     " is not strictly upper-triangular for n=" +
                     std::to_string(n));
  }
}

}  // namespace utn
