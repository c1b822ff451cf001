#include "utn/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace utn {

bool is_set_partition(int n, const std::vector<Edge>& edges) {
  std::set<int> lefts, rights;
  for (Edge e : edges) {
    check_edge(n, e);
    if (!lefts.insert(e.i).second) return false;
    if (!rights.insert(e.j).second) return false;
  }
  return true;
}

bool is_nonnesting(int n, const std::vector<Edge>& edges) {
  if (!is_set_partition(n, edges)) return false;
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = a + 1; b < edges.size(); ++b)
      if (comparable(edges[a], edges[b])) return false;
  return true;
}

std::vector<std::vector<int>> partition_blocks(int n,
                                               const std::vector<Edge>& arcs) {
  std::vector<int> parent(n + 1);
  for (int v = 0; v <= n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Edge e : arcs) {
    check_edge(n, e);
    parent[find(e.i)] = find(e.j);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, verts] : groups) {
    if (verts.size() >= 2) {
      std::sort(verts.begin(), verts.end());
      blocks.push_back(verts);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::vector<Edge> upper_set(int n, const std::vector<Edge>& base, int level) {
  if (level < 0) throw UsageError("upper_set: negative level");
  for (Edge e : base) check_edge(n, e);
  std::vector<Edge> out;
  for (Edge f : all_edges(n)) {
    for (Edge e : base) {
      if (leq(e, f) && height(f) >= height(e) + level) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

std::vector<Edge> min_elements(int n, const std::vector<Edge>& family) {
  std::set<Edge> fam(family.begin(), family.end());
  for (Edge e : family) {
    check_edge(n, e);
    for (Edge f : all_edges(n)) {
      if (leq(e, f) && !fam.count(f)) {
        throw ValidationError("family is not upward closed: contains " +
                              to_string(e) + " but not " + to_string(f));
      }
    }
  }
  std::vector<Edge> mins;
  for (Edge e : family) {
    bool minimal = true;
    for (Edge f : family) {
      if (f != e && leq(f, e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(e);
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

namespace {

bool arcs_compatible(Edge a, Edge b) {
  return a.i != b.i && a.j != b.j && !comparable(a, b);
}

void nnsp_extend(const std::vector<Edge>& edges, std::vector<Edge>& current,
                 size_t from,
                 const std::function<void(const std::vector<Edge>&)>& fn) {
  fn(current);
  for (size_t k = from; k < edges.size(); ++k) {
    bool ok = std::all_of(current.begin(), current.end(), [&](Edge e) {
      return arcs_compatible(e, edges[k]);
    });
    if (!ok) continue;
    current.push_back(edges[k]);
    nnsp_extend(edges, current, k + 1, fn);
    current.pop_back();
  }
}

}  // namespace

void enumerate_nnsp(int n,
                    const std::function<void(const std::vector<Edge>&)>& fn) {
  if (n < 1) throw UsageError("enumerate_nnsp: n must be positive");
  std::vector<Edge> edges = all_edges(n);
  std::vector<Edge> current;
  nnsp_extend(edges, current, 0, fn);
}

std::vector<std::vector<Edge>> all_nnsp(int n) {
  std::vector<std::vector<Edge>> out;
  enumerate_nnsp(n, [&](const std::vector<Edge>& p) { out.push_back(p); });
  return out;
}

}  // namespace utn
