#include "utn/stanley.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace utn {

namespace {

std::string subset_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

// Rank of the set of F_2 column vectors (given as bitmasks).
int f2_rank(std::vector<unsigned long long> cols) {
  int rank = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    unsigned long long v = cols[c];
    if (v == 0) continue;
    int bit = 63 - __builtin_clzll(v);
    ++rank;
    for (size_t d = c + 1; d < cols.size(); ++d) {
      if (cols[d] >> bit & 1) cols[d] ^= v;
    }
  }
  return rank;
}

}  // namespace

std::vector<int> StanleyGraph::sources() const {
  std::vector<int> out;
  for (int x = 0; x < k; ++x)
    if (!in_v[x]) out.push_back(x);
  return out;
}

std::vector<int> StanleyGraph::sinks() const {
  std::vector<int> out;
  for (int x = 0; x < k; ++x)
    if (in_v[x]) out.push_back(x);
  return out;
}

void validate_stanley_graph(const StanleyGraph& G) {
  if (G.k < 0 || static_cast<int>(G.in_v.size()) != G.k) {
    throw ValidationError("stanley graph: partition flags do not cover the ground set");
  }
  std::vector<int> in_degree(G.k, 0);
  for (auto [u, v] : G.edges) {
    if (u < 0 || v < 0 || u >= G.k || v >= G.k) {
      throw ValidationError("stanley graph: edge endpoint outside the ground set");
    }
    if (G.in_v[u] || !G.in_v[v]) {
      throw ValidationError("stanley graph: edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") must run from a source to a sink");
    }
    if (u >= v) {
      throw ValidationError("stanley graph: edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") violates u < v");
    }
    ++in_degree[v];
  }
  for (int x = 0; x < G.k; ++x) {
    if (G.in_v[x] && in_degree[x] == 0) {
      throw ValidationError("stanley graph: sink " + std::to_string(x) +
                            " has no incoming edge");
    }
  }
  if (!std::is_sorted(G.edges.begin(), G.edges.end())) {
    throw ValidationError("stanley graph: edges must be sorted");
  }
  if (std::adjacent_find(G.edges.begin(), G.edges.end()) != G.edges.end()) {
    throw ValidationError("stanley graph: duplicate edge");
  }
}

std::vector<StanleyGraph> enumerate_stanley_graphs(int k) {
  if (k < 0) throw UsageError("enumerate_stanley_graphs: negative ground size");
  if (k > 20) throw ResourceError("stanley graph enumeration capped at k <= 20");
  std::vector<StanleyGraph> out;
  // Element 0 can never be a sink (no smaller source exists).
  for (unsigned sink_mask = 0; sink_mask < (1u << k); ++sink_mask) {
    if (sink_mask & 1u) continue;
    std::vector<int> sinks;
    std::vector<std::vector<int>> source_choices;  // sources below each sink
    bool feasible = true;
    for (int x = 0; x < k; ++x) {
      if (!(sink_mask >> x & 1)) continue;
      sinks.push_back(x);
      std::vector<int> below;
      for (int u = 0; u < x; ++u) {
        if (!(sink_mask >> u & 1)) below.push_back(u);
      }
      if (below.empty()) {
        feasible = false;
        break;
      }
      source_choices.push_back(std::move(below));
    }
    if (!feasible) continue;
    // Odometer over nonempty in-neighborhood masks, last sink fastest.
    std::vector<unsigned> nbr(sinks.size(), 1);
    while (true) {
      StanleyGraph G;
      G.k = k;
      G.in_v.assign(k, 0);
      for (int v : sinks) G.in_v[v] = 1;
      for (size_t s = 0; s < sinks.size(); ++s) {
        for (size_t b = 0; b < source_choices[s].size(); ++b) {
          if (nbr[s] >> b & 1) G.edges.push_back({source_choices[s][b], sinks[s]});
        }
      }
      std::sort(G.edges.begin(), G.edges.end());
      validate_stanley_graph(G);
      out.push_back(std::move(G));
      if (sinks.empty()) break;
      size_t pos = sinks.size();
      while (pos > 0) {
        unsigned limit = 1u << source_choices[pos - 1].size();
        if (nbr[pos - 1] + 1 < limit) {
          ++nbr[pos - 1];
          break;
        }
        nbr[pos - 1] = 1;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

MatroidBases graph_to_bases(const StanleyGraph& G) {
  validate_stanley_graph(G);
  const std::vector<int> sources = G.sources();
  const int rank = static_cast<int>(sources.size());
  if (rank > 63) throw ResourceError("graph_to_bases: rank too large");
  // phi(x) as a bitmask over source positions.
  std::vector<int> source_pos(G.k, -1);
  for (int s = 0; s < rank; ++s) source_pos[sources[s]] = s;
  std::vector<unsigned long long> phi(G.k, 0);
  for (int x : sources) phi[x] = 1ull << source_pos[x];
  for (auto [u, v] : G.edges) phi[v] ^= phi[u];

  MatroidBases bases;
  // Lexicographic enumeration of rank-subsets of {0..k-1}.
  std::vector<int> subset(rank);
  for (int i = 0; i < rank; ++i) subset[i] = i;
  if (rank == 0) {
    bases.push_back({});
    return bases;
  }
  if (rank > G.k) return bases;
  while (true) {
    std::vector<unsigned long long> cols;
    cols.reserve(rank);
    for (int x : subset) cols.push_back(phi[x]);
    if (f2_rank(std::move(cols)) == rank) bases.push_back(subset);
    int i = rank - 1;
    while (i >= 0 && subset[i] == G.k - rank + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < rank; ++j) subset[j] = subset[j - 1] + 1;
  }
  return bases;
}

StanleyGraph bases_to_graph(int k, MatroidBases bases) {
  if (k < 0) throw UsageError("bases_to_graph: negative ground size");
  for (auto& b : bases) std::sort(b.begin(), b.end());
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) {
    throw ValidationError("matroid axiom M1 fails: no bases given");
  }
  for (const auto& b : bases) {
    for (int x : b) {
      if (x < 0 || x >= k) {
        throw ValidationError("basis element " + std::to_string(x) +
                              " outside the ground set");
      }
    }
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw ValidationError("basis " + subset_str(b) + " repeats an element");
    }
    if (b.size() != bases.front().size()) {
      throw ValidationError("bases " + subset_str(bases.front()) + " and " +
                            subset_str(b) + " have different sizes");
    }
  }
  std::set<std::vector<int>> basis_set(bases.begin(), bases.end());
  // M2 (exchange): for all A,B and a in A\B there is b in B\A with
  // A - a + b a basis.
  for (const auto& A : bases) {
    for (const auto& B : bases) {
      for (int a : A) {
        if (std::binary_search(B.begin(), B.end(), a)) continue;
        bool exchanged = false;
        for (int b : B) {
          if (std::binary_search(A.begin(), A.end(), b)) continue;
          std::vector<int> C;
          for (int x : A)
            if (x != a) C.push_back(x);
          C.push_back(b);
          std::sort(C.begin(), C.end());
          if (basis_set.count(C)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          throw ValidationError("matroid axiom M2 fails for bases " +
                                subset_str(A) + ", " + subset_str(B) +
                                " at element " + std::to_string(a));
        }
      }
    }
  }
  // Looplessness: every ground element occurs in some basis.
  {
    std::vector<char> seen(k, 0);
    for (const auto& b : bases)
      for (int x : b) seen[x] = 1;
    for (int x = 0; x < k; ++x) {
      if (!seen[x]) {
        throw ValidationError("matroid has a loop: element " +
                              std::to_string(x) + " lies in no basis");
      }
    }
  }

  // Rebuild the graph from the lexicographically least basis via exchange.
  const std::vector<int>& least = bases.front();
  StanleyGraph G;
  G.k = k;
  G.in_v.assign(k, 1);
  for (int u : least) G.in_v[u] = 0;
  for (int v = 0; v < k; ++v) {
    if (!G.in_v[v]) continue;
    for (int u : least) {
      std::vector<int> C;
      for (int x : least)
        if (x != u) C.push_back(x);
      C.push_back(v);
      std::sort(C.begin(), C.end());
      if (basis_set.count(C)) {
        if (u >= v) {
          throw ValidationError(
              "exchange neighbor " + std::to_string(u) + " of element " +
              std::to_string(v) +
              " is not below it; least basis is not graph-compatible");
        }
        G.edges.push_back({u, v});
      }
    }
  }
  std::sort(G.edges.begin(), G.edges.end());
  validate_stanley_graph(G);
  // Binary check: the graph must reproduce the input exactly.
  MatroidBases rebuilt = graph_to_bases(G);
  if (rebuilt != bases) {
    std::vector<std::vector<int>> diff;
    std::set_symmetric_difference(rebuilt.begin(), rebuilt.end(), bases.begin(),
                                  bases.end(), std::back_inserter(diff));
    throw ValidationError(
        "matroid is not binary-representable by a Stanley graph; basis " +
        subset_str(diff.front()) + " differs");
  }
  return G;
}

void enumerate_labeled_graphs(
    int k, const Field& F,
    const std::function<void(const StanleyGraph&, const EdgeLabeling&)>& fn) {
  for (const StanleyGraph& G : enumerate_stanley_graphs(k)) {
    EdgeLabeling tau(G.edges.size(), 1);
    while (true) {
      fn(G, tau);
      size_t pos = tau.size();
      while (pos > 0) {
        if (tau[pos - 1] + 1 < F.q()) {
          ++tau[pos - 1];
          break;
        }
        tau[pos - 1] = 1;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

}  // namespace utn
