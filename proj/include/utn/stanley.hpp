#pragma once

// Stanley graphs and their equivalence with loopless binary matroids.
//
// A Stanley graph on the ordered ground set {0..k-1} is a partition into
// *sources* U and *sinks* V together with edges from U to V such that every
// edge (u,v) has u < v and every sink receives at least one edge.  The
// associated binary matroid represents ground element x by the F_2-vector
//   phi(x) = e_x            for x in U (coordinates indexed by U),
//   phi(v) = sum of phi(u)  over in-neighbors u of v, for v in V;
// its bases are the |U|-subsets whose phi-vectors are independent.  U is the
// lexicographically least basis, and the graph is recovered from the bases
// via basis exchange against that least basis.
//
// A labeled Stanley graph additionally carries a nonzero field element per
// edge.

#include <functional>
#include <string>
#include <vector>

#include "utn/common.hpp"
#include "utn/gf.hpp"

namespace utn {

struct StanleyGraph {
  int k = 0;                               // ground elements 0..k-1
  std::vector<char> in_v;                  // 1 when the element is a sink
  std::vector<std::pair<int, int>> edges;  // (source, sink), sorted lex

  friend bool operator==(const StanleyGraph&, const StanleyGraph&) = default;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
};

/// Throws ValidationError unless the graph satisfies all axioms.
void validate_stanley_graph(const StanleyGraph& G);

/// All Stanley graphs on {0..k-1}.  Deterministic order: sink sets as
/// ascending bitmasks, then per-sink in-neighborhoods as ascending bitmask
/// odometers (last sink fastest).  Counts 1, 2, 6 for k = 1, 2, 3.
std::vector<StanleyGraph> enumerate_stanley_graphs(int k);

/// A matroid given by its list of bases, each basis sorted ascending, the
/// list sorted lexicographically.
using MatroidBases = std::vector<std::vector<int>>;

/// Bases of the binary matroid represented by G (see header comment).
MatroidBases graph_to_bases(const StanleyGraph& G);

/// Inverse of graph_to_bases.  Validates that `bases` is a loopless matroid
/// on {0..k-1} (nonempty, equicardinal, exchange axiom, every element in
/// some basis) and that it arises from a Stanley graph (binary); throws
/// ValidationError naming the failed axiom and a witness otherwise.
StanleyGraph bases_to_graph(int k, MatroidBases bases);

/// Edge labels (nonzero field elements) in the order of G.edges.
using EdgeLabeling = std::vector<fel>;

/// Visits every (graph, labeling) pair on {0..k-1}: graphs in enumeration
/// order, labelings as ascending odometers over the edges (values 1..q-1).
void enumerate_labeled_graphs(
    int k, const Field& F,
    const std::function<void(const StanleyGraph&, const EdgeLabeling&)>& fn);

}  // namespace utn
