#pragma once

// Set partitions of {1..n} encoded as arc diagrams: the partition's arc set
// contains (i,j) exactly when i < j lie in the same block with no block
// element strictly between them.  Under this encoding a set partition is the
// same thing as an edge set that is an antichain in both <=_L and <=_R
// (pairwise distinct left endpoints and pairwise distinct right endpoints),
// and a nonnesting set partition (NNSP) is additionally an antichain in the
// containment order.
//
// Upper sets live in the containment order on [[n]]; the height-raised
// variants restrict to positions at least l levels above some generator.

#include <functional>
#include <vector>

#include "utn/common.hpp"

namespace utn {

/// True when `edges` (any order, duplicates rejected) is the arc set of a
/// set partition: all left endpoints distinct and all right endpoints
/// distinct.  Validates coordinates against n.
bool is_set_partition(int n, const std::vector<Edge>& edges);

/// True when additionally no two arcs nest (antichain in containment).
bool is_nonnesting(int n, const std::vector<Edge>& edges);

/// Blocks (size >= 2) of the partition generated by the arcs, each block a
/// sorted vertex list; blocks sorted by smallest vertex.  Singleton blocks
/// are omitted — they carry no arcs.
std::vector<std::vector<int>> partition_blocks(int n,
                                               const std::vector<Edge>& arcs);

/// { f in [[n]] : f >= e for some e in `base`, ht(f) >= ht(e) + level },
/// sorted lexicographically.  level = 0 gives the plain upper set.
std::vector<Edge> upper_set(int n, const std::vector<Edge>& base, int level);

/// Minimal elements of an upward-closed family F in the containment order.
/// Throws ValidationError when F is not upward closed in [[n]].
std::vector<Edge> min_elements(int n, const std::vector<Edge>& family);

/// All nonnesting set partitions of {1..n} (as sorted arc lists), visited in
/// lexicographic order of the arc sequence; the empty partition comes first.
void enumerate_nnsp(int n, const std::function<void(const std::vector<Edge>&)>& fn);

/// Convenience: materialised enumerate_nnsp.
std::vector<std::vector<Edge>> all_nnsp(int n);

}  // namespace utn
