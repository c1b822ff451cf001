#pragma once

// Shared basics: error types, the coordinate set [[n]] of strictly
// upper-triangular positions, and the three partial orders on it that drive
// everything else in the library.
//
// Conventions used throughout:
//   * positions are 1-based pairs (i,j) with 1 <= i < j <= n;
//   * [[n]] is listed in lexicographic order (1,2),(1,3),...,(n-1,n);
//   * vectors over [[n]] use that lexicographic rank as the coordinate index.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace utn {

/// Bad input from a caller or the command line (CLI exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structured data that fails its axioms (malformed partition, splice,
/// matroid, non-ideal subspace, ...).  Carries a human-readable witness.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation was refused because it exceeds a configured size limit
/// (CLI exit code 3).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A strictly upper-triangular position (i,j), 1 <= i < j.
struct Edge {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of positions in [[n]].
constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic rank of e within [[n]], 0-based.
int edge_index(int n, Edge e);

/// Inverse of edge_index.
Edge edge_at(int n, int index);

/// All of [[n]] in lexicographic order.
std::vector<Edge> all_edges(int n);

/// ht(i,j) = j - i.
constexpr int height(Edge e) { return e.j - e.i; }

/// (i,j) <=_L (r,s)  iff  r <= i and j == s   (same right endpoint).
constexpr bool leq_left(Edge a, Edge b) { return b.i <= a.i && a.j == b.j; }

/// (i,j) <=_R (r,s)  iff  i == r and j <= s   (same left endpoint).
constexpr bool leq_right(Edge a, Edge b) { return a.i == b.i && a.j <= b.j; }

/// (i,j) <= (r,s)  iff  r <= i and j <= s  (interval containment order;
/// moving up-left and/or right in the matrix picture).
constexpr bool leq(Edge a, Edge b) { return b.i <= a.i && a.j <= b.j; }

/// True when a and b are comparable in the containment order.
constexpr bool comparable(Edge a, Edge b) { return leq(a, b) || leq(b, a); }

/// Renders (i,j) as "(i,j)".
std::string to_string(Edge e);

/// Renders an edge list as "{(i,j),...}".
std::string to_string(const std::vector<Edge>& edges);

/// Throws UsageError unless 1 <= e.i < e.j <= n.
void check_edge(int n, Edge e);

}  // namespace utn
