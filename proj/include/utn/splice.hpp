#pragma once

// Splices: pairs S = (lambda, nu) of individually valid set partitions of
// {1..n} with disjoint arc sets, drawn as a two-layer diagram, subject to
//
//   S1  every nu-arc (i,k) is witnessed by a lambda-arc (i,j) or (j,k) with
//       i < j < k (shares an endpoint and sits strictly inside);
//   S2  for every vertex pair j < k: some lambda-arc (i,j) pairs with a
//       nu-arc (i,k) if and only if some lambda-arc (k,l) pairs with a
//       nu-arc (j,l).
//
// A *binding* <i,j|k,l> records lambda-arcs (i,j),(k,l) whose endpoints are
// joined by nu-arcs (i,k),(j,l) with j < k.  The splice is *tight* when no
// arc of S lies two or more levels above lambda (equivalently: every binding
// has k = j+1).  Bindings generate equivalences on the lambda-arcs
// (*columns*) and on the nu-arcs (*rows*); the combined index set CR lists
// columns first, then rows, each ordered by smallest member arc.
//
// For nonnesting lambda there is a unique maximal tight splice on lambda;
// every tight splice on lambda selects a subset of its rows.

#include <functional>
#include <string>
#include <vector>

#include "utn/gf.hpp"
#include "utn/partitions.hpp"

namespace utn {

struct Splice {
  int n = 0;
  std::vector<Edge> lambda;  // sorted lexicographically
  std::vector<Edge> nu;      // sorted lexicographically
  friend bool operator==(const Splice&, const Splice&) = default;
};

/// <i,j|k,l>: lambda-arcs (i,j) and (k,l) bound by nu-arcs (i,k) and (j,l).
struct Binding {
  int i = 0, j = 0, k = 0, l = 0;
  friend auto operator<=>(const Binding&, const Binding&) = default;
};

std::string to_string(const Binding& b);

struct SpliceViolation {
  std::string kind;  // see validate_splice
  std::string detail;
};

/// Checks the splice axioms and (optionally) tightness; returns every
/// violation found.  Kinds: "lambda-not-partition", "nu-not-partition",
/// "overlap", "S1", "S2", "lambda-not-tight" (a lambda-arc nests two or
/// more levels above another, equivalently lambda fails to be nonnesting),
/// "nu-not-tight" (a nu-arc sits two or more levels above lambda).
std::vector<SpliceViolation> validate_splice(const Splice& S,
                                             bool require_tight);

bool is_valid_splice(const Splice& S, bool require_tight);

/// Bindings plus the column/row classes they generate.  CR positions
/// 0..cols-1 are the columns, then the rows, each class ordered by its
/// smallest arc.  Requires a valid splice (tightness not required).
struct SpliceShape {
  std::vector<Binding> bindings;            // sorted
  std::vector<std::vector<Edge>> cols;      // classes of lambda-arcs
  std::vector<std::vector<Edge>> rows;      // classes of nu-arcs
  int cr_size() const {
    return static_cast<int>(cols.size() + rows.size());
  }
  /// "C1","C2",...,"R1","R2",... in CR position order.
  std::vector<std::string> cr_labels() const;
};

SpliceShape decompose_splice(const Splice& S);

/// The unique maximal tight splice on a nonnesting lambda (nu may be empty).
Splice maximal_tight_splice(int n, const std::vector<Edge>& lambda);

/// All tight splices on a nonnesting lambda: one per subset of the maximal
/// splice's rows, in ascending row-subset-mask order (so (lambda, {}) is
/// first and the maximal splice last).
std::vector<Splice> enumerate_tight_splices(int n,
                                            const std::vector<Edge>& lambda);

/// Independent brute-force oracle for enumerate_tight_splices: tries every
/// subset of the candidate nu-arcs and keeps the valid tight splices.
/// Exponential; cross-check use only.
std::vector<Splice> enumerate_tight_splices_brute(
    int n, const std::vector<Edge>& lambda);

/// A labeling assigns each binding (in SpliceShape order) a nonzero field
/// element.
using SpliceLabeling = std::vector<fel>;

/// Visits every (tight splice, labeling) pair on the given lambda:
/// splices in enumerate_tight_splices order, labelings as an odometer over
/// the bindings with values 1..q-1 ascending.
void enumerate_labeled_splices(
    int n, const std::vector<Edge>& lambda, const Field& F,
    const std::function<void(const Splice&, const SpliceShape&,
                             const SpliceLabeling&)>& fn);

/// Visits every (lambda, tight splice, labeling) triple for the given n,
/// lambda running over all nonnesting set partitions in enumeration order.
void enumerate_all_labeled_splices(
    int n, const Field& F,
    const std::function<void(const Splice&, const SpliceShape&,
                             const SpliceLabeling&)>& fn);

}  // namespace utn
