#pragma once

// The nilpotent Lie algebra ut_n(F_q) of strictly upper-triangular matrices:
// bracket arithmetic, supports, and the classification of its ideals.
//
// Elements are coordinate vectors over [[n]] in lexicographic order.  For a
// labeled tight splice (S, sigma) on a nonnesting lambda:
//
//   * Z(S,sigma) = { a in ut_lambda : a_{j+1,l} = sigma(<i,j|j+1,l>)*a_{i,j}
//                    for every binding }  — the upper bound of the family;
//   * D(S,sigma) = ut_{uplambda minus S}
//                  + span{ e_{i,j+1} - sigma(b)*e_{j,l} : bindings b }
//                  — the lower bound, equal to [ut_n, Z] ;
//   * b_C (per column C) = sum over arcs (i,j) of C of (product of the
//     labels of the bindings of C lying above (i,j)) * e_{i,j};
//     b_R (per row R) = e at the smallest arc of R.
//     Their images form a basis of Z/D, indexed by CR positions.
//
// An ideal with support-closure minimum lambda belongs to exactly one
// (S, sigma); inside the family, ideals correspond to labeled Stanley
// graphs on the CR index set:
//
//   ideal(S,sigma,G,tau) = span{ b_U + sum_{(U,V) in E} tau(U,V)*b_V :
//                                U a source with an out-edge or a column }
//                          + D(S,sigma).
//
// (The displayed ratio convention a_{j+1,l} = sigma * a_{i,j} is the one
// forced by the worked examples and the label-recovery lemma; see the
// project notes on the source's internally inconsistent display.)

#include <functional>
#include <vector>

#include "utn/linalg.hpp"
#include "utn/splice.hpp"
#include "utn/stanley.hpp"

namespace utn {

/// e_{(i,j)} scaled by c, as a coordinate vector.
Vec ut_unit(int n, Edge e, fel c = 1);

/// Span of the unit vectors at the given positions.
Subspace ut_space(const Field& F, int n, const std::vector<Edge>& edges);

/// [a, b] = ab - ba (strictly upper, so the result is too).
Vec bracket(const Field& F, int n, const Vec& a, const Vec& b);

std::vector<Edge> vec_support(int n, const Vec& v);
std::vector<Edge> space_support(int n, const Subspace& W);

/// True iff [e_{s,t}, x] lies in W for every position (s,t) and every RRE
/// basis vector x of W; by bilinearity this is bracket stability under all
/// of ut_n.
bool is_ideal(const Field& F, int n, const Subspace& W);

/// A tight splice together with a labeling of its bindings.
struct LabeledSplice {
  Splice S;
  SpliceShape shape;
  SpliceLabeling sigma;  // parallel to shape.bindings, values 1..q-1
};

/// Validates tightness and label count/nonzero-ness, then bundles.
LabeledSplice make_labeled_splice(const Field& F, Splice S,
                                  SpliceLabeling sigma);

Subspace build_Z(const Field& F, const LabeledSplice& LS);
Subspace build_D(const Field& F, const LabeledSplice& LS);

/// The transversal vectors b in CR position order (columns then rows).
std::vector<Vec> basis_bCR(const Field& F, const LabeledSplice& LS);

/// The full index tuple of an ideal.
struct IdealIndex {
  LabeledSplice ls;
  StanleyGraph graph;   // ground set = CR positions of ls
  EdgeLabeling tau;     // parallel to graph.edges, values 1..q-1
};

Subspace build_ideal(const Field& F, const IdealIndex& idx);

/// Family membership per the classification: W is an ideal with
/// support exactly uplambda, the spanned coordinate lines of the first
/// level are exactly the complement of nu, and W lies below Z(S,sigma).
bool in_family(const Field& F, const LabeledSplice& LS, const Subspace& W);

/// Inverse of build_ideal.  Throws ValidationError when W is not an ideal
/// or fails any step of the recovery.
IdealIndex classify_ideal(const Field& F, int n, const Subspace& W);

/// All ideals of ut_n(F_q), each exactly once: labeled tight splices in
/// enumeration order, then labeled Stanley graphs on the CR ground set.
void enumerate_ideals(
    const Field& F, int n,
    const std::function<void(const IdealIndex&, const Subspace&)>& fn);

/// Brute-force oracle, independent of the splice/matroid machinery: for
/// each nonnesting lambda, enumerates every subspace of the quotient
/// ut_lambda / ut_{2 levels up}, lifts, and keeps the bracket-stable
/// subspaces with support exactly uplambda.  limit_dim bounds the quotient
/// dimension handed to the subspace enumerator.
void oracle_enumerate_ideals(const Field& F, int n, int limit_dim,
                             const std::function<void(const Subspace&)>& fn);

}  // namespace utn
