#pragma once

// Exact counting formulas.
//
// Everything is driven by the statistics of tight splices: for each
// nonnesting set partition lambda of {1..n} and each tight splice S on it,
// record |bind(S)| and |CR(S)| = |S| - 2|bind(S)|.  Then, with k = |CR(S)|:
//
//   * labeled Stanley graphs on a k-element ground set over F_q:
//       LG(k, q) = sum_j (q-1)^(k-j) * st_q(k, j),
//     where st_q(k, j) is the q-Stirling-style sum over (k-j)-subsets V of
//     {1..k} of prod_{v in V} (1 + q + ... + q^(i_V(v)-1)) and i_V(v) counts
//     the elements below v outside V;
//
//   * ideals of ut_n(F_q):
//       I(n, q)  =  sum_S (q-1)^|bind(S)| * LG(|CR(S)|, q);
//
//   * normal subgroups of UT_n(F_q), q = p^d:
//       N(n, p, d) = sum_S (q-1)^|bind(S)| *
//                    sum_{i=0}^{k} (-1)^(k-i) C(k,i) sum_{j=0}^{d i} gb(d i, j)_p,
//     with gb the Gaussian binomial in p.
//
// Symbolic variants return exact polynomials in r, where q = r+1 for the
// ideal count and p = r+1 for the normal-subgroup count.

#include <map>
#include <vector>

#include "utn/intpoly.hpp"
#include "utn/splice.hpp"

namespace utn {

/// Gaussian binomial [m, j] as a polynomial in the size variable
/// (division-free Pascal-style recurrence).
IntPoly gaussian_binomial(int m, int j);

/// st_q(k, j) as a polynomial in q (see header comment).
IntPoly q_stirling(int k, int j);

/// Number of labeled Stanley graphs on k ground elements, as a polynomial
/// in q.
IntPoly count_labeled_graphs_poly(int k);
BigInt count_labeled_graphs(int k, int q);

/// Multiset of (|bind(S)|, |CR(S)|) over all tight splices S on all
/// nonnesting lambda for this n, with multiplicities.
std::map<std::pair<int, int>, long long> splice_stats(int n);

/// Number of tight splices (all lambda) for this n.
long long count_tight_splices(int n);

BigInt count_ideals(int n, int q);
/// The same count as a polynomial in r = q - 1.
IntPoly count_ideals_poly(int n);

BigInt count_normal_subgroups(int n, int p, int d);
/// The same count as a polynomial in r = p - 1, for fixed extension
/// degree d.
IntPoly count_normal_subgroups_poly(int n, int d);

}  // namespace utn
