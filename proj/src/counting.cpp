#include "utn/counting.hpp"

#include <algorithm>

namespace utn {

IntPoly gaussian_binomial(int m, int j) {
  if (j < 0 || j > m) return IntPoly();
  // [m, j] = [m-1, j-1] + x^j [m-1, j], [m, 0] = 1.
  std::vector<std::vector<IntPoly>> g(m + 1, std::vector<IntPoly>(j + 1));
  for (int a = 0; a <= m; ++a) g[a][0] = IntPoly(BigInt(1));
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= std::min(a, j); ++b) {
      g[a][b] = g[a - 1][b - 1] + IntPoly::monomial(b) * g[a - 1][b];
    }
  }
  return g[m][j];
}

IntPoly q_stirling(int k, int j) {
  if (j < 0 || j > k) return IntPoly();
  const int pick = k - j;  // size of the subset V
  IntPoly total;
  std::vector<int> v(pick);
  for (int i = 0; i < pick; ++i) v[i] = i + 1;  // V subset of {1..k}
  auto term_of = [&]() {
    IntPoly term(BigInt(1));
    for (int x : v) {
      int below_outside = 0;
      for (int w = 1; w < x; ++w) {
        if (!std::binary_search(v.begin(), v.end(), w)) ++below_outside;
      }
      // (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1); zero when i == 0.
      std::vector<BigInt> ones(below_outside, 1);
      term *= IntPoly(std::move(ones));
    }
    return term;
  };
  if (pick == 0) return IntPoly(BigInt(1));
  if (pick > k) return IntPoly();
  while (true) {
    total += term_of();
    int i = pick - 1;
    while (i >= 0 && v[i] == k - pick + i + 1) --i;
    if (i < 0) break;
    ++v[i];
    for (int t = i + 1; t < pick; ++t) v[t] = v[t - 1] + 1;
  }
  return total;
}

IntPoly count_labeled_graphs_poly(int k) {
  IntPoly q = IntPoly::variable();
  IntPoly qm1 = q - IntPoly(BigInt(1));
  IntPoly total;
  for (int j = 0; j <= k; ++j) {
    total += qm1.pow(k - j) * q_stirling(k, j);
  }
  return total;
}

BigInt count_labeled_graphs(int k, int q) {
  return count_labeled_graphs_poly(k).eval(q);
}

std::map<std::pair<int, int>, long long> splice_stats(int n) {
  std::map<std::pair<int, int>, long long> stats;
  enumerate_nnsp(n, [&](const std::vector<Edge>& lambda) {
    for (const Splice& S : enumerate_tight_splices(n, lambda)) {
      const SpliceShape shape = decompose_splice(S);
      const int bind = static_cast<int>(shape.bindings.size());
      const int cr = shape.cr_size();
      ++stats[{bind, cr}];
    }
  });
  return stats;
}

long long count_tight_splices(int n) {
  long long total = 0;
  for (const auto& [key, mult] : splice_stats(n)) total += mult;
  return total;
}

BigInt count_ideals(int n, int q) {
  BigInt total = 0;
  for (const auto& [key, mult] : splice_stats(n)) {
    const auto [bind, cr] = key;
    BigInt factor = 1;
    for (int e = 0; e < bind; ++e) factor *= q - 1;
    total += BigInt(mult) * factor * count_labeled_graphs(cr, q);
  }
  return total;
}

IntPoly count_ideals_poly(int n) {
  IntPoly q = IntPoly::variable();
  IntPoly qm1 = q - IntPoly(BigInt(1));
  IntPoly total;
  for (const auto& [key, mult] : splice_stats(n)) {
    const auto [bind, cr] = key;
    total += qm1.pow(bind) * count_labeled_graphs_poly(cr) * BigInt(mult);
  }
  // Re-express in r = q - 1, i.e. substitute q = r + 1.
  return total.shift(1);
}

namespace {

// sum_{i=0}^{k} (-1)^(k-i) C(k,i) sum_{j=0}^{d i} gb(d i, j)_p  as a
// polynomial in p: the number of F_p-subspaces of F_{p^d}^k hitting every
// coordinate line pattern required of a normal-subgroup family member.
IntPoly family_member_count_poly(int k, int d) {
  IntPoly total;
  for (int i = 0; i <= k; ++i) {
    IntPoly subspaces;
    for (int j = 0; j <= d * i; ++j) subspaces += gaussian_binomial(d * i, j);
    BigInt sign = ((k - i) % 2 == 0) ? 1 : -1;
    total += subspaces * (binomial(k, i) * sign);
  }
  return total;
}

}  // namespace

IntPoly count_normal_subgroups_poly(int n, int d) {
  if (d < 1) throw UsageError("extension degree must be positive");
  IntPoly p = IntPoly::variable();
  IntPoly qm1 = p.pow(d) - IntPoly(BigInt(1));  // q - 1 with q = p^d
  IntPoly total;
  for (const auto& [key, mult] : splice_stats(n)) {
    const auto [bind, cr] = key;
    total += qm1.pow(bind) * family_member_count_poly(cr, d) * BigInt(mult);
  }
  // Re-express in r = p - 1.
  return total.shift(1);
}

BigInt count_normal_subgroups(int n, int p, int d) {
  if (!is_prime(p)) {
    throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  }
  return count_normal_subgroups_poly(n, d).eval(p - 1);
}

}  // namespace utn
