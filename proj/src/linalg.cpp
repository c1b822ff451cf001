#include "utn/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace utn {

Vec vec_zero(int m) { return Vec(m, 0); }

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = F.add(a[k], b[k]);
  return c;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = F.sub(a[k], b[k]);
  return c;
}

Vec vec_scale(const Field& F, fel c, const Vec& a) {
  Vec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = F.mul(c, a[k]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](fel x) { return x == 0; });
}

void vec_axpy(const Field& F, Vec& a, fel c, const Vec& b) {
  assert(a.size() == b.size());
  if (c == 0) return;
  for (size_t k = 0; k < a.size(); ++k) a[k] = F.add(a[k], F.mul(c, b[k]));
}

Subspace rre(const Field& F, int ambient, std::vector<Vec> gens) {
  Subspace S;
  S.ambient = ambient;
  for (Vec& g : gens) {
    if (static_cast<int>(g.size()) != ambient) {
      throw UsageError("row length does not match ambient dimension");
    }
    // Eliminate existing pivots from g.
    for (size_t r = 0; r < S.rows.size(); ++r) {
      fel c = g[S.pivots[r]];
      if (c != 0) vec_axpy(F, g, F.neg(c), S.rows[r]);
    }
    int piv = -1;
    for (int c = 0; c < ambient; ++c) {
      if (g[c] != 0) {
        piv = c;
        break;
      }
    }
    if (piv < 0) continue;
    Vec row = vec_scale(F, F.inv(g[piv]), g);
    // Back-substitute into earlier rows and insert in pivot order.
    for (size_t r = 0; r < S.rows.size(); ++r) {
      fel c = S.rows[r][piv];
      if (c != 0) vec_axpy(F, S.rows[r], F.neg(c), row);
    }
    auto pos = std::upper_bound(S.pivots.begin(), S.pivots.end(), piv);
    size_t idx = static_cast<size_t>(pos - S.pivots.begin());
    S.pivots.insert(pos, piv);
    S.rows.insert(S.rows.begin() + idx, std::move(row));
  }
  return S;
}

Subspace zero_space(int m) {
  Subspace S;
  S.ambient = m;
  return S;
}

Subspace full_space(int m) {
  Subspace S;
  S.ambient = m;
  for (int k = 0; k < m; ++k) {
    Vec e(m, 0);
    e[k] = 1;
    S.rows.push_back(std::move(e));
    S.pivots.push_back(k);
  }
  return S;
}

Vec reduce(const Field& F, const Subspace& S, Vec v) {
  if (static_cast<int>(v.size()) != S.ambient) {
    throw UsageError("vector length does not match ambient dimension");
  }
  for (size_t r = 0; r < S.rows.size(); ++r) {
    fel c = v[S.pivots[r]];
    if (c != 0) vec_axpy(F, v, F.neg(c), S.rows[r]);
  }
  return v;
}

bool member(const Field& F, const Subspace& S, const Vec& v) {
  return vec_is_zero(reduce(F, S, v));
}

bool contains(const Field& F, const Subspace& outer, const Subspace& inner) {
  if (outer.ambient != inner.ambient) return false;
  return std::all_of(inner.rows.begin(), inner.rows.end(),
                     [&](const Vec& v) { return member(F, outer, v); });
}

Subspace space_sum(const Field& F, const Subspace& A, const Subspace& B) {
  if (A.ambient != B.ambient) throw UsageError("subspace sum: ambient mismatch");
  std::vector<Vec> gens = A.rows;
  gens.insert(gens.end(), B.rows.begin(), B.rows.end());
  return rre(F, A.ambient, std::move(gens));
}

Subspace space_intersection(const Field& F, const Subspace& A,
                            const Subspace& B) {
  if (A.ambient != B.ambient) {
    throw UsageError("subspace intersection: ambient mismatch");
  }
  const int m = A.ambient;
  // Zassenhaus: reduce rows (a|a) for a in A and (b|0) for b in B; rows of
  // the echelon form that vanish on the left carry a basis of A ∩ B on the
  // right.
  std::vector<Vec> block;
  for (const Vec& a : A.rows) {
    Vec r(2 * m, 0);
    std::copy(a.begin(), a.end(), r.begin());
    std::copy(a.begin(), a.end(), r.begin() + m);
    block.push_back(std::move(r));
  }
  for (const Vec& b : B.rows) {
    Vec r(2 * m, 0);
    std::copy(b.begin(), b.end(), r.begin());
    block.push_back(std::move(r));
  }
  Subspace E = rre(F, 2 * m, std::move(block));
  std::vector<Vec> inter;
  for (size_t r = 0; r < E.rows.size(); ++r) {
    if (E.pivots[r] >= m) {
      inter.emplace_back(E.rows[r].begin() + m, E.rows[r].end());
    }
  }
  return rre(F, m, std::move(inter));
}

Subspace kernel_of_images(const Field& F, const std::vector<Vec>& images,
                          int m) {
  const int k = static_cast<int>(images.size());
  // Rows (images[i] | e_i); echelon rows vanishing on the left give the
  // kernel coefficients on the right.
  std::vector<Vec> block;
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(images[i].size()) != m) {
      throw UsageError("kernel_of_images: image length mismatch");
    }
    Vec r(m + k, 0);
    std::copy(images[i].begin(), images[i].end(), r.begin());
    r[m + i] = 1;
    block.push_back(std::move(r));
  }
  Subspace E = rre(F, m + k, std::move(block));
  std::vector<Vec> ker;
  for (size_t r = 0; r < E.rows.size(); ++r) {
    if (E.pivots[r] >= m) {
      ker.emplace_back(E.rows[r].begin() + m, E.rows[r].end());
    }
  }
  return rre(F, k, std::move(ker));
}

namespace {

// Visits k-subsets of {0..m-1} in lexicographic order.
void for_each_combination(int m, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k == 0) {
    fn(c);
    return;
  }
  if (k > m) return;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

void enumerate_subspaces(const Field& F, int m, int limit_dim,
                         const std::function<void(const Subspace&)>& fn) {
  if (m > limit_dim) {
    throw ResourceError(
        "subspace enumeration over an ambient space of dimension " +
        std::to_string(m) + " exceeds the configured limit of " +
        std::to_string(limit_dim) + "; raise --limit-dim to proceed");
  }
  const int q = F.q();
  for (int k = 0; k <= m; ++k) {
    for_each_combination(m, k, [&](const std::vector<int>& pivots) {
      // Free cells of the canonical form: (r, c) with c > pivots[r] and c not
      // itself a pivot column.
      std::vector<std::pair<int, int>> free_cells;
      std::vector<char> is_pivot(m, 0);
      for (int c : pivots) is_pivot[c] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < m; ++c)
          if (!is_pivot[c]) free_cells.push_back({r, c});

      Subspace S;
      S.ambient = m;
      S.pivots = pivots;
      S.rows.assign(k, Vec(m, 0));
      for (int r = 0; r < k; ++r) S.rows[r][pivots[r]] = 1;
      // Odometer over the free cells, ascending encoded value per cell.
      while (true) {
        fn(S);
        size_t cell = free_cells.size();
        while (cell > 0) {
          auto [r, c] = free_cells[cell - 1];
          if (S.rows[r][c] + 1 < q) {
            ++S.rows[r][c];
            break;
          }
          S.rows[r][c] = 0;
          --cell;
        }
        if (cell == 0) break;
      }
    });
  }
}

unsigned long long subspace_count(int q, int m, int k) {
  if (k < 0 || k > m) return 0;
  // Gaussian binomial [m choose k]_q via the division-free recurrence.
  std::vector<std::vector<unsigned long long>> g(m + 1,
                                                 std::vector<unsigned long long>(k + 1, 0));
  for (int i = 0; i <= m; ++i) g[i][0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) {
      unsigned long long qj = 1;
      for (int t = 0; t < j; ++t) qj *= static_cast<unsigned long long>(q);
      g[i][j] = g[i - 1][j - 1] + qj * g[i - 1][j];
    }
  }
  return g[m][k];
}

Vec expand_vec(const Field& F, const Vec& v) {
  const int d = F.d();
  Vec out(v.size() * d, 0);
  for (size_t c = 0; c < v.size(); ++c) {
    auto digits = F.coeffs(v[c]);
    for (int e = 0; e < d; ++e) out[c * d + e] = digits[e];
  }
  return out;
}

Vec contract_vec(const Field& F, const Vec& vp) {
  const int d = F.d();
  if (vp.size() % d != 0) {
    throw UsageError("contract_vec: length not divisible by extension degree");
  }
  Vec out(vp.size() / d, 0);
  for (size_t c = 0; c < out.size(); ++c) {
    std::vector<int> digits(vp.begin() + c * d, vp.begin() + (c + 1) * d);
    out[c] = F.from_coeffs(digits);
  }
  return out;
}

Subspace expand_subspace(const Field& F, const Field& Fp, const Subspace& S) {
  const int d = F.d();
  std::vector<Vec> gens;
  for (const Vec& row : S.rows) {
    fel scalar = 1;
    for (int e = 0; e < d; ++e) {
      gens.push_back(expand_vec(F, vec_scale(F, scalar, row)));
      if (e + 1 < d) scalar = F.mul(scalar, F.gen());
    }
  }
  return rre(Fp, S.ambient * d, std::move(gens));
}

bool t_stable(const Field& F, const Field& Fp, const Subspace& Sp) {
  if (F.d() == 1) return true;
  const fel t = F.gen();
  for (const Vec& row : Sp.rows) {
    Vec v = contract_vec(F, row);
    if (!member(Fp, Sp, expand_vec(F, vec_scale(F, t, v)))) return false;
  }
  return true;
}

Subspace contract_subspace(const Field& F, const Subspace& Sp) {
  std::vector<Vec> gens;
  gens.reserve(Sp.rows.size());
  for (const Vec& row : Sp.rows) gens.push_back(contract_vec(F, row));
  return rre(F, Sp.ambient / F.d(), std::move(gens));
}

QuotientMap::QuotientMap(const Field& F, const std::vector<Vec>& transversal,
                         const Subspace& denominator) {
  ambient_ = denominator.ambient;
  k_ = static_cast<int>(transversal.size());
  std::vector<Vec> block;
  for (int i = 0; i < k_; ++i) {
    if (static_cast<int>(transversal[i].size()) != ambient_) {
      throw UsageError("quotient map: transversal length mismatch");
    }
    Vec r(ambient_ + k_, 0);
    std::copy(transversal[i].begin(), transversal[i].end(), r.begin());
    r[ambient_ + i] = 1;
    block.push_back(std::move(r));
  }
  for (const Vec& dvec : denominator.rows) {
    Vec r(ambient_ + k_, 0);
    std::copy(dvec.begin(), dvec.end(), r.begin());
    block.push_back(std::move(r));
  }
  elim_ = rre(F, ambient_ + k_, std::move(block));
  // The transversal must be independent modulo the denominator: the combined
  // rows then have full rank on the left block, so every pivot sits left.
  for (int piv : elim_.pivots) {
    if (piv >= ambient_) {
      throw ValidationError(
          "quotient map: transversal vectors are dependent modulo the "
          "denominator subspace");
    }
  }
}

bool QuotientMap::in_domain(const Field& F, const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  Vec r(ambient_ + k_, 0);
  std::copy(v.begin(), v.end(), r.begin());
  Vec res = reduce(F, elim_, std::move(r));
  return std::all_of(res.begin(), res.begin() + ambient_,
                     [](fel x) { return x == 0; });
}

Vec QuotientMap::coords(const Field& F, const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw UsageError("quotient map: vector length mismatch");
  }
  Vec r(ambient_ + k_, 0);
  std::copy(v.begin(), v.end(), r.begin());
  Vec res = reduce(F, elim_, std::move(r));
  for (int c = 0; c < ambient_; ++c) {
    if (res[c] != 0) {
      throw ValidationError("quotient map: vector lies outside the domain");
    }
  }
  // Reducing (v|0) by rows (b_i|e_i), (d_j|0) leaves (0 | -coeffs).
  Vec coords(k_, 0);
  for (int i = 0; i < k_; ++i) coords[i] = F.neg(res[ambient_ + i]);
  return coords;
}

}  // namespace utn
