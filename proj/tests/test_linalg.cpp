#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "utn/linalg.hpp"

using namespace utn;

namespace {

Vec rand_vec(const Field& F, int m, std::mt19937_64& rng) {
  Vec v(m);
  for (auto& x : v) x = static_cast<fel>(rng() % F.q());
  return v;
}

Subspace rand_space(const Field& F, int m, int gens, std::mt19937_64& rng) {
  std::vector<Vec> g;
  for (int t = 0; t < gens; ++t) g.push_back(rand_vec(F, m, rng));
  return rre(F, m, g);
}

}  // namespace

TEST_CASE("vector arithmetic basics") {
  Field F(5);
  Vec a{1, 2, 3}, b{4, 4, 0};
  CHECK(vec_add(F, a, b) == Vec{0, 1, 3});
  CHECK(vec_sub(F, a, b) == Vec{2, 3, 3});
  CHECK(vec_scale(F, 2, a) == Vec{2, 4, 1});
  CHECK(vec_is_zero(vec_zero(3)));
  CHECK(!vec_is_zero(a));
  Vec c = a;
  vec_axpy(F, c, 3, b);  // c += 3b
  CHECK(c == Vec{3, 4, 3});
}

TEST_CASE("reduced row echelon form on frozen inputs") {
  Field F3(3);
  Subspace S = rre(F3, 2, {Vec{2, 1}});
  REQUIRE(S.dim() == 1);
  CHECK(S.rows[0] == Vec{1, 2});
  CHECK(S.pivots == std::vector<int>{0});

  Field F2(2);
  Subspace T = rre(F2, 2, {Vec{0, 1}, Vec{1, 1}});
  REQUIRE(T.dim() == 2);
  CHECK(T.rows[0] == Vec{1, 0});
  CHECK(T.rows[1] == Vec{0, 1});

  // Canonical: generator order and redundancy never change the result.
  Field F4 = Field::of_order(4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> gens;
    for (int t = 0; t < 4; ++t) gens.push_back(rand_vec(F4, 5, rng));
    Subspace A = rre(F4, 5, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front());  // redundant generator
    CHECK(A == rre(F4, 5, gens));
    // Every row reduces to zero against the space itself.
    for (const Vec& r : A.rows) CHECK(member(F4, A, r));
  }
}

TEST_CASE("zero and full spaces") {
  Field F(2);
  CHECK(zero_space(4).dim() == 0);
  CHECK(full_space(4).dim() == 4);
  CHECK(member(F, full_space(4), Vec{1, 0, 1, 1}));
  CHECK(!member(F, zero_space(4), Vec{1, 0, 0, 0}));
  CHECK(member(F, zero_space(4), vec_zero(4)));
  CHECK(contains(F, full_space(4), zero_space(4)));
}

TEST_CASE("membership, containment, sum, intersection") {
  Field F(3);
  Subspace A = rre(F, 3, {Vec{1, 0, 1}});
  Subspace B = rre(F, 3, {Vec{0, 1, 1}});
  Subspace S = space_sum(F, A, B);
  CHECK(S.dim() == 2);
  CHECK(contains(F, S, A));
  CHECK(contains(F, S, B));
  CHECK(member(F, S, Vec{1, 2, 0}));  // (1,0,1)+2(0,1,1)
  Subspace I = space_intersection(F, A, B);
  CHECK(I.dim() == 0);

  // Modular-law style dimension identity on random spaces over several
  // fields: dim A + dim B = dim(A+B) + dim(A∩B).
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 4, 9}) {
    Field Fq = Field::of_order(q);
    for (int trial = 0; trial < 25; ++trial) {
      Subspace X = rand_space(Fq, 6, 3, rng);
      Subspace Y = rand_space(Fq, 6, 3, rng);
      Subspace Sum = space_sum(Fq, X, Y);
      Subspace Int = space_intersection(Fq, X, Y);
      CHECK(X.dim() + Y.dim() == Sum.dim() + Int.dim());
      CHECK(contains(Fq, X, Int));
      CHECK(contains(Fq, Y, Int));
      CHECK(contains(Fq, Sum, X));
      CHECK(contains(Fq, Sum, Y));
      // reduce(v) == 0 exactly on members.
      Vec v = rand_vec(Fq, 6, rng);
      CHECK(vec_is_zero(reduce(Fq, Sum, v)) == member(Fq, Sum, v));
    }
  }
}

TEST_CASE("kernel of a linear map given by images") {
  Field F(3);
  // e1 -> (1,0), e2 -> (0,1), e3 -> (1,1): kernel is the line (1,1,2).
  Subspace K = kernel_of_images(F, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}, 2);
  REQUIRE(K.dim() == 1);
  CHECK(K.rows[0] == Vec{1, 1, 2});

  // Rank-nullity over random maps.
  std::mt19937_64 rng(3);
  for (int q : {2, 5}) {
    Field Fq = Field::of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      int k = 4, m = 3;
      std::vector<Vec> images;
      for (int t = 0; t < k; ++t) images.push_back(rand_vec(Fq, m, rng));
      Subspace ker = kernel_of_images(Fq, images, m);
      Subspace image = rre(Fq, m, images);
      CHECK(ker.dim() + image.dim() == k);
      // Every kernel row really maps to zero.
      for (const Vec& r : ker.rows) {
        Vec out = vec_zero(m);
        for (int t = 0; t < k; ++t) vec_axpy(Fq, out, r[t], images[t]);
        CHECK(vec_is_zero(out));
      }
    }
  }
}

TEST_CASE("subspace enumeration is complete, distinct, and ordered") {
  Field F2(2);
  std::vector<Subspace> all;
  enumerate_subspaces(F2, 2, 16, [&](const Subspace& S) { all.push_back(S); });
  CHECK(all.size() == 5);
  CHECK(all.front() == zero_space(2));
  CHECK(all.back() == full_space(2));

  all.clear();
  enumerate_subspaces(F2, 3, 16, [&](const Subspace& S) { all.push_back(S); });
  CHECK(all.size() == 16);

  // Per-dimension tallies match the closed-form counts, and no duplicates.
  for (int q : {2, 3, 4}) {
    Field Fq = Field::of_order(q);
    for (int m = 0; m <= 3; ++m) {
      std::set<std::vector<Vec>> seen;
      std::vector<int> by_dim(m + 1, 0);
      enumerate_subspaces(Fq, m, 16, [&](const Subspace& S) {
        CHECK(seen.insert(S.rows).second);
        ++by_dim[S.dim()];
      });
      for (int k = 0; k <= m; ++k)
        CHECK(static_cast<unsigned long long>(by_dim[k]) ==
              subspace_count(q, m, k));
    }
  }
  CHECK(subspace_count(2, 2, 1) == 3);
  CHECK(subspace_count(2, 4, 2) == 35);

  CHECK_THROWS_AS(enumerate_subspaces(F2, 17, 16, [](const Subspace&) {}),
                  ResourceError);
}

TEST_CASE("restriction of scalars: expand and contract") {
  Field F4 = Field::of_order(4);
  Field F2(2);
  // t has digits (0,1); t+1 has digits (1,1).
  CHECK(expand_vec(F4, Vec{2}) == Vec{0, 1});
  CHECK(expand_vec(F4, Vec{3}) == Vec{1, 1});
  CHECK(contract_vec(F4, Vec{1, 1}) == Vec{3});

  std::mt19937_64 rng(23);
  for (int q : {4, 9, 8}) {
    Field F = Field::of_order(q);
    Field Fp(F.p());
    for (int trial = 0; trial < 15; ++trial) {
      Vec v = rand_vec(F, 4, rng);
      CHECK(contract_vec(F, expand_vec(F, v)) == v);
      Subspace S = rand_space(F, 4, 2, rng);
      Subspace Sp = expand_subspace(F, Fp, S);
      CHECK(Sp.ambient == 4 * F.d());
      CHECK(Sp.dim() == F.d() * S.dim());
      CHECK(t_stable(F, Fp, Sp));
      CHECK(contract_subspace(F, Sp) == S);
      // Membership transfers along expansion.
      Vec w = rand_vec(F, 4, rng);
      CHECK(member(F, S, w) == member(Fp, Sp, expand_vec(F, w)));
    }
  }

  // An F_p-line that is not t-stable: span{1} inside F_4.
  Subspace line = rre(F2, 2, {Vec{1, 0}});
  CHECK(!t_stable(F4, F2, line));
}

TEST_CASE("quotient coordinates") {
  Field F(3);
  std::vector<Vec> transversal = {Vec{1, 0, 0}, Vec{0, 1, 0}};
  Subspace D = rre(F, 3, {Vec{0, 0, 1}});
  QuotientMap Q(F, transversal, D);
  CHECK(Q.coord_count() == 2);
  CHECK(Q.in_domain(F, Vec{2, 1, 2}));
  CHECK(Q.coords(F, Vec{2, 1, 2}) == Vec{2, 1});
  CHECK(Q.coords(F, Vec{0, 0, 2}) == Vec{0, 0});

  // Restricted domain: span{(1,1,0)} only.
  QuotientMap P(F, {Vec{1, 1, 0}}, zero_space(3));
  CHECK(P.in_domain(F, Vec{2, 2, 0}));
  CHECK(P.coords(F, Vec{2, 2, 0}) == Vec{2});
  CHECK(!P.in_domain(F, Vec{1, 0, 0}));
  CHECK_THROWS_AS(P.coords(F, Vec{1, 0, 0}), ValidationError);

  // Linearity on random members of the domain.
  std::mt19937_64 rng(5);
  Field F4 = Field::of_order(4);
  std::vector<Vec> tv = {Vec{1, 0, 0, 2}, Vec{0, 1, 3, 0}};
  Subspace D4 = rre(F4, 4, {Vec{0, 0, 1, 1}});
  QuotientMap Q4(F4, tv, D4);
  for (int trial = 0; trial < 20; ++trial) {
    fel a = static_cast<fel>(rng() % 4), b = static_cast<fel>(rng() % 4),
        c = static_cast<fel>(rng() % 4);
    Vec v = vec_scale(F4, a, tv[0]);
    vec_axpy(F4, v, b, tv[1]);
    vec_axpy(F4, v, c, D4.rows[0]);
    REQUIRE(Q4.in_domain(F4, v));
    CHECK(Q4.coords(F4, v) == Vec{a, b});
  }
}
