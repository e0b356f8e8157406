#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclo/weyl.hpp"

using namespace cyclo;

namespace {

WeylElement rnd_weyl(std::mt19937_64& rng, int l, int terms, int emax) {
  WeylElement x(l);
  for (int t = 0; t < terms; ++t) {
    IntVec a(l), c(l);
    for (int i = 0; i < l; ++i) {
      a[i] = static_cast<int>(rng() % (emax + 1));
      c[i] = static_cast<int>(rng() % (emax + 1));
    }
    Rat coeff(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1);
    coeff.canonicalize();
    x.add_term({a, c}, coeff);
  }
  return x;
}

}  // namespace

TEST_CASE("defining relation and disjoint commutation") {
  int l = 2;
  WeylElement d0 = WeylElement::d(l, 0), t0 = WeylElement::t(l, 0);
  WeylElement p = weyl_multiply(d0, t0);
  WeylElement expect = WeylElement::one(l);
  expect.add_term({{1, 0}, {1, 0}}, Rat(1));  // t_0 d_0
  CHECK(p == expect);

  WeylElement t1 = WeylElement::t(l, 1), d1 = WeylElement::d(l, 1);
  WeylElement e1 = weyl_multiply(weyl_multiply(t1, d1), t1);
  WeylElement want(l);
  want.add_term({{0, 2}, {0, 1}}, Rat(1));
  want.add_term({{0, 1}, {0, 0}}, Rat(1));
  CHECK(e1 == want);  // t_1^2 d_1 + t_1

  WeylElement th0 = weyl_multiply(t0, d0);
  WeylElement th1 = weyl_multiply(t1, d1);
  CHECK(weyl_multiply(th0, th1) == weyl_multiply(th1, th0));
}

TEST_CASE("associativity on seeded random triples") {
  std::mt19937_64 rng(123457);
  for (int l : {2, 3}) {
    for (int rep = 0; rep < 100; ++rep) {
      WeylElement x = rnd_weyl(rng, l, 2, 2), y = rnd_weyl(rng, l, 2, 2),
                  z = rnd_weyl(rng, l, 2, 2);
      CHECK(weyl_multiply(weyl_multiply(x, y), z) ==
            weyl_multiply(x, weyl_multiply(y, z)));
    }
  }
}

TEST_CASE("unit") {
  std::mt19937_64 rng(5);
  WeylElement x = rnd_weyl(rng, 3, 3, 3);
  CHECK(weyl_multiply(WeylElement::one(3), x) == x);
  CHECK(weyl_multiply(x, WeylElement::one(3)) == x);
}

TEST_CASE("symbol") {
  int l = 2;
  WeylElement x = weyl_multiply(WeylElement::d(l, 0), WeylElement::t(l, 0));
  // t_0 d_0 + 1 -> u
  CommPoly s = weyl_symbol(x);
  CHECK(s.size() == 1);
  CHECK(s.begin()->first == CommMonomial{1, {0, 0}, {0, 0}});

  CHECK(weyl_symbol(WeylElement::t(l, 0, 2)).begin()->first ==
        CommMonomial{0, {2, 0}, {0, 0}});

  WeylElement y = WeylElement::monomial(l, {0, 0}, {1, 1});
  y += WeylElement::t(l, 0);
  CommPoly sy = weyl_symbol(y);
  CHECK(sy.size() == 1);
  CHECK(sy.begin()->first == CommMonomial{0, {0, 0}, {1, 1}});

  CHECK_THROWS_AS(weyl_symbol(WeylElement(2)), std::invalid_argument);
}

TEST_CASE("symbol multiplicativity on monomials") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    int l = 2 + static_cast<int>(rng() % 2);
    WeylElement x = rnd_weyl(rng, l, 1, 3), y = rnd_weyl(rng, l, 1, 3);
    if (x.is_zero() || y.is_zero()) continue;
    CommPoly lhs = weyl_symbol(weyl_multiply(x, y));
    CommPoly rhs = comm_multiply(weyl_symbol(x), weyl_symbol(y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gl weights") {
  int l = 2;
  CHECK(gl_weight(WeylElement::t(l, 0)) == IntVec{-1, 1});   // eps_1 - eps_0
  CHECK(gl_weight(WeylElement::d(l, 1)) == IntVec{-1, 1});
  CHECK(gl_weight(CommMonomial{1, {0, 0}, {0, 0}}) == IntVec{0, 0});
  CHECK(gl_weight(CommMonomial{0, {1, 0}, {0, 1}}) == IntVec{-2, 2});
  CHECK(gl_weight(WeylElement::t(3, 0)) == IntVec{-1, 0, 1});  // eps_2 - eps_0
  WeylElement sum = WeylElement::t(l, 0);
  sum += WeylElement::t(l, 1);
  CHECK_THROWS_AS(gl_weight(sum), std::invalid_argument);
}

TEST_CASE("gl weight is additive on products") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 50; ++rep) {
    int l = 2 + static_cast<int>(rng() % 3);
    WeylElement x = rnd_weyl(rng, l, 1, 3), y = rnd_weyl(rng, l, 1, 3);
    if (x.is_zero() || y.is_zero()) continue;
    IntVec wx = gl_weight(x), wy = gl_weight(y);
    WeylElement p = weyl_multiply(x, y);
    // every term of the product carries the same weight
    for (const auto& [m, c] : p.terms()) {
      IntVec wm = gl_weight(m);
      for (size_t i = 0; i < wm.size(); ++i) CHECK(wm[i] == wx[i] + wy[i]);
    }
  }
}

TEST_CASE("comm canonical form") {
  // (t_0 xi_1)(t_1 xi_0) = u^2
  CommMonomial a{0, {1, 0}, {0, 1}}, b{0, {0, 1}, {1, 0}};
  CHECK(comm_multiply(a, b) == CommMonomial{2, {0, 0}, {0, 0}});
  // u * t_0
  CommMonomial u{1, {0, 0}, {0, 0}}, t0{0, {1, 0}, {0, 0}};
  CHECK(comm_multiply(u, t0) == CommMonomial{1, {1, 0}, {0, 0}});
  // normalization of a non-canonical input: t_1 xi_1 -> u
  CHECK(comm_canonicalize(0, {0, 1}, {0, 1}) ==
        CommMonomial{1, {0, 0}, {0, 0}});
}

TEST_CASE("semi-invariant enumeration") {
  // weight 0, capped by total degree 4: the nine canonical monomials.
  auto all = semi_invariant_basis({0, 0}, {4, 4});
  std::vector<CommMonomial> nine;
  for (const auto& m : all) {
    auto [r, c] = m.bidegree();
    if (r + c <= 4) nine.push_back(m);
  }
  std::set<CommMonomial> expect = {
      {0, {0, 0}, {0, 0}}, {1, {0, 0}, {0, 0}}, {2, {0, 0}, {0, 0}},
      {0, {1, 1}, {0, 0}}, {0, {0, 0}, {1, 1}}, {1, {1, 1}, {0, 0}},
      {1, {0, 0}, {1, 1}}, {0, {2, 2}, {0, 0}}, {0, {0, 0}, {2, 2}}};
  CHECK(std::set<CommMonomial>(nine.begin(), nine.end()) == expect);

  CHECK(semi_invariant_basis({-1, 1}, {1, 0}) ==
        std::vector<CommMonomial>{{0, {1, 0}, {0, 0}}});
  CHECK(semi_invariant_basis({0, 0}, {0, 0}) ==
        std::vector<CommMonomial>{{0, {0, 0}, {0, 0}}});
  CHECK(semi_invariant_basis({-1, 1}, {0, 0}).empty());
}

TEST_CASE("semi-invariant basis agrees with brute force") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 20; ++rep) {
    int l = 2 + static_cast<int>(rng() % 3);
    IntVec w(l, 0);
    int s = 0;
    for (int i = 0; i + 1 < l; ++i) {
      w[i] = static_cast<int>(rng() % 5) - 2;
      s += w[i];
    }
    w[l - 1] = -s;
    Bidegree cap{4, 4};
    auto fast = semi_invariant_basis(w, cap);
    auto brute = semi_invariant_basis_bruteforce(w, cap);
    CHECK(std::set<CommMonomial>(fast.begin(), fast.end()) ==
          std::set<CommMonomial>(brute.begin(), brute.end()));
  }
}

TEST_CASE("quotient by the cycle") {
  // l = 2, weight 0: survivors are 1, u, X^n, u X^n (u^2 = cycle * X dies).
  auto basis = semi_invariant_basis({0, 0}, {8, 8});
  auto surv = quotient_basis_mod_cycle(basis);
  std::set<CommMonomial> got(surv.begin(), surv.end());
  CHECK(got.count(CommMonomial{0, {0, 0}, {0, 0}}) == 1);
  CHECK(got.count(CommMonomial{1, {0, 0}, {0, 0}}) == 1);
  CHECK(got.count(CommMonomial{2, {0, 0}, {0, 0}}) == 0);  // u^2 dies
  CHECK(got.count(CommMonomial{0, {0, 0}, {1, 1}}) == 1);
  CHECK(got.count(CommMonomial{1, {0, 0}, {1, 1}}) == 1);
  CHECK(got.count(CommMonomial{0, {1, 1}, {0, 0}}) == 0);

  // count(quotient at D) = count(basis at D) - count(basis at D - (l, 0))
  std::map<std::pair<int, int>, int> all_ct, surv_ct;
  for (const auto& m : basis) all_ct[m.bidegree()] += 1;
  for (const auto& m : surv) surv_ct[m.bidegree()] += 1;
  for (const auto& [bd, n] : all_ct) {
    auto [r, c] = bd;
    if (r > 6 || c > 6) continue;  // stay inside the closed region
    int below = all_ct.count({r - 2, c}) ? all_ct[{r - 2, c}] : 0;
    int expect = n - below;
    int got_ct = surv_ct.count(bd) ? surv_ct[bd] : 0;
    CHECK(got_ct == expect);
  }
}

TEST_CASE("canonical monomials are independent as functions") {
  // Points of the open patch: a_i nonzero, b_i = p / a_i.
  std::mt19937_64 rng(4242);
  for (int l : {2, 3}) {
    auto basis = semi_invariant_basis(IntVec(l, 0), {3, 3});
    size_t n = basis.size();
    std::vector<std::vector<Rat>> rows(n);
    size_t npts = n + 4;
    std::vector<RatVec> pts;
    std::vector<Rat> ps;
    for (size_t k = 0; k < npts; ++k) {
      RatVec a(l);
      for (auto& x : a) {
        x = Rat(static_cast<long>(rng() % 7) + 1,
                static_cast<long>(rng() % 5) + 1);
        x.canonicalize();
      }
      pts.push_back(a);
      Rat p(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 3) + 1);
      p.canonicalize();
      ps.push_back(p);
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < npts; ++k)
        rows[i].push_back(comm_eval(basis[i], pts[k], ps[k]));
    // exact row rank
    size_t rank = 0;
    for (size_t col = 0; col < npts && rank < n; ++col) {
      size_t piv = rank;
      while (piv < n && rows[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(rows[piv], rows[rank]);
      for (size_t r2 = rank + 1; r2 < n; ++r2) {
        if (rows[r2][col] == 0) continue;
        Rat f = rows[r2][col] / rows[rank][col];
        for (size_t c2 = col; c2 < npts; ++c2)
          rows[r2][c2] -= f * rows[rank][c2];
      }
      ++rank;
    }
    CHECK(rank == n);
  }
}

TEST_CASE("laurent monomials") {
  LaurentMonomial x{{1, 0}, {0, -1}};  // t_0 / xi_1: a chart coordinate
  CHECK(x.specialized_degree() == 2);
  CHECK(gl_weight(x) == IntVec{0, 0});
  CHECK(gl_weight(LaurentMonomial{{1, 0}, {0, 1}}) == IntVec{-2, 2});
  CHECK_THROWS_AS(laurent_to_comm(x), std::invalid_argument);
  LaurentMonomial y{{1, 1}, {0, 0}};
  CHECK(laurent_to_comm(y) == CommMonomial{0, {1, 1}, {0, 0}});
  CHECK((x * x.inverse()) == LaurentMonomial::one(2));
}
