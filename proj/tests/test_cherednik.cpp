#include <doctest.h>

#include <random>
#include <set>

#include "cyclo/cherednik.hpp"

using namespace cyclo;

namespace {

Rat q(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

DeformParam lam34() { return DeformParam({q(3, 4), q(1, 4)}); }

}  // namespace

TEST_CASE("reduction basics") {
  int l = 2;
  DeformParam lam = lam34();  // lambda_bar = (-1/4, 1/4)

  // iota(e^(0)) = Theta_1 - Theta_0 reduces to the constant lambda_bar_0.
  WeylElement x = WeylElement::monomial(l, {0, 1}, {0, 1});
  x -= WeylElement::monomial(l, {1, 0}, {1, 0});
  InducedElement r = reduce_to_induced(x, lam);
  CHECK(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == IntVec{0, 0});
  CHECK(r.terms().begin()->second == Poly(q(-1, 4)));

  // t_0 d_0 -> z at shift 0.
  InducedElement z = reduce_to_induced(WeylElement::monomial(l, {1, 0}, {1, 0}), lam);
  CHECK(z.terms().begin()->second == Poly::variable());

  // t_0 -> shift e_0, polynomial 1.
  InducedElement t0 = reduce_to_induced(WeylElement::t(l, 0), lam);
  CHECK(t0.terms().begin()->first == IntVec{1, 0});
  CHECK(t0.terms().begin()->second == Poly(Rat(1)));
}

TEST_CASE("reduction is a left module map") {
  std::mt19937_64 rng(17);
  int l = 2;
  DeformParam lam = lam34();
  auto rnd = [&](int terms) {
    WeylElement x(l);
    for (int t = 0; t < terms; ++t) {
      IntVec a(l), c(l);
      for (int i = 0; i < l; ++i) {
        a[i] = static_cast<int>(rng() % 3);
        c[i] = static_cast<int>(rng() % 3);
      }
      x.add_term({a, c}, Rat(static_cast<long>(rng() % 7) - 3));
    }
    return x;
  };
  for (int rep = 0; rep < 40; ++rep) {
    WeylElement x = rnd(2), y = rnd(2);
    InducedElement lhs = reduce_to_induced(weyl_multiply(x, y), lam);
    InducedElement rhs = left_multiply(x, reduce_to_induced(y, lam));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reduction kills the left ideal") {
  int l = 3;
  DeformParam lam({q(1, 2), q(1, 3), q(1, 6)});
  std::mt19937_64 rng(99);
  for (int i = 0; i < l; ++i) {
    // iota(e^(i)) - lambda_bar_i = Theta_{i+1} - Theta_i - lambda_bar_i
    int ip = (i + 1) % l;
    WeylElement rel(l);
    IntVec a1(l, 0), c1(l, 0), a2(l, 0), c2(l, 0);
    a1[ip] = c1[ip] = 1;
    a2[i] = c2[i] = 1;
    rel.add_term({a1, c1}, Rat(1));
    rel.add_term({a2, c2}, Rat(-1));
    rel.add_term({IntVec(l, 0), IntVec(l, 0)}, -lam.lambda_bar[i]);
    for (int rep = 0; rep < 10; ++rep) {
      IntVec a(l), c(l);
      for (int k = 0; k < l; ++k) {
        a[k] = static_cast<int>(rng() % 3);
        c[k] = static_cast<int>(rng() % 3);
      }
      WeylElement y = WeylElement::monomial(l, a, c);
      CHECK(reduce_to_induced(weyl_multiply(y, rel), lam).is_zero());
    }
  }
}

TEST_CASE("lift then reduce is the identity") {
  int l = 2;
  DeformParam lam = lam34();
  InducedElement v(l, lam.lambda_bar);
  v.add_term({1, 0}, Poly::linear(q(3, 4)));
  v.add_term({-1, -2}, Poly::monomial(2, q(5, 3)));
  CHECK(reduce_to_induced(lift_induced(v), lam.lambda_bar) == v);
}

TEST_CASE("right multiplication composes across parameter shifts") {
  // v * (x y) = (v * x) * y, with the reduction vector moving by the weight
  // of the right factor at each step.
  std::mt19937_64 rng(606);
  int l = 3;
  DeformParam lam({q(1, 2), q(1, 3), q(1, 6)});
  auto rnd_monomial = [&]() {
    IntVec a(l), c(l);
    for (int i = 0; i < l; ++i) {
      a[i] = static_cast<int>(rng() % 3);
      c[i] = static_cast<int>(rng() % 3);
    }
    return WeylElement::monomial(l, a, c, q(static_cast<long>(rng() % 5) + 1));
  };
  for (int rep = 0; rep < 30; ++rep) {
    WeylElement x = rnd_monomial(), y = rnd_monomial();
    InducedElement v = reduce_to_induced(rnd_monomial(), lam);
    InducedElement once = right_multiply(v, weyl_multiply(x, y));
    InducedElement twice = right_multiply(right_multiply(v, x), y);
    CHECK(once == twice);
    // left and right actions commute
    WeylElement a = rnd_monomial();
    CHECK(left_multiply(a, right_multiply(v, x)) ==
          right_multiply(left_multiply(a, v), x));
  }
}

TEST_CASE("theta_map worked examples") {
  int l = 2;
  DeformParam lam = lam34();
  StabParam th({-1, 1});
  (void)th;

  // b = class of t_0, w = class of 1 at column 0.
  InducedElement w0 = column_cyclic_vector(lam, 0);
  CHECK(w0.terms().begin()->first == IntVec{0, 0});
  InducedElement b = reduce_to_induced(WeylElement::t(l, 0), lam);
  InducedElement img = theta_map(b, w0);
  CHECK(img.terms().size() == 1);
  CHECK(img.terms().begin()->first == IntVec{1, 0});

  // b = class of d_1, w = class of t_1 (both reduced at lambda_bar):
  // product reduces to z + lambda_bar_0 + 1 at shift 0.
  InducedElement w1 = reduce_to_induced(WeylElement::t(l, 1), lam);
  RatVec mu_b = lam.lambda_bar;
  IntVec wt = *w1.weight();
  for (int i = 0; i < l; ++i) mu_b[i] += wt[i];
  InducedElement b1 = reduce_to_induced(WeylElement::d(l, 1), mu_b);
  InducedElement r = theta_map(b1, w1);
  CHECK(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == IntVec{0, 0});
  CHECK(r.terms().begin()->second == Poly::linear(q(-1, 4) + 1));

  // ambient violation is rejected
  CHECK_THROWS_AS(theta_map(b1, w0), std::invalid_argument);
}

TEST_CASE("theta_map is independent of the lift") {
  // Add a left-ideal element of matching weight to the canonical lift of b
  // and check the product class is unchanged.
  int l = 2;
  DeformParam lam = lam34();
  InducedElement u = column_cyclic_vector(lam, 1);  // weight tau_1
  RatVec mu_b = lam.lambda_bar;                     // = mu(u) + tau_1
  InducedElement b = reduce_to_induced(WeylElement::t(l, 0), mu_b);
  InducedElement direct = theta_map(b, u);

  // perturbed lift: t_0 + y (iota(e^(0)) - mu_b_0) with weight(y) = weight(t_0)
  WeylElement rel(l);
  rel.add_term({{0, 1}, {0, 1}}, Rat(1));
  rel.add_term({{1, 0}, {1, 0}}, Rat(-1));
  rel.add_term({IntVec(l, 0), IntVec(l, 0)}, -mu_b[0]);
  WeylElement lift2 = WeylElement::t(l, 0);
  lift2 += weyl_multiply(WeylElement::t(l, 0), rel);
  CHECK(reduce_to_induced(lift2, mu_b) == b);
  InducedElement via2 =
      reduce_to_induced(weyl_multiply(lift2, lift_induced(u)), u.mu());
  CHECK(via2 == direct);
}

TEST_CASE("theta_map composes") {
  std::mt19937_64 rng(314);
  int l = 2;
  DeformParam lam = lam34();
  InducedElement w = column_cyclic_vector(lam, 1);
  for (int rep = 0; rep < 20; ++rep) {
    auto rnd_b = [&](const RatVec& mu, int maxdeg) {
      InducedElement b(l, mu);
      IntVec m{static_cast<int>(rng() % 3) - 1, 0};
      m[1] = m[0] - 1 + 2 * static_cast<int>(rng() % 2);
      // keep a genuine weight-homogeneous single term
      b.add_term(m, Poly::monomial(static_cast<int>(rng() % (maxdeg + 1)),
                                   q(static_cast<long>(rng() % 5) + 1)));
      return b;
    };
    RatVec mu1 = w.mu();
    IntVec wt = *w.weight();
    for (int i = 0; i < l; ++i) mu1[i] += wt[i];
    InducedElement b1 = rnd_b(mu1, 2);
    InducedElement inner = theta_map(b1, w);
    if (inner.is_zero()) continue;
    RatVec mu2 = inner.mu();
    IntVec wt2 = *inner.weight();
    for (int i = 0; i < l; ++i) mu2[i] += wt2[i];
    InducedElement b2 = rnd_b(mu2, 2);
    InducedElement lhs = theta_map(b2, inner);
    InducedElement prod = theta_map(b2, b1);  // product inside M
    InducedElement rhs = theta_map(prod, w);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("standard module action and kappa") {
  // kappa_i(p) = lambda_i + ... + lambda_{i+p-1} (cyclic), engine-derived.
  DeformParam lam({q(-1), q(2)});
  RatVec k0 = standard_action(lam, 0, 4);
  CHECK(k0[0] == q(-1));      // lambda_0
  CHECK(k0[1] == q(1));       // lambda_0 + lambda_1
  CHECK(k0[2] == q(0));       // lambda_0 + lambda_1 + lambda_0 = 0
  CHECK(k0[3] == q(2));

  DeformParam sym({q(1, 2), q(1, 2)});
  RatVec ks = standard_action(sym, 0, 2);
  CHECK(ks[1] == q(1));
  CHECK(ks[1] != 0);

  // all partial cyclic sums nonzero => no kappa vanishes
  DeformParam gen = lam34();
  for (int i = 0; i < 2; ++i) {
    RatVec kk = standard_action(gen, i, 8);
    for (const auto& v : kk) CHECK(v != 0);
  }
}

TEST_CASE("hom criterion") {
  DeformParam lam({q(-1), q(2)});
  HomDim h = hom_dim(lam, 0, 1);
  CHECK(h.dim == 1);
  CHECK(*h.n == 1);
  CHECK(*h.p == 3);
  CHECK(hom_dim(lam, 1, 0).dim == 0);
  DeformParam gen = lam34();
  CHECK(hom_dim(gen, 0, 1).dim == 0);
  CHECK(hom_dim(gen, 1, 0).dim == 0);
  CHECK(hom_dim(gen, 1, 1).dim == 1);
  CHECK(*hom_dim(gen, 1, 1).p == 0);
}

TEST_CASE("hom brute force agrees on a quick grid") {
  std::mt19937_64 rng(777);
  for (int l : {2, 3}) {
    for (int rep = 0; rep < 10; ++rep) {
      RatVec v(l);
      Rat s(0);
      for (auto& x : v) {
        x = Rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1);
        x.canonicalize();
        s += x;
      }
      if (s == 0) continue;
      for (auto& x : v) x /= s;
      DeformParam lam(v);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          if (i == j) continue;
          HomDim a = hom_dim(lam, i, j);
          int depth = 4 * l * ((a.n ? *a.n : 0) + 1);
          HomDim b = hom_dim_bruteforce(lam, i, j, depth);
          CHECK(a.dim == b.dim);
          if (a.dim == 1) {
            CHECK(*a.p == *b.p);
            CHECK(*a.n == *b.n);
          }
        }
    }
  }
}

TEST_CASE("column quotient graded dimensions") {
  DeformParam lam = lam34();
  auto d0 = standard_column_dims(lam, 0, 8);
  auto d1 = standard_column_dims(lam, 1, 8);
  for (int d = -8; d <= 8; ++d) {
    CHECK(d0[d] == ((d >= 0 && d % 2 == 0) ? 1 : 0));
    CHECK(d1[d] == ((d >= 1 && d % 2 == 1) ? 1 : 0));
  }
  DeformParam lam3({q(1, 2), q(1, 3), q(1, 6)});
  auto e2 = standard_column_dims(lam3, 2, 8);
  for (int d = -8; d <= 8; ++d)
    CHECK(e2[d] == ((d >= 1 && d % 3 == 1) ? 1 : 0));

  auto basis = standard_column_basis(lam3, 2, 8);
  CHECK(basis.size() == 3);  // degrees 1, 4, 7
  CHECK(basis.count(1) == 1);
  CHECK(basis.count(4) == 1);
  CHECK(basis.count(7) == 1);
  ColumnQuotient qq(lam3, 2);
  for (const auto& [d, rep] : basis) {
    CHECK(*rep.degree() == d);
    CHECK_FALSE(qq.is_zero_in_quotient(rep));
  }
}

TEST_CASE("shift image smoke test at rank 4") {
  StabParam th = theta_for_order(IntVec{2, 0, 3, 1});
  DeformParam lam = [&] {
    RatVec v(4);
    for (int i = 0; i < 4; ++i) {
      v[i] = Rat(th.theta[i], 97);
      v[i].canonicalize();
      if (i == 0) v[i] += 1;
    }
    return DeformParam(v);
  }();
  for (int pos = 1; pos <= 4; ++pos) {
    ShiftImageRecord r = shift_image(lam, th, pos);
    CHECK(r.pass);
  }
  CHECK(q_dimension(lam, th, 12).equal);
}

TEST_CASE("shift image, frozen l=2 instance") {
  DeformParam lam = lam34();
  StabParam th({-1, 1});

  // target position 1 = vertex 1: bottom degree d_1 + 1 = 2
  ShiftImageRecord r1 = shift_image(lam, th, 1);
  CHECK(r1.target_vertex == 1);
  CHECK(r1.expected_bottom == 2);
  CHECK(r1.bottom_degree == 2);
  CHECK(r1.pass);
  for (const auto& c : r1.checks) CHECK(c.pass);

  // target position 2 = vertex 0: bottom degree d_0 + 0 = -1
  ShiftImageRecord r2 = shift_image(lam, th, 2);
  CHECK(r2.target_vertex == 0);
  CHECK(r2.expected_bottom == -1);
  CHECK(r2.bottom_degree == -1);
  CHECK(r2.pass);

  // regime violations are rejected
  CHECK_THROWS_AS(shift_image(DeformParam({q(1), q(0)}), th, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(shift_image(DeformParam({q(-1), q(2)}), StabParam({1, -1}), 1),
                  std::invalid_argument);
}

TEST_CASE("shift image with larger b exercises the rescaling chain") {
  // theta = (-2, 2) has b_1 = 2, so w_1(1) and the k < l coefficient
  // identities are nontrivial.
  DeformParam lam = lam34();
  StabParam th({-2, 2});
  for (int pos = 1; pos <= 2; ++pos) {
    ShiftImageRecord r = shift_image(lam, th, pos);
    CHECK(r.pass);
    bool saw_inner = false;
    for (const auto& c : r.checks)
      if (c.claim.find("cycle*w_1(1)") != std::string::npos) saw_inner = true;
    CHECK(saw_inner);
  }
  StabParam th3({-4, 2, 2});
  DeformParam lam3({q(1, 2), q(1, 3), q(1, 6)});
  for (int pos = 1; pos <= 3; ++pos) CHECK(shift_image(lam3, th3, pos).pass);

  // Deep bottom (-9 at vertex 0) forces the order sweep past its default.
  StabParam th9({-6, 3, 3});
  ShiftImageRecord deep = shift_image(lam3, th9, theta_order(th9).position(0));
  CHECK(deep.expected_bottom == -9);
  CHECK(deep.bottom_degree == -9);
  CHECK(deep.pass);
}

TEST_CASE("shift image with a bottom above the default degree window") {
  // Rank 5: the top vertex sits at degree 14, beyond the default window of
  // 10; the sweep has to widen on its own.
  StabParam th({-1, 2, 1, 1, -3});
  RatVec v(5);
  for (int i = 0; i < 5; ++i) {
    v[i] = Rat(th.theta[i], 97);
    v[i].canonicalize();
  }
  v[0] += 1;
  DeformParam lam(v);
  ShiftImageRecord r = shift_image(lam, th, 1);
  CHECK(r.target_vertex == 1);
  CHECK(r.expected_bottom == 14);
  CHECK(r.bottom_degree == 14);
  CHECK(r.pass);
}

TEST_CASE("intertwiner element") {
  DeformParam lam = lam34();
  StabParam th({-1, 1});
  IntertwinerRecord p1 = intertwiner_element(lam, th, 1);
  CHECK(p1.pass);
  // f~_1 = t_0^{b_1} = t_0
  CHECK(p1.f_tilde == WeylElement::t(2, 0));
  IntertwinerRecord p2 = intertwiner_element(lam, th, 2);
  CHECK(p2.pass);
  CHECK(p2.f_tilde == WeylElement::d(2, 1));
}

TEST_CASE("q-dimension identity, l=2") {
  DeformParam lam = lam34();
  StabParam th({-1, 1});
  QDimensionRecord r = q_dimension(lam, th, 12);
  CHECK(r.equal);
  // closed form (q^2 + q^{-1}) sum q^{-k}: top coefficient 1
  CHECK(r.closed.coeff(r.closed.hi()) == 1);
  CHECK(r.closed.hi() == 2);
  CHECK(r.closed.coeff(1) == 1);
  CHECK(r.closed.coeff(0) == 1);
  CHECK(r.closed.coeff(-1) == 2);
  CHECK(r.closed.coeff(-2) == 2);
}

TEST_CASE("symbols of B-element lifts are semi-invariants of the weight") {
  // Filtration compatibility: gr B sits inside the chi_theta component.
  for (int l : {2, 3}) {
    for (const auto& th : alcove_representatives(l)) {
      DeformParam lam = [&] {
        RatVec v(l);
        for (int i = 0; i < l; ++i) {
          v[i] = Rat(th.theta[i], 89);
          v[i].canonicalize();
          if (i == 0) v[i] += 1;
        }
        return DeformParam(v);
      }();
      auto semi = semi_invariant_basis(th.theta, {8, 8});
      std::set<CommMonomial> allowed(semi.begin(), semi.end());
      for (int d = -4; d <= 4; ++d) {
        for (const auto& b :
             b_basis_at_degree(lam.lambda_bar, th.theta, d, 4)) {
          CommPoly sym = weyl_symbol(lift_induced(b));
          for (const auto& [mon, c] : sym) {
            auto [r, cc] = mon.bidegree();
            if (r <= 8 && cc <= 8) CHECK(allowed.count(mon) == 1);
            CHECK(gl_weight(mon) == th.theta);
          }
        }
      }
    }
  }
}

TEST_CASE("single generator per weight space") {
  // The normal form of any product stays a map shift -> one polynomial.
  std::mt19937_64 rng(8);
  DeformParam lam = lam34();
  for (int rep = 0; rep < 30; ++rep) {
    WeylElement x(2);
    IntVec a{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    IntVec c{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    x.add_term({a, c}, Rat(1));
    InducedElement v = reduce_to_induced(x, lam);
    CHECK(v.terms().size() <= 1);  // monomials reduce to a single shift
  }
}
