#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gdh/arith.hpp"
#include "gdh/qforms.hpp"
#include "support/oracles.hpp"

using namespace gdh;
using namespace gdh::qforms;

TEST_CASE("E2 coefficients") {
  auto e2 = e2_series(6);
  CHECK(e2.coeff(0) == 1);
  CHECK(e2.coeff(1) == -24);
  CHECK(e2.coeff(4) == -168);
}

TEST_CASE("cusp counts and widths") {
  auto c1 = cusps(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].width == 1);
  for (long p : {2L, 3L, 5L, 7L}) {
    auto cp = cusps(p);
    REQUIRE(cp.size() == 2);
    std::multiset<long> widths;
    for (auto& s : cp) widths.insert(s.width);
    CHECK(widths == std::multiset<long>{1, p});
  }
  auto c12 = cusps(12);
  REQUIRE(c12.size() == 6);
  std::multiset<long> w12;
  for (auto& s : c12) w12.insert(s.width);
  CHECK(w12 == std::multiset<long>{1, 1, 3, 3, 4, 12});
  for (long n = 2; n <= 60; ++n) {
    auto cs = cusps(n);
    long eps = 0;
    for (long c : arith::divisors(n)) eps += arith::euler_phi(std::gcd(c, n / c));
    CHECK(static_cast<long>(cs.size()) == eps);
    long total = 0;
    for (auto& s : cs) {
      total += s.width;
      CHECK(std::gcd(s.a, s.c) == 1);
    }
    CHECK(total == arith::mult_functions(n).psi);
  }
}

TEST_CASE("special Eisenstein series constant terms") {
  CHECK(f_special(2, 4).coeff(0) == -2);
  CHECK(f_special(6, 4).coeff(0) == -11);
  for (long n = 2; n <= 30; ++n) CHECK(f_special(n, 3).coeff(0) == 1 - arith::mult_functions(n).psi);
  CHECK_THROWS(f_special(1, 4));
}

TEST_CASE("constant term of f at every finite cusp is 1") {
  // [f|Ms](0) = 1 - (1/phi(n)) sum_k mu(n/k) (k,c)^2 for the cusp a/c != infinity
  for (long n = 2; n <= 40; ++n) {
    long phi = arith::euler_phi(n);
    for (const auto& s : cusps(n)) {
      if (s.c == n) continue;  // the cusp at infinity
      Rat v = 1;
      for (long k : arith::divisors(n)) {
        long kc = std::gcd(k, s.c);
        v -= make_rat(arith::mobius(n / k) * kc * kc, phi);
      }
      CHECK(v == 1);
    }
  }
}

TEST_CASE("lift table small levels") {
  auto t2 = lift_table(2);
  CHECK(t2.const0.at({0, 0}) == -1);
  CHECK(t2.const0.at({0, 1}) == 1);
  CHECK(t2.const0.at({1, 0}) == 1);
  CHECK(t2.fractional.at({1, 1}) == 24);
  for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(lift_table(p).f0_at_1 == -24);
  // n = 5, gamma = (1,1): r = 4/5, coefficient 24 sigma(4)/phi(5) = 42
  CHECK(lift_table(5).fractional.at({1, 1}) == 42);
  // prime case d~ = 24 sigma(p-k)/(p-1) at q(gamma) = k/p
  for (long p : {3L, 5L, 7L}) {
    auto t = lift_table(p);
    for (long i = 1; i < p; ++i)
      for (long j = 1; j < p; ++j) {
        long k = (i * j) % p;
        if (k == 0) continue;
        CHECK(t.fractional.at({i, j}) == make_rat(24, p - 1) * arith::sigma1(p - k));
      }
  }
}

TEST_CASE("f0 at 1 equals the cusp-expansion oracle") {
  for (long n = 2; n <= 30; ++n) CHECK(lift_table(n).f0_at_1 == testsupport::f0_at_1_oracle(n));
}

TEST_CASE("dtilde positivity, integrality, symmetry") {
  for (long n = 2; n <= 20; ++n) {
    long phi = arith::euler_phi(n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (is_isotropic(n, {i, j})) continue;
        Rat d = dtilde(n, {i, j});
        CHECK(d > 0);
        CHECK(is_integer(d * phi / 24));
        CHECK(d == dtilde(n, {j, i}));
      }
  }
}

TEST_CASE("d coefficients: positivity, vanishing criterion, product-form oracle") {
  for (long n = 2; n <= 20; ++n) {
    long phi = arith::euler_phi(n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (is_isotropic(n, {i, j})) continue;
        Rat d = d_coeff(n, i, j);
        CHECK(d >= 0);
        CHECK(is_integer(d * phi / 24));
        CHECK((d == 0) == d_vanishes(n, i, j));
        CHECK(d_vanishes(n, i, j) == d_vanishes(n, j, i));
        CHECK(d == testsupport::d_coeff_oracle(n, i, j));
      }
  }
  CHECK(d_coeff(2, 1, 1) == 24);
  CHECK(d_vanishes(8, 2, 2));
  CHECK(d_coeff(8, 2, 2) == 0);
  CHECK(!d_vanishes(4, 2, 3));
  // coprime first index reduces to dtilde
  for (long n = 2; n <= 15; ++n)
    for (long i = 1; i < n; ++i) {
      if (std::gcd(i, n) != 1) continue;
      for (long j = 1; j < n; ++j) {
        if (is_isotropic(n, {i, j})) continue;
        CHECK(d_coeff(n, i, j) == dtilde(n, {i, j}));
        CHECK(!d_vanishes(n, i, j));
      }
    }
}

TEST_CASE("eta^-24 expansion") {
  auto eta = eta_inverse24(4);
  CHECK(eta.coeff(-1) == 1);
  CHECK(eta.coeff(0) == 24);
  CHECK(eta.coeff(1) == 324);
}

TEST_CASE("theta of small lattices") {
  lattice::ScaledLattice zero = lattice::make_lattice(ZMat{}, 1, 3);
  auto t = theta_coset(zero, QVec(3, Rat(0)), Rat(3), 1);
  CHECK(t.coeff(0) == 1);
  CHECK(t.coeff(1) == 0);
  lattice::ScaledLattice z1 = lattice::make_lattice({{1}}, 2, 1);  // even: (v,v) = 2 v^2
  auto t2 = theta_coset(z1, {Rat(0)}, Rat(3), 1);
  CHECK(t2.coeff(0) == 1);
  CHECK(t2.coeff(1) == 2);
  CHECK(t2.coeff(2) == 0);
}

TEST_CASE("inner characters of a deep hole") {
  auto leech = lattice::leech_lattice();
  QVec h(24, Rat(0));
  h[0] = Rat(4);
  h = leech.to_reference(h);  // the A_1^24 deep hole, order 2
  auto chars = inner_character_components(leech, h, 2, Rat(1));
  CHECK(chars.at({0, 0}).coeff(-1) == 1);
  CHECK(chars.at({0, 0}).coeff(0) == 24);
  // partition of the coset: sum_j ch(1,j) = theta_{Lambda+h} eta^-24
  Rat w1 = chars.at({1, 0}).coeff(0) + chars.at({1, 1}).coeff(0);
  long norm2_in_coset = 0;
  QVec hf = leech.to_frame(h);
  for (const auto& v : lattice::enumerate_by_norm(leech, hf, Rat(2)))
    if (leech.norm(v) == 2) ++norm2_in_coset;
  CHECK(w1 == norm2_in_coset);
  // pairing vanishes and is linear in a perturbed coefficient
  auto table = lift_table(2);
  CHECK(pairing_constant_term(chars, table) == 0);
  auto perturbed = chars;
  perturbed[{0, 1}].add_to(0, 1);
  CHECK(pairing_constant_term(perturbed, table) == table.const0.at({0, 1}));
  CHECK_THROWS(inner_character_components(leech, h, 4, Rat(1)));  // wrong order
}

TEST_CASE("level 11 eigenform and the Deligne pipeline") {
  auto a = eta_product_level11(220);
  CHECK(a[0] == 1);
  CHECK(a[1] == -2);
  CHECK(a[10] == 1);
  CHECK(a[2 - 1] * a[3 - 1] == a[6 - 1]);  // multiplicativity spot check
  auto lift = prime_cusp_lift(11, a);
  CHECK(lift.f0_at_1 == make_rat(10, 11));
  CHECK(lift.fractional.at(9) == Rat(-a[2 - 1]) / 11);  // j_gamma = 11 - 9 = 2
  CHECK(deligne_check(a, 200));
  std::vector<Int> bad = {1, 100};
  CHECK(!deligne_check(bad, 2));
}
