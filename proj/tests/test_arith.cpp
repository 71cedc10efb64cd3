#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gdh/arith.hpp"
#include "support/oracles.hpp"

using namespace gdh;
using namespace gdh::arith;

TEST_CASE("multiplicative functions at small arguments") {
  auto f1 = mult_functions(1);
  CHECK(f1.phi == 1);
  CHECK(f1.mu == 1);
  CHECK(f1.psi == 1);
  CHECK(f1.lambda_rad == 1);
  auto f6 = mult_functions(6);
  CHECK(f6.phi == 2);
  CHECK(f6.mu == 1);
  CHECK(f6.psi == 12);
  CHECK(f6.lambda_rad == 6);
  CHECK(mult_functions(12).psi == 24);
}

TEST_CASE("multiplicativity on coprime pairs") {
  for (long a = 1; a <= 100; ++a)
    for (long b = 1; b <= 100 / a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto fa = mult_functions(a), fb = mult_functions(b), fab = mult_functions(a * b);
      CHECK(fab.phi == fa.phi * fb.phi);
      CHECK(fab.mu == fa.mu * fb.mu);
      CHECK(fab.psi == fa.psi * fb.psi);
      CHECK(fab.lambda_rad == fa.lambda_rad * fb.lambda_rad);
    }
}

TEST_CASE("psi via the Jordan totient J2 = phi * psi") {
  for (long n = 1; n <= 100; ++n) {
    Int j2 = 0;
    for (long k : divisors(n)) j2 += Int(k) * k * mobius(n / k);
    CHECK(j2 == Int(mult_functions(n).psi) * euler_phi(n));
  }
}

TEST_CASE("extended sum of divisors") {
  CHECK(sigma_ext(Rat(1)) == 1);
  CHECK(sigma_ext(Rat(4)) == 7);
  CHECK(sigma_ext(make_rat(3, 2)) == 0);
  CHECK_THROWS(sigma_ext(Rat(0)));
  CHECK_THROWS(sigma_ext(Rat(-2)));
}

TEST_CASE("Ramanujan sums") {
  CHECK(ramanujan_sum(5, 1) == -1);
  CHECK(ramanujan_sum(6, 0) == 2);
  CHECK(ramanujan_sum(6, 0) == euler_phi(6));
  CHECK(ramanujan_sum(4, 2) == -2);
  for (long k = 1; k <= 12; ++k)
    for (long m = 0; m <= 12; ++m) CHECK(ramanujan_sum(k, m) == testsupport::ramanujan_oracle(k, m));
}

TEST_CASE("second Bernoulli polynomial") {
  CHECK(bernoulli2(Rat(0)) == make_rat(1, 6));
  CHECK(bernoulli2(make_rat(1, 2)) == make_rat(-1, 12));
  CHECK(bernoulli2(Rat(1)) == make_rat(1, 6));
}

TEST_CASE("c and xi coefficient tables") {
  auto t1 = c_xi_coeffs(1);
  CHECK(t1.c.at(1) == 1);
  CHECK(t1.xi.at(1) == 1);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto t = c_xi_coeffs(p);
    CHECK(t.c.at(1) == p + 1);
    CHECK(t.c.at(p) == -1);
  }
  auto t6 = c_xi_coeffs(6);
  CHECK(t6.c.at(1) == 12);
  CHECK(t6.c.at(2) == -4);
  CHECK(t6.c.at(3) == -3);
  CHECK(t6.c.at(6) == 1);
}

TEST_CASE("closed form equals the linear-system oracle") {
  for (long n = 1; n <= 60; ++n) CHECK(c_coeffs_oracle(n).values == c_xi_coeffs(n).c.values);
  CHECK(c_coeffs_oracle(46).values == c_xi_coeffs(46).c.values);
}

TEST_CASE("xi partition identities") {
  for (long n = 1; n <= 100; ++n) {
    auto xi = c_xi_coeffs(n).xi;
    Rat total = 0;
    for (long m : divisors(n)) total += xi.at(m);
    CHECK(total == (n == 1 ? 1 : 0));
    for (long t : divisors(n)) {
      Rat s = 0;
      for (long m : divisors(n)) {
        if (m % t) continue;
        long g = std::gcd(t, m / t);
        s += xi.at(m) * make_rat(euler_phi(g), g);
      }
      CHECK(s == (t == n ? 1 : 0));
    }
  }
}
