// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include <chrono>
#include <iostream>
#include <numeric>
#include <thread>

#include "gdh/arith.hpp"
#include "gdh/kacvsf.hpp"
#include "gdh/qforms.hpp"
#include "gdh/verifier.hpp"
#include "support/oracles.hpp"

using namespace gdh;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string failing_checks(const verifier::Report& rep) {
  std::string out;
  for (const auto& c : rep.cases)
    for (const auto& ch : c.checks)
      if (!ch.pass) out += c.id + "/" + ch.name + " expected " + ch.expected + " got " + ch.actual + "; ";
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

}  // namespace

int main() {
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  verifier::Verifier ver;
  Timer total;

  {  // 1: Leech lattice invariants, exact
    Timer t;
    auto rep = ver.run_leech();
    report(1, "Leech lattice: even, unimodular, rootless, 196560 norm-4 vectors", rep.all_pass(),
           failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 2: the 23 deep holes
    Timer t;
    auto rep = ver.run_deep_holes(jobs);
    report(2, "deep holes: min-norm 2, Coxeter orders, holy constructions", rep.all_pass(),
           failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 3: coefficient tables up to 500
    Timer t;
    bool ok = true;
    std::string detail;
    for (long n = 1; n <= 500 && ok; ++n) {
      auto tables = arith::c_xi_coeffs(n);
      if (arith::c_coeffs_oracle(n).values != tables.c.values) {
        ok = false;
        detail = "oracle mismatch at n=" + std::to_string(n);
      }
      Rat xsum = 0;
      for (long m : arith::divisors(n)) xsum += tables.xi.at(m);
      if (xsum != (n == 1 ? 1 : 0)) ok = false;
      for (long tt : arith::divisors(n)) {
        Rat s = 0;
        for (long m : arith::divisors(n)) {
          if (m % tt) continue;
          long g = std::gcd(tt, m / tt);
          s += tables.xi.at(m) * make_rat(arith::euler_phi(g), g);
        }
        if (s != (tt == n ? 1 : 0)) ok = false;
      }
      Int j2 = 0;
      for (long k : arith::divisors(n)) j2 += Int(k) * k * arith::mobius(n / k);
      if (j2 != Int(arith::mult_functions(n).psi) * arith::euler_phi(n)) ok = false;
    }
    report(3, "c/xi coefficients vs linear-system oracle and identities, n <= 500", ok, detail);
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 4: very strange formula, rank <= 8, n <= 8
    Timer t;
    bool ok = true;
    std::string detail;
    std::vector<kacvsf::SimpleAlgebra> algebras;
    for (long l = 1; l <= 8; ++l) algebras.push_back(kacvsf::build_algebra('A', l));
    for (long l = 2; l <= 8; ++l) algebras.push_back(kacvsf::build_algebra('B', l));
    for (long l = 3; l <= 8; ++l) algebras.push_back(kacvsf::build_algebra('C', l));
    for (long l = 4; l <= 8; ++l) algebras.push_back(kacvsf::build_algebra('D', l));
    for (long l = 6; l <= 8; ++l) algebras.push_back(kacvsf::build_algebra('E', l));
    algebras.push_back(kacvsf::build_algebra('F', 4));
    algebras.push_back(kacvsf::build_algebra('G', 2));
    std::atomic<long> checked{0};
    std::atomic<bool> okflag{true};
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t ai = next++; ai < algebras.size(); ai = next++) {
        const auto& g = algebras[ai];
        auto rho_dims = kacvsf::eigenspace_dims(g, kacvsf::sigma_rho_coords(g));
        long rho_n = kacvsf::sigma_rho_coords(g).n;
        for (long n = 1; n <= 8; ++n)
          for (const auto& s : kacvsf::coords_with_order(g, n)) {
            auto v = kacvsf::b_and_vsf(g, s);
            auto av = kacvsf::averaged_vsf(g, s);
            bool good = (v.b == v.lhs) && (av.a == av.rhs) && (v.b >= 0) && (av.a >= 0);
            if (v.b == 0) good = good && (s.n == rho_n) && (kacvsf::eigenspace_dims(g, s) == rho_dims);
            if (!good) okflag = false;
            ++checked;
          }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    ok = okflag;
    report(4, "very strange formula and averaged version, exhaustive rank <= 8, n <= 8 (" +
                  std::to_string(checked.load()) + " cases)",
           ok, detail);
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 5: Eisenstein lift tables, n <= 30
    Timer t;
    bool ok = true;
    std::string detail;
    for (long n = 2; n <= 30 && ok; ++n) {
      auto table = qforms::lift_table(n);
      if (table.f0_at_1 != testsupport::f0_at_1_oracle(n)) {
        ok = false;
        detail = "f0 cusp-sum mismatch at n=" + std::to_string(n);
        break;
      }
      long phi = arith::euler_phi(n);
      for (long i = 0; i < n && ok; ++i)
        for (long j = 0; j < n && ok; ++j) {
          if (qforms::is_isotropic(n, {i, j})) continue;
          Rat dt = table.fractional.at({i, j});
          if (!(dt > 0) || !is_integer(dt * phi / 24)) {
            ok = false;
            detail = "dtilde positivity/integrality at n=" + std::to_string(n);
          }
          Rat d = qforms::d_coeff(n, i, j);
          if ((d == 0) != qforms::d_vanishes(n, i, j) || d < 0 || !is_integer(d * phi / 24)) {
            ok = false;
            detail = "d-vanishing criterion at n=" + std::to_string(n);
          }
        }
    }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      auto table = qforms::lift_table(p);
      for (long i = 1; i < p; ++i)
        for (long j = 1; j < p; ++j) {
          long k = (i * j) % p;
          if (table.fractional.at({i, j}) != make_rat(24, p - 1) * arith::sigma1(p - k)) {
            ok = false;
            detail = "prime rest-term coefficient at p=" + std::to_string(p);
          }
        }
    }
    report(5, "Eisenstein lift tables: cusp-sum oracle, positivity, vanishing criterion, n <= 30", ok,
           detail);
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 6: inner dimension formulas from characters, all class-A fixtures
    Timer t;
    auto rep = ver.run_pairing("", jobs);
    bool ok = rep.all_pass() && rep.cases.size() == 24;
    report(6, "class-A pairing = 0 and Second Dimension Formula (24 inner cases)", ok,
           failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 7: all 70 generalised deep holes
    Timer t;
    auto rep = ver.run_gdh("", jobs);
    bool ok = rep.all_pass() && rep.cases.size() == 70;
    report(7, "70 GDH fixtures: order, type 0, rho-lists, extremality, ranks", ok, failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 8: the 38 Moonshine frame shapes
    Timer t;
    auto rep = ver.run_moonshine();
    bool ok = rep.all_pass() && rep.cases.size() == 38;
    report(8, "38 frame shapes: rho = 1 + 1/n, dimension bound 0, type 0", ok, failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  {  // 9: Deligne pipeline at p = 11
    Timer t;
    auto form = fixtures::load_eigenform(fixtures::default_data_dir() + "/eigenform_p11.json");
    auto rep_case = ver.check_deligne(form, 200);
    verifier::Report rep;
    rep.cases.push_back(rep_case);
    report(9, "level-11 eigenform: eta product, a(11)=1, Deligne bound to 200, lift values",
           rep.all_pass(), failing_checks(rep));
    std::cout << "       (" << t.seconds() << " s)\n";
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (total "
            << total.seconds() << " s)\n";
  return failures == 0 ? 0 : 1;
}
