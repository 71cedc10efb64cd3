#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "gdh/lattice.hpp"
#include "gdh/linalg.hpp"

using namespace gdh;
using namespace gdh::lattice;

TEST_CASE("Golay code invariants") {
  auto code = golay_code();
  auto words = code.all_words();
  REQUIRE(words.size() == 4096);
  long octads = 0;
  int minw = 24;
  for (uint32_t w : words) {
    int wt = std::popcount(w);
    CHECK(wt % 4 == 0);  // doubly even
    if (w && wt < minw) minw = wt;
    if (wt == 8) ++octads;
    CHECK(code.contains(w));  // self-dual membership test agrees
  }
  CHECK(minw == 8);
  CHECK(octads == 759);
}

TEST_CASE("Leech lattice basics") {
  auto leech = leech_lattice();
  REQUIRE(leech.rank() == 24);
  CHECK(leech.is_even());
  CHECK(leech.gram_det() == 1);
  // (-3,1,...,1)/sqrt(8) has norm 4
  QVec w(24, Rat(1));
  w[0] = -3;
  CHECK(leech.contains(w));
  CHECK(leech.norm(w) == 4);
  // no roots
  auto small = enumerate_by_norm(leech, QVec(24, Rat(0)), Rat(2));
  REQUIRE(small.size() == 1);
  CHECK(leech.norm(small[0]) == 0);
  CHECK(same_lattice(leech, dual_lattice(leech)));
}

TEST_CASE("dual lattice in low rank") {
  ScaledLattice two_z = make_lattice({{2}}, 1, 1);
  auto d = dual_lattice(two_z);
  CHECK(d.contains(d.to_frame({make_rat(1, 2)})));
  CHECK(!d.contains(d.to_frame({make_rat(1, 4)})));
  CHECK(same_lattice(two_z, dual_lattice(d)));
}

TEST_CASE("double dual is the identity on random integral lattices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    size_t r = 1 + trial % 4;
    ZMat b(r, ZVec(4, 0));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < 4; ++j) b[i][j] = static_cast<long>(rng() % 5) - 2;
    if (linalg::qrank(linalg::to_qmat(b)) != r) continue;
    auto l = make_lattice(b, 1, 4);
    CHECK(same_lattice(l, dual_lattice(dual_lattice(l))));
  }
}

TEST_CASE("enumeration in rank one") {
  ScaledLattice two_z = make_lattice({{2}}, 1, 1);
  auto vs = enumerate_by_norm(two_z, {Rat(1)}, Rat(1));
  REQUIRE(vs.size() == 2);
  CHECK(vs[0][0] == -1);
  CHECK(vs[1][0] == 1);
  CHECK_THROWS(enumerate_by_norm(two_z, {Rat(0)}, Rat(-1)));
}

TEST_CASE("enumeration count is basis independent and symmetric for 2-torsion shifts") {
  auto leech = leech_lattice();
  QVec half(24, Rat(0));
  for (int i = 0; i < 24; ++i) half[i] = make_rat(leech.basis[3][i], 2);  // 2-torsion shift
  auto vs = enumerate_by_norm(leech, half, Rat(3));
  // closed under v -> -v - 2 shift (i.e. negation of the coset)
  for (const auto& v : vs) {
    QVec m(v);
    for (auto& x : m) x = -x;
    bool found = std::binary_search(vs.begin(), vs.end(), m);
    CHECK(found);
  }
  // permuted basis gives the same count
  ScaledLattice perm = leech;
  std::reverse(perm.basis.begin(), perm.basis.end());
  std::swap(perm.basis[0], perm.basis[5]);
  CHECK(enumerate_by_norm(perm, half, Rat(3)).size() == vs.size());
}

TEST_CASE("coset minimum norms") {
  auto leech = leech_lattice();
  CHECK(coset_min_norm(leech, QVec(leech.basis[0].begin(), leech.basis[0].end())) == 0);
  QVec e1(24, Rat(0));
  e1[0] = 4;  // sqrt(2) e_1 in reference coords is (4,0,...)/sqrt8
  CHECK(coset_min_norm(leech, e1) == 2);
}

TEST_CASE("holy construction at the deepest and shallowest holes") {
  auto leech = leech_lattice();
  // d = 0 reproduces the Leech lattice
  auto l0 = holy_construction(leech, QVec(24, Rat(0)));
  CHECK(same_lattice(l0, leech));
  // the A_1^24 deep hole (sqrt2 e1)
  QVec d(24, Rat(0));
  d[0] = Rat(4);
  d = leech.to_reference(d);
  auto n = holy_construction(leech, d);
  CHECK(n.is_even());
  CHECK(n.gram_det() == 1);
  auto dec = root_system(n);
  CHECK(dec.total_roots == 48);
  REQUIRE(dec.components.size() == 24);
  for (const auto& c : dec.components) {
    CHECK(c.type == 'A');
    CHECK(c.rank == 1);
    CHECK(c.coxeter_number == 2);
  }
  CHECK(root_system(leech).total_roots == 0);
  QVec odd(24, Rat(0));
  odd[0] = make_rat(1, 3);
  CHECK_THROWS(holy_construction(leech, odd));
}

TEST_CASE("text round trip") {
  auto leech = leech_lattice();
  auto back = from_text(to_text(leech));
  CHECK(same_lattice(leech, back));
  CHECK(back.scale == leech.scale);
}
