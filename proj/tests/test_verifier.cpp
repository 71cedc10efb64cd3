#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdh/verifier.hpp"

using namespace gdh;
using namespace gdh::verifier;

namespace {

const Verifier& ver() {
  static Verifier v;
  return v;
}

const fixtures::GdhFixture& by_id(const std::string& id) {
  for (const auto& f : ver().fixture_set().gdh)
    if (f.id == id) return f;
  throw std::runtime_error("missing fixture " + id);
}

}  // namespace

TEST_CASE("fixture sets load and validate") {
  const auto& fs = ver().fixture_set();
  CHECK(fs.gdh.size() == 70);
  CHECK(fs.frames.size() == 38);
  CHECK(fs.reps.size() == 11);
  const auto& a24 = by_id("A24");
  CHECK(a24.n == 1);
  for (const auto& x : a24.h_numer) CHECK(x == 0);
  CHECK(by_id("D1a").n == 46);
  CHECK_THROWS(fixtures::load_fixtures("/nonexistent"));
}

TEST_CASE("deep hole pipeline on the extremes") {
  CHECK(ver().check_deep_hole(by_id("A23")).all_pass());
  CHECK(ver().check_deep_hole(by_id("A22")).all_pass());
  // h in the wrong coset class: the min-norm check must fail
  auto bad = by_id("A23");
  bad.h_denom *= 3;
  auto rep = ver().check_deep_hole(bad);
  bool min_norm_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "coset_min_norm" && !c.pass) min_norm_failed = true;
  CHECK(min_norm_failed);
}

TEST_CASE("gdh pipeline on one fixture per class") {
  for (const auto& id : {"A23", "B17", "C6", "D1f", "E5", "F2", "G2", "H1", "I1", "J1b", "K1"}) {
    auto rep = ver().check_gdh(by_id(id));
    for (const auto& c : rep.checks) {
      INFO(rep.id << " " << c.name << ": expected " << c.expected << ", got " << c.actual);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("injected failure flips the gdh verdict") {
  auto bad = by_id("C6");
  bad.dim += 24;
  CHECK(!ver().check_gdh(bad).all_pass());
}

TEST_CASE("moonshine pipeline") {
  auto rep = ver().run_moonshine();
  CHECK(rep.cases.size() == 38);
  CHECK(rep.all_pass());
}

TEST_CASE("inner dimension formula for the order-2 and order-3 holes") {
  CHECK(ver().check_inner_dimension_formula(by_id("A23")).all_pass());
  CHECK(ver().check_inner_dimension_formula(by_id("A22")).all_pass());
  CHECK(ver().check_inner_dimension_formula(by_id("A24")).all_pass());
}

TEST_CASE("deligne pipeline") {
  auto form = fixtures::load_eigenform(fixtures::default_data_dir() + "/eigenform_p11.json");
  CHECK(ver().check_deligne(form, 200).all_pass());
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  auto a = ver().run_moonshine().to_json();
  auto b = ver().run_moonshine().to_json();
  CHECK(a == b);
  Report first, second;
  first.cases.push_back(ver().check_gdh(by_id("B17")));
  first.cases.push_back(ver().check_gdh(by_id("C6")));
  second.cases.push_back(ver().check_gdh(by_id("B17")));
  second.cases.push_back(ver().check_gdh(by_id("C6")));
  CHECK(first.to_json() == second.to_json());
}
