#pragma once

#include <string>
#include <vector>

#include "gdh/fixtures.hpp"
#include "gdh/lattice.hpp"

namespace gdh::verifier {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct CaseReport {
  std::string id;
  std::vector<Check> checks;
  bool all_pass() const;
};

struct Report {
  std::vector<CaseReport> cases;
  bool all_pass() const;
  std::string to_json() const;
};

class Verifier {
 public:
  explicit Verifier(const std::string& data_dir = fixtures::default_data_dir(),
                    Rat precision = Rat(1));

  const lattice::ScaledLattice& leech() const { return leech_; }
  const fixtures::FixtureSet& fixture_set() const { return fixtures_; }

  CaseReport check_leech() const;
  CaseReport check_deep_hole(const fixtures::GdhFixture& fix) const;
  CaseReport check_gdh(const fixtures::GdhFixture& fix) const;
  CaseReport check_moonshine(const fixtures::FrameShapeFixture& fix) const;
  CaseReport check_inner_dimension_formula(const fixtures::GdhFixture& fix) const;
  CaseReport check_deligne(const fixtures::EigenformFile& form, long max_m) const;

  Report run_leech() const;
  Report run_deep_holes(int jobs = 1) const;
  Report run_gdh(const std::string& only_id = "", int jobs = 1) const;
  Report run_moonshine() const;
  Report run_pairing(const std::string& only_id = "", int jobs = 1) const;

 private:
  lattice::ScaledLattice leech_;
  fixtures::FixtureSet fixtures_;
  Rat precision_;
};

}  // namespace gdh::verifier
