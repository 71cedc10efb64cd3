#pragma once

#include <string>
#include <vector>

#include "gdh/autgroup.hpp"

namespace gdh::fixtures {

struct LieFactor {
  char family;
  long rank;
  long level;
  long mult;
};

// "A1,1^24", "D16,1 E8,1", "C^24" (abelian)
std::vector<LieFactor> parse_lie_label(const std::string& label);
long lie_label_rank(const std::string& label);

struct GdhFixture {
  std::string id;
  char cls;
  autgroup::CycleShape shape;
  std::vector<std::pair<int, int>> perm;  // (image, sign) per coordinate
  ZVec h_numer;
  long h_denom;
  long n;
  long dim;
  long rank;
  std::string lie;
  std::vector<Rat> rho;  // indexed by ascending divisors of n

  ZMat aut_matrix() const;
  QVec h_reference() const;  // numer / denom in the scaled integer frame
};

struct FrameShapeFixture {
  autgroup::CycleShape shape;
  long n;
  Rat rho_minus_one;
};

struct ClassRep {
  char cls;
  autgroup::CycleShape shape;
  std::vector<std::pair<int, int>> perm;
  ZMat aut_matrix() const;
};

struct FixtureSet {
  std::vector<GdhFixture> gdh;
  std::vector<FrameShapeFixture> frames;
  std::vector<ClassRep> reps;
};

// loads gdh_fixtures.json, frame_shapes.json, class_reps.json from `dir`
FixtureSet load_fixtures(const std::string& dir);

struct EigenformFile {
  long p;
  std::vector<Int> coeffs;  // a(1), a(2), ...
};
EigenformFile load_eigenform(const std::string& path);

std::string default_data_dir();

}  // namespace gdh::fixtures
