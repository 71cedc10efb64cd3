#include "gdh/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gdh/arith.hpp"

namespace gdh::fixtures {

using nlohmann::json;

std::vector<LieFactor> parse_lie_label(const std::string& label) {
  std::vector<LieFactor> out;
  std::istringstream is(label);
  std::string tok;
  while (is >> tok) {
    LieFactor f{'?', 0, 1, 1};
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      f.mult = std::stol(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    if (tok == "C") {  // abelian summand written C^24
      f.family = 'u';
      f.rank = 1;
      out.push_back(f);
      continue;
    }
    f.family = tok[0];
    auto comma = tok.find(',');
    if (comma == std::string::npos) {
      f.rank = std::stol(tok.substr(1));
    } else {
      f.rank = std::stol(tok.substr(1, comma - 1));
      f.level = std::stol(tok.substr(comma + 1));
    }
    out.push_back(f);
  }
  return out;
}

long lie_label_rank(const std::string& label) {
  long r = 0;
  for (const auto& f : parse_lie_label(label)) r += f.rank * f.mult;
  return r;
}

static autgroup::CycleShape shape_from_json(const json& j) {
  autgroup::CycleShape s;
  for (auto it = j.begin(); it != j.end(); ++it) s.exponents[std::stol(it.key())] = it.value().get<long>();
  return s;
}

static ZMat matrix_from_perm(const std::vector<std::pair<int, int>>& perm) {
  ZMat a(24, ZVec(24, 0));
  for (int i = 0; i < 24; ++i) a[i][perm[i].first] = perm[i].second;
  return a;
}

ZMat GdhFixture::aut_matrix() const { return matrix_from_perm(perm); }
ZMat ClassRep::aut_matrix() const { return matrix_from_perm(perm); }

QVec GdhFixture::h_reference() const {
  QVec h(24);
  for (int i = 0; i < 24; ++i) h[i] = make_rat(h_numer[i], h_denom);
  return h;
}

static json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

FixtureSet load_fixtures(const std::string& dir) {
  FixtureSet set;
  for (const auto& j : load_json(dir + "/gdh_fixtures.json")) {
    GdhFixture f;
    f.id = j.at("id").get<std::string>();
    f.cls = j.at("class").get<std::string>().at(0);
    f.shape = shape_from_json(j.at("cycle_shape"));
    for (const auto& p : j.at("perm")) f.perm.emplace_back(p[0].get<int>(), p[1].get<int>());
    for (const auto& x : j.at("h_numer")) f.h_numer.push_back(Int(x.get<long>()));
    f.h_denom = j.at("h_denom").get<long>();
    const auto& e = j.at("expected");
    f.n = e.at("n").get<long>();
    f.dim = e.at("dim").get<long>();
    f.rank = e.at("rank").get<long>();
    f.lie = e.at("lie").get<std::string>();
    for (const auto& r : e.at("rho")) f.rho.push_back(parse_rat(r.get<std::string>()));
    if (f.perm.size() != 24 || f.h_numer.size() != 24)
      throw std::runtime_error("fixture " + f.id + ": bad vector sizes");
    if (f.shape.trace_weight() != 24)
      throw std::runtime_error("fixture " + f.id + ": cycle shape weight is not 24");
    if (f.rho.size() != arith::divisors(f.n).size() || f.rho.back() != 0)
      throw std::runtime_error("fixture " + f.id + ": bad rho list");
    set.gdh.push_back(std::move(f));
  }
  for (const auto& j : load_json(dir + "/frame_shapes.json")) {
    FrameShapeFixture f;
    f.shape = shape_from_json(j.at("shape"));
    f.n = j.at("expected").at("n").get<long>();
    f.rho_minus_one = parse_rat(j.at("expected").at("rho_minus_one").get<std::string>());
    if (f.shape.trace_weight() != 24) throw std::runtime_error("frame shape weight is not 24");
    set.frames.push_back(std::move(f));
  }
  for (const auto& j : load_json(dir + "/class_reps.json")) {
    ClassRep r;
    r.cls = j.at("class").get<std::string>().at(0);
    r.shape = shape_from_json(j.at("cycle_shape"));
    for (const auto& p : j.at("perm")) r.perm.emplace_back(p[0].get<int>(), p[1].get<int>());
    set.reps.push_back(std::move(r));
  }
  if (set.gdh.size() != 70 || set.frames.size() != 38 || set.reps.size() != 11)
    throw std::runtime_error("fixture counts differ from 70/38/11");
  return set;
}

EigenformFile load_eigenform(const std::string& path) {
  json j = load_json(path);
  EigenformFile f;
  f.p = j.at("p").get<long>();
  for (const auto& x : j.at("coeffs")) f.coeffs.push_back(Int(x.get<long>()));
  return f;
}

std::string default_data_dir() {
#ifdef GDH_DATA_DIR
  return GDH_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace gdh::fixtures
