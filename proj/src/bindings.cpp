#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gdh/arith.hpp"
#include "gdh/kacvsf.hpp"
#include "gdh/qforms.hpp"
#include "gdh/verifier.hpp"

namespace py = pybind11;
using namespace gdh;

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

py::dict coeff_tables(long n) {
  auto t = arith::c_xi_coeffs(n);
  py::dict c, xi;
  for (auto& [m, v] : t.c.values) c[py::int_(m)] = rat_str(v);
  for (auto& [m, v] : t.xi.values) xi[py::int_(m)] = rat_str(v);
  py::dict out;
  out["c"] = c;
  out["xi"] = xi;
  return out;
}

py::dict vsf(const std::string& algebra, const std::vector<long>& s) {
  auto g = kacvsf::build_algebra(algebra);
  auto coords = kacvsf::make_coords(g, s);
  auto v = kacvsf::b_and_vsf(g, coords);
  auto a = kacvsf::averaged_vsf(g, coords);
  py::dict out;
  out["n"] = coords.n;
  out["dims"] = kacvsf::eigenspace_dims(g, coords);
  out["B"] = rat_str(v.b);
  out["lhs"] = rat_str(v.lhs);
  out["A"] = rat_str(a.a);
  out["rhs"] = rat_str(a.rhs);
  return out;
}

py::dict case_to_dict(const verifier::CaseReport& c) {
  py::dict out;
  out["id"] = c.id;
  out["pass"] = c.all_pass();
  py::list checks;
  for (const auto& ch : c.checks) {
    py::dict d;
    d["name"] = ch.name;
    d["expected"] = ch.expected;
    d["actual"] = ch.actual;
    d["pass"] = ch.pass;
    checks.append(d);
  }
  out["checks"] = checks;
  return out;
}

class PyVerifier {
 public:
  explicit PyVerifier(const std::string& fixtures_dir, const std::string& precision)
      : ver_(fixtures_dir.empty() ? fixtures::default_data_dir() : fixtures_dir,
             parse_rat(precision)) {}

  py::dict leech_invariants() { return case_to_dict(ver_.check_leech()); }
  py::dict check_gdh(const std::string& id) {
    return case_to_dict(ver_.run_gdh(id).cases.at(0));
  }
  py::dict check_deep_hole(const std::string& id) {
    for (const auto& f : ver_.fixture_set().gdh)
      if (f.id == id) return case_to_dict(ver_.check_deep_hole(f));
    throw std::runtime_error("no fixture " + id);
  }
  py::dict check_pairing(const std::string& id) {
    return case_to_dict(ver_.run_pairing(id).cases.at(0));
  }
  py::list moonshine() {
    py::list out;
    for (const auto& c : ver_.run_moonshine().cases) out.append(case_to_dict(c));
    return out;
  }
  std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& f : ver_.fixture_set().gdh) ids.push_back(f.id);
    return ids;
  }

 private:
  verifier::Verifier ver_;
};

}  // namespace

PYBIND11_MODULE(_gdh, m) {
  m.doc() = "exact-arithmetic Leech lattice orbifold toolkit";
  m.def("mult_functions", [](long n) {
    auto f = arith::mult_functions(n);
    py::dict d;
    d["phi"] = f.phi;
    d["mu"] = f.mu;
    d["psi"] = f.psi;
    d["lambda_rad"] = f.lambda_rad;
    return d;
  });
  m.def("ramanujan_sum", &arith::ramanujan_sum);
  m.def("coeff_tables", &coeff_tables, py::arg("n"));
  m.def("vsf", &vsf, py::arg("algebra"), py::arg("s"));
  m.def("dtilde", [](long n, long i, long j) { return rat_str(qforms::dtilde(n, {i, j})); });
  m.def("d_coeff", [](long n, long i, long j) { return rat_str(qforms::d_coeff(n, i, j)); });
  m.def("d_vanishes", &qforms::d_vanishes);
  m.def("vacuum_anomaly", [](const std::map<long, long>& shape) {
    autgroup::CycleShape s;
    s.exponents = shape;
    return rat_str(autgroup::vacuum_anomaly(s));
  });
  py::class_<PyVerifier>(m, "Verifier")
      .def(py::init<const std::string&, const std::string&>(), py::arg("fixtures_dir") = "",
           py::arg("precision") = "1")
      .def("leech_invariants", &PyVerifier::leech_invariants)
      .def("check_gdh", &PyVerifier::check_gdh)
      .def("check_deep_hole", &PyVerifier::check_deep_hole)
      .def("check_pairing", &PyVerifier::check_pairing)
      .def("moonshine", &PyVerifier::moonshine)
      .def("fixture_ids", &PyVerifier::fixture_ids);
}
