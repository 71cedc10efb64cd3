#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gdh/arith.hpp"
#include "gdh/kacvsf.hpp"
#include "gdh/verifier.hpp"

namespace {

int emit(const gdh::verifier::Report& rep, const std::string& report_file, bool quiet) {
  if (!quiet) {
    for (const auto& c : rep.cases) {
      std::cout << (c.all_pass() ? "[PASS] " : "[FAIL] ") << c.id << "\n";
      for (const auto& ch : c.checks)
        if (!ch.pass)
          std::cout << "       " << ch.name << ": expected " << ch.expected << ", got " << ch.actual
                    << "\n";
    }
    std::cout << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << " ("
              << rep.cases.size() << " cases)\n";
  }
  if (!report_file.empty()) {
    std::ofstream out(report_file);
    out << rep.to_json() << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Leech lattice orbifold dimension formulas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string fixtures_dir = gdh::fixtures::default_data_dir();
  std::string precision = "1";
  std::string report_file;
  int jobs = 1;
  bool quiet = false;
  app.add_option("--fixtures", fixtures_dir, "fixture directory");
  app.add_option("--precision", precision, "q-expansion cutoff (rational)");
  app.add_option("--jobs", jobs, "worker threads for independent cases");
  app.add_option("--report", report_file, "write a JSON report to this file");
  app.add_flag("--quiet", quiet, "suppress per-case output");

  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->require_subcommand(1);
  auto* v_leech = verify->add_subcommand("leech", "Leech lattice invariants");
  auto* v_dh = verify->add_subcommand("deep-holes", "the 23 deep-hole constructions");
  auto* v_gdh = verify->add_subcommand("gdh", "all 70 generalised deep holes");
  std::string gdh_case;
  v_gdh->add_option("--case", gdh_case, "restrict to one fixture id");
  auto* v_moon = verify->add_subcommand("moonshine", "the 38 fixed-point-free frame shapes");
  auto* v_pair = verify->add_subcommand("pairing", "inner dimension formulas from characters");
  std::string pair_case;
  v_pair->add_option("--case", pair_case, "restrict to one class-A fixture id");
  auto* v_del = verify->add_subcommand("deligne", "prime-level cusp-form pipeline");
  long del_p = 11;
  long del_max = 200;
  std::string del_form;
  v_del->add_option("--p", del_p, "prime level")->required();
  v_del->add_option("--form", del_form, "eigenform JSON file")->required();
  v_del->add_option("--max", del_max, "check |a(m)| <= sigma_0(m) sqrt(m) for m <= max");

  auto* compute = app.add_subcommand("compute", "print individual quantities");
  compute->require_subcommand(1);
  auto* c_coeffs = compute->add_subcommand("coeffs", "c_n / xi_n coefficient tables");
  long coeff_n = 0;
  c_coeffs->add_option("--n", coeff_n, "level")->required();
  auto* c_vsf = compute->add_subcommand("vsf", "very strange formula data");
  std::string vsf_algebra;
  std::string vsf_s;
  c_vsf->add_option("--algebra", vsf_algebra, "simple algebra, e.g. E8 or A2")->required();
  c_vsf->add_option("--s", vsf_s, "comma-separated Kac coordinates s0,...,sl")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_coeffs->parsed()) {
      auto t = gdh::arith::c_xi_coeffs(coeff_n);
      auto oracle = gdh::arith::c_coeffs_oracle(coeff_n);
      std::cout << "c_" << coeff_n << ":";
      for (auto& [m, v] : t.c.values) std::cout << " " << m << ":" << v.get_str();
      std::cout << "\nxi_" << coeff_n << ":";
      for (auto& [m, v] : t.xi.values) std::cout << " " << m << ":" << v.get_str();
      std::cout << "\noracle agrees: " << (oracle.values == t.c.values ? "yes" : "NO") << "\n";
      return oracle.values == t.c.values ? 0 : 1;
    }
    if (c_vsf->parsed()) {
      auto g = gdh::kacvsf::build_algebra(vsf_algebra);
      std::vector<long> s;
      std::stringstream ss(vsf_s);
      std::string tok;
      while (std::getline(ss, tok, ',')) s.push_back(std::stol(tok));
      auto coords = gdh::kacvsf::make_coords(g, s);
      auto dims = gdh::kacvsf::eigenspace_dims(g, coords);
      auto vsf = gdh::kacvsf::b_and_vsf(g, coords);
      auto avg = gdh::kacvsf::averaged_vsf(g, coords);
      std::cout << "n = " << coords.n << "\ndims =";
      for (long d : dims) std::cout << " " << d;
      std::cout << "\nB = " << vsf.b.get_str() << "\nlhs = " << vsf.lhs.get_str()
                << "\nA = " << avg.a.get_str() << "\nrhs = " << avg.rhs.get_str() << "\n";
      return (vsf.b == vsf.lhs && avg.a == avg.rhs) ? 0 : 1;
    }
    gdh::Rat prec = gdh::parse_rat(precision);
    gdh::verifier::Verifier ver(fixtures_dir, prec);
    if (v_leech->parsed()) return emit(ver.run_leech(), report_file, quiet);
    if (v_dh->parsed()) return emit(ver.run_deep_holes(jobs), report_file, quiet);
    if (v_gdh->parsed()) return emit(ver.run_gdh(gdh_case, jobs), report_file, quiet);
    if (v_moon->parsed()) return emit(ver.run_moonshine(), report_file, quiet);
    if (v_pair->parsed()) return emit(ver.run_pairing(pair_case, jobs), report_file, quiet);
    if (v_del->parsed()) {
      auto form = gdh::fixtures::load_eigenform(del_form);
      if (form.p != del_p) throw std::runtime_error("--p does not match the form file");
      gdh::verifier::Report rep;
      rep.cases.push_back(ver.check_deligne(form, del_max));
      return emit(rep, report_file, quiet);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
