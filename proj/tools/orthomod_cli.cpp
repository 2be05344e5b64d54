#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orthomod/json_io.hpp"

namespace {

using omod::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw omod::Error(omod::ErrorCode::Parse, "cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw omod::Error(omod::ErrorCode::Parse, path + ": " + e.what());
  }
  return j;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

int worker_cap() {
  const char* env = std::getenv("ORTHOMOD_THREADS");
  if (!env) return 0;
  int n = std::atoi(env);
  if (n < 1) throw omod::Error(omod::ErrorCode::Parameter, "ORTHOMOD_THREADS must be positive");
  return n;
}

omod::SubgroupSpec spec_from_theorem(const std::string& id, long m, long n, long N) {
  std::string t = lower(id);
  std::string family;
  if (t == "thm1b") family = "principal-siegel";
  else if (t == "thm1c") family = "siegel-nN";
  else if (t == "thm2b") family = "principal-hermitian";
  else if (t == "thm2c") family = "hermitian-nN";
  else if (t == "thm3") family = "ideal-principal";
  else if (t == "cor1") family = "quat-level";
  else if (t == "cor2") family = "wp-principal";
  else family = id;  // allow the family names directly
  return omod::parse_subgroup(family, m, n, N);
}

int run(int argc, char** argv) {
  CLI::App app{"exact lifts from degree-2 modular groups to orthogonal groups"};
  app.require_subcommand(1);

  std::string in_file, kind_str, form_name, spec_str, theorem_id;
  long m = 0, n = 0, N = 0;
  int samples = 200;
  std::uint64_t seed = 1;

  CLI::App* lift = app.add_subcommand("lift", "lift a group element to SO(S1)");
  lift->add_option("--kind", kind_str, "siegel | hermitian | quat-sp | quat-special | quat-extended");
  lift->add_option("--m", m, "field parameter (hermitian)");
  lift->add_option("--in", in_file, "input element JSON")->required();

  CLI::App* check = app.add_subcommand("check", "congruence subgroup membership");
  check->add_option("--spec", spec_str, "subgroup family name")->required();
  check->add_option("--m", m, "field parameter");
  check->add_option("--n", n, "inner level");
  check->add_option("--N", N, "level");
  check->add_option("--in", in_file, "input element JSON")->required();

  CLI::App* verify = app.add_subcommand("verify", "two-sided theorem verification");
  verify->add_option("--theorem", theorem_id, "thm1b|thm1c|thm2b|thm2c|thm3|cor1|cor2")->required();
  verify->add_option("--samples", samples, "samples per direction");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--m", m, "field parameter");
  verify->add_option("--n", n, "inner level");
  verify->add_option("--N", N, "level");

  CLI::App* enumerate = app.add_subcommand("enumerate", "automorphs of a definite form");
  enumerate->add_option("--form", form_name, "form name (e.g. hurwitz-s)")->required();
  enumerate->add_option("--m", m, "field parameter");
  enumerate->add_option("--n", n, "inner level");
  enumerate->add_option("--N", N, "level");

  CLI::App* lattice = app.add_subcommand("lattice-info", "image lattice of a Gram matrix");
  lattice->add_option("--form", form_name, "form name")->required();
  lattice->add_option("--m", m, "field parameter");
  lattice->add_option("--n", n, "inner level");
  lattice->add_option("--N", N, "level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  worker_cap();  // validated; execution is sequential

  if (lift->parsed()) {
    omod::GroupElem g = omod::group_elem_from_json(read_json_file(in_file), lower(kind_str), m);
    omod::MemberReport rep = omod::is_member(g);
    if (!rep.ok)
      throw omod::Error(omod::ErrorCode::Domain, "input is not a group member: " + rep.diagnostic);
    std::cout << omod::dump_json(omod::orth_image_json(omod::lift(g)));
    return 0;
  }
  if (check->parsed()) {
    omod::SubgroupSpec spec = spec_from_theorem(spec_str, m, n, N);
    omod::GroupElem g = omod::group_elem_from_json(
        read_json_file(in_file), omod::kind_name(omod::ambient_kind(spec)), spec.m);
    omod::InReport rep = omod::in_subgroup(spec, g);
    Json out;
    out["spec"] = omod::spec_name(spec);
    out["member"] = rep.ok;
    out["detail"] = rep.detail;
    std::cout << omod::dump_json(out);
    return rep.ok ? 0 : 1;
  }
  if (verify->parsed()) {
    omod::SubgroupSpec spec = spec_from_theorem(theorem_id, m, n, N);
    omod::VerifyReport rep = omod::verify_theorem(spec, samples, samples, seed);
    std::cout << omod::dump_json(omod::verify_report_json(rep));
    return rep.ok() ? 0 : 1;
  }
  if (enumerate->parsed()) {
    omod::EvenForm f = omod::build_form(lower(form_name), m, n, N);
    std::vector<omod::MatI> aut = omod::enumerate_aut(f);
    Json out;
    out["form"] = f.name;
    out["order"] = aut.size();
    std::cout << omod::dump_json(out);
    return 0;
  }
  if (lattice->parsed()) {
    omod::EvenForm f = omod::build_form(lower(form_name), m, n, N);
    omod::LatticeImage li = omod::z_lattice_image(f.gram);
    Json out;
    out["form"] = f.name;
    Json info = omod::lattice_image_json(li);
    for (auto& [key, val] : info.items()) out[key] = val;
    std::cout << omod::dump_json(out);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const omod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json out;
    out["error"] = e.what();
    std::cout << omod::dump_json(out);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json out;
    out["error"] = e.what();
    std::cout << omod::dump_json(out);
    return 2;
  }
}
