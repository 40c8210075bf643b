// Copyright 2026 The qsc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver over the qsc C API. Exit codes: 0 = success, 1 = a
// checked property was violated (form inequality, Schur bound, refinement or
// residual tolerance), 2 = bad input (flags, files, parse errors).

#include <qsc/qsc.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

[[noreturn]] void fail_input(const std::string& message) {
  std::cerr << "error: " << message << std::endl;
  std::exit(2);
}

void check(qsc_status status) {
  if (status != QSC_OK) fail_input(qsc_last_error());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(value))
    fail_input(what + ": not a finite number: \"" + text + "\"");
  return value;
}

long long parse_int(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    fail_input(what + ": not an integer: \"" + text + "\"");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

// "re:im,re:im,..." inline, "@path" for a vector file, "" for length zero.
std::vector<double> parse_noise_vector(const std::string& text, int expected,
                                       const std::string& flag) {
  std::vector<double> out;
  if (!text.empty() && text[0] == '@') {
    double* data = nullptr;
    int64_t len = 0;
    check(qsc_vector_load(text.c_str() + 1, &data, &len));
    out.assign(data, data + 2 * len);
    qsc_vector_free(data);
  } else if (!text.empty()) {
    for (const std::string& token : split(text, ',')) {
      const std::vector<std::string> parts = split(token, ':');
      if (parts.empty() || parts.size() > 2)
        fail_input(flag + ": expected re or re:im, got \"" + token + "\"");
      out.push_back(parse_double(parts[0], flag));
      out.push_back(parts.size() == 2 ? parse_double(parts[1], flag) : 0.0);
    }
  }
  if (out.size() != 2 * static_cast<std::size_t>(expected))
    fail_input(flag + ": expected " + std::to_string(expected) +
               " complex entries, got " + std::to_string(out.size() / 2));
  return out;
}

using GenPtr = std::unique_ptr<qsc_generator, void (*)(qsc_generator*)>;
using MatPtr = std::unique_ptr<qsc_matrix, void (*)(qsc_matrix*)>;
using StepPtr = std::unique_ptr<qsc_step_function, void (*)(qsc_step_function*)>;

GenPtr load_generator(const std::string& path) {
  qsc_generator* g = nullptr;
  check(qsc_generator_load(path.c_str(), &g));
  return GenPtr(g, &qsc_generator_free);
}

StepPtr load_step_function(const std::string& path) {
  qsc_step_function* f = nullptr;
  check(qsc_step_function_load(path.c_str(), &f));
  return StepPtr(f, &qsc_step_function_free);
}

std::vector<double> load_state_vector(const std::string& path, int expected,
                                      const std::string& flag) {
  double* data = nullptr;
  int64_t len = 0;
  check(qsc_vector_load(path.c_str(), &data, &len));
  std::vector<double> out(data, data + 2 * len);
  qsc_vector_free(data);
  if (len != expected)
    fail_input(flag + ": vector in " + path + " has length " +
               std::to_string(len) + ", expected " + std::to_string(expected));
  return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& storage) {
  if (path == "-") return std::cout;
  storage.open(path);
  if (!storage) fail_input("cannot open output file: " + path);
  return storage;
}

struct ModelOptions {
  std::string name;
  int dim = 0;
  int dim1 = 0;
  int dim2 = 0;
  std::string lambda_spec = "sqrt";
  std::string mu_spec = "zero";
  std::string omega = "1";
  std::string coupling = "0.5";
  std::string perm1;
  std::string perm2;
  std::string k_sign = "minus";
  std::string out;
};

int run_model(const ModelOptions& opt) {
  qsc_generator* g = nullptr;
  if (opt.name == "cayley") {
    if (opt.dim <= 0) fail_input("model cayley: --dim must be >= 1");
    check(qsc_model_cayley_shift(opt.dim, &g));
  } else if (opt.name == "iho") {
    if (opt.dim <= 0) fail_input("model iho: --dim must be >= 1");
    check(qsc_model_iho(opt.dim, opt.lambda_spec.c_str(), opt.mu_spec.c_str(),
                        &g));
  } else if (opt.name == "bd") {
    if (opt.dim <= 0) fail_input("model bd: --dim must be >= 1");
    check(qsc_model_birth_death(opt.dim, opt.lambda_spec.c_str(),
                                opt.mu_spec.c_str(), &g));
  } else if (opt.name == "shg") {
    const int d1 = opt.dim1 > 0 ? opt.dim1 : opt.dim;
    const int d2 = opt.dim2 > 0 ? opt.dim2 : opt.dim;
    if (d1 <= 0 || d2 <= 0)
      fail_input("model shg: set --dim, or --dim1 and --dim2");
    int64_t* p1 = nullptr;
    int64_t* p2 = nullptr;
    int64_t l1 = 0;
    int64_t l2 = 0;
    const int64_t product = static_cast<int64_t>(d1) * d2;
    if (!opt.perm1.empty()) {
      check(qsc_permutation_load(opt.perm1.c_str(), &p1, &l1));
      if (l1 != product)
        fail_input("model shg: --perm1 has " + std::to_string(l1) +
                   " entries, expected " + std::to_string(product));
    }
    if (!opt.perm2.empty()) {
      check(qsc_permutation_load(opt.perm2.c_str(), &p2, &l2));
      if (l2 != product)
        fail_input("model shg: --perm2 has " + std::to_string(l2) +
                   " entries, expected " + std::to_string(product));
    }
    const qsc_status status = qsc_model_shg(
        d1, d2, parse_double(opt.omega, "--omega"),
        parse_double(opt.coupling, "--coupling"), p1, p2, opt.k_sign.c_str(),
        &g);
    qsc_index_array_free(p1);
    qsc_index_array_free(p2);
    check(status);
  } else {
    fail_input("unknown model \"" + opt.name +
               "\" (expected cayley, iho, bd, or shg)");
  }
  const qsc_status status = qsc_generator_save(g, opt.out.c_str());
  qsc_generator_free(g);
  check(status);
  return 0;
}

struct ValidateOptions {
  std::string in;
  std::string tol = "1e-10";
  std::string geometry = "full";
  int margin = 0;
  uint64_t seed = 0;
  std::string out = "-";
};

int run_validate(const ValidateOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  const double tol = parse_double(opt.tol, "--tol");
  char* report = nullptr;
  check(qsc_diagnostics_json(g.get(), tol, opt.seed, opt.geometry.c_str(),
                             opt.margin, &report));
  {
    std::ofstream storage;
    std::ostream& os = open_out(opt.out, storage);
    os << report << "\n";
  }
  qsc_string_free(report);
  double deficit = 0.0;
  check(qsc_max_form_deficit(g.get(), opt.geometry.c_str(), opt.margin,
                             &deficit));
  return deficit <= tol ? 0 : 1;
}

struct SemigroupOptions {
  std::string in;
  std::string c;
  std::string d;
  std::string t;
  std::string out = "-";
};

int run_semigroup(const SemigroupOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  int32_t m = 0;
  int32_t dn = 0;
  check(qsc_generator_dims(g.get(), &m, &dn));
  const std::vector<double> c = parse_noise_vector(opt.c, dn, "--c");
  const std::vector<double> d = parse_noise_vector(opt.d, dn, "--d");
  qsc_matrix* mat = nullptr;
  if (opt.t.empty()) {
    check(qsc_generator_cd(g.get(), c.data(), d.data(), &mat));
  } else {
    check(qsc_evolve_cd(g.get(), c.data(), d.data(),
                        parse_double(opt.t, "--t"), &mat));
  }
  const qsc_status status = qsc_matrix_save(mat, opt.out.c_str());
  qsc_matrix_free(mat);
  check(status);
  return 0;
}

struct ReconstructOptions {
  std::string in;
  std::string u_path;
  std::string v_path;
  std::string f_path;
  std::string g_path;
  std::string t;
  std::string tgrid;
  bool unnormalized = false;
  int64_t splits = 0;
  int nt = 0;
  std::string tol = "1e-8";
  std::string out = "-";
};

int run_reconstruct(const ReconstructOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  int32_t m = 0;
  int32_t dn = 0;
  check(qsc_generator_dims(g.get(), &m, &dn));
  const std::vector<double> u = load_state_vector(opt.u_path, m, "--u");
  const std::vector<double> v = load_state_vector(opt.v_path, m, "--v");
  const StepPtr f = load_step_function(opt.f_path);
  const StepPtr sg = load_step_function(opt.g_path);
  const int32_t normalized = opt.unnormalized ? 0 : 1;
  if (opt.t.empty() == opt.tgrid.empty())
    fail_input("reconstruct: exactly one of --t and --tgrid is required");

  if (!opt.tgrid.empty()) {
    if (opt.splits > 0 || opt.nt > 0)
      fail_input("reconstruct: --splits/--nt need a single --t");
    std::ofstream storage;
    std::ostream& os = open_out(opt.out, storage);
    os << "t,re,im\n";
    for (const std::string& token : split(opt.tgrid, ',')) {
      double re = 0.0;
      double im = 0.0;
      check(qsc_reconstruct(g.get(), u.data(), v.data(), f.get(), sg.get(),
                            token.c_str(), normalized, &re, &im));
      os << token << ',' << fmt(re) << ',' << fmt(im) << '\n';
    }
    return 0;
  }

  double re = 0.0;
  double im = 0.0;
  check(qsc_reconstruct(g.get(), u.data(), v.data(), f.get(), sg.get(),
                        opt.t.c_str(), normalized, &re, &im));
  const double tol = parse_double(opt.tol, "--tol");
  int exit_code = 0;
  std::ofstream storage;
  std::ostream& os = open_out(opt.out, storage);
  if (opt.splits <= 0 && opt.nt <= 0) {
    os << '[' << fmt(re) << ", " << fmt(im) << "]\n";
    return 0;
  }
  os << "{\n  \"element\": [" << fmt(re) << ", " << fmt(im) << ']';
  if (opt.splits > 0) {
    double diff = 0.0;
    check(qsc_refine_check(g.get(), u.data(), v.data(), f.get(), sg.get(),
                           opt.t.c_str(), normalized, opt.splits, nullptr,
                           nullptr, nullptr, nullptr, &diff));
    os << ",\n  \"refine_diff\": " << fmt(diff);
    if (diff > tol) exit_code = 1;
  }
  if (opt.nt > 0) {
    double residual = 0.0;
    check(qsc_qsde_residual(g.get(), u.data(), v.data(), f.get(), sg.get(),
                            opt.t.c_str(), opt.nt, &residual));
    os << ",\n  \"qsde_residual\": " << fmt(residual);
    if (residual > tol) exit_code = 1;
  }
  os << "\n}\n";
  return exit_code;
}

struct TrotterOptions {
  std::string in;
  std::string schedule;
  std::string c;
  std::string d;
  std::string tgrid;
  std::string out = "-";
};

int run_trotter(const TrotterOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  int32_t m = 0;
  int32_t dn = 0;
  check(qsc_generator_dims(g.get(), &m, &dn));
  std::vector<int64_t> schedule;
  for (const std::string& token : split(opt.schedule, ','))
    schedule.push_back(parse_int(token, "--schedule"));
  std::vector<double> tgrid;
  for (const std::string& token : split(opt.tgrid, ','))
    tgrid.push_back(parse_double(token, "--tgrid"));
  const std::vector<double> c = parse_noise_vector(opt.c, dn, "--c");
  const std::vector<double> d = parse_noise_vector(opt.d, dn, "--d");
  check(qsc_trotter_csv(g.get(), schedule.data(),
                        static_cast<int64_t>(schedule.size()), c.data(),
                        d.data(), tgrid.data(),
                        static_cast<int64_t>(tgrid.size()), opt.out.c_str()));
  return 0;
}

struct QdsOptions {
  std::string in;
  std::string tgrid;
  std::string tmax;
  int steps = 10;
  std::string out = "-";
  std::string dual_out;
};

int run_qds(const QdsOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  std::vector<double> times;
  if (!opt.tgrid.empty()) {
    for (const std::string& token : split(opt.tgrid, ','))
      times.push_back(parse_double(token, "--tgrid"));
  } else if (!opt.tmax.empty()) {
    if (opt.steps < 1) fail_input("qds: --steps must be >= 1");
    const double tmax = parse_double(opt.tmax, "--tmax");
    for (int k = 0; k <= opt.steps; ++k)
      times.push_back(tmax * static_cast<double>(k) /
                      static_cast<double>(opt.steps));
  } else {
    fail_input("qds: one of --tgrid or --tmax is required");
  }
  check(qsc_qds_csv(g.get(), times.data(), static_cast<int64_t>(times.size()),
                    opt.out.c_str()));
  if (!opt.dual_out.empty()) {
    qsc_generator* dual = nullptr;
    check(qsc_journe_dual(g.get(), &dual));
    const qsc_status status =
        qsc_qds_csv(dual, times.data(), static_cast<int64_t>(times.size()),
                    opt.dual_out.c_str());
    qsc_generator_free(dual);
    check(status);
  }
  return 0;
}

struct SchurOptions {
  std::string in;
  int trials = 100;
  int n_max = 3;
  std::string tmax = "1";
  std::string tol = "1e-10";
  uint64_t seed = 0;
  std::string out = "-";
};

int run_schur(const SchurOptions& opt) {
  const GenPtr g = load_generator(opt.in);
  int32_t trials = 0;
  int32_t violations = 0;
  double max_excess = 0.0;
  double min_margin = 0.0;
  check(qsc_schur_sweep(g.get(), opt.trials, opt.n_max,
                        parse_double(opt.tmax, "--tmax"),
                        parse_double(opt.tol, "--tol"), opt.seed, &trials,
                        &violations, &max_excess, &min_margin));
  std::ofstream storage;
  std::ostream& os = open_out(opt.out, storage);
  os << "{\n  \"trials\": " << trials << ",\n  \"violations\": " << violations
     << ",\n  \"max_excess\": " << fmt(max_excess)
     << ",\n  \"min_margin\": " << fmt(min_margin) << "\n}\n";
  return violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum stochastic cocycle toolkit"};
  app.set_version_flag("--version", qsc_version());
  app.require_subcommand(1);

  ModelOptions model;
  CLI::App* cmd_model =
      app.add_subcommand("model", "Write a built-in model generator file");
  cmd_model->add_option("--name", model.name,
                        "Model: cayley, iho, bd, or shg")->required();
  cmd_model->add_option("--dim", model.dim,
                        "Truncation dimension (shg: both factors)");
  cmd_model->add_option("--dim1", model.dim1, "shg: first factor dimension");
  cmd_model->add_option("--dim2", model.dim2, "shg: second factor dimension");
  cmd_model->add_option("--lambda", model.lambda_spec,
                        "Coefficient spec for lambda (iho, bd); e.g. sqrt, "
                        "zero, const:2, linear:1,0.5, table:file.json");
  cmd_model->add_option("--mu", model.mu_spec,
                        "Coefficient spec for mu (iho, bd)");
  cmd_model->add_option("--omega", model.omega,
                        "shg: pump amplitude (real, decimal string)");
  cmd_model->add_option("--coupling", model.coupling,
                        "shg: second-harmonic coupling (real, decimal string)");
  cmd_model->add_option("--perm1", model.perm1,
                        "shg: product-basis permutation file for noise 1");
  cmd_model->add_option("--perm2", model.perm2,
                        "shg: product-basis permutation file for noise 2");
  cmd_model->add_option("--k-sign", model.k_sign,
                        "shg: sign of the quadratic drift term, minus|plus");
  cmd_model->add_option("--out", model.out, "Generator file to write ('-' for "
                        "stdout)")->required();

  ValidateOptions validate;
  CLI::App* cmd_validate = app.add_subcommand(
      "validate", "Diagnostics report; exit 1 if the form inequality fails");
  cmd_validate->add_option("--in", validate.in, "Generator file")->required();
  cmd_validate->add_option("--tol", validate.tol,
                           "Deficit tolerance (decimal string)");
  cmd_validate->add_option("--geometry", validate.geometry,
                           "Interior mask: full, halfline, window, or "
                           "grid:<m1>x<m2>");
  cmd_validate->add_option("--margin", validate.margin,
                           "Interior margin in basis steps");
  cmd_validate->add_option("--seed", validate.seed,
                           "Seed for the relative-bound probes")->required();
  cmd_validate->add_option("--out", validate.out, "JSON report destination");

  SemigroupOptions semigroup;
  CLI::App* cmd_semigroup = app.add_subcommand(
      "semigroup", "Write G^{c,d}, or exp(t G^{c,d}) when --t is given");
  cmd_semigroup->add_option("--in", semigroup.in, "Generator file")->required();
  cmd_semigroup->add_option("--c", semigroup.c,
                            "Left noise vector, re:im,... or @file");
  cmd_semigroup->add_option("--d", semigroup.d,
                            "Right noise vector, re:im,... or @file");
  cmd_semigroup->add_option("--t", semigroup.t,
                            "Time in seconds (decimal string)");
  cmd_semigroup->add_option("--out", semigroup.out, "Matrix file destination");

  ReconstructOptions reconstruct;
  CLI::App* cmd_reconstruct = app.add_subcommand(
      "reconstruct",
      "Matrix elements <u e(f), V_t v e(g)> on exponential vectors");
  cmd_reconstruct->add_option("--in", reconstruct.in, "Generator file")
      ->required();
  cmd_reconstruct->add_option("--u", reconstruct.u_path,
                              "Left vector file")->required();
  cmd_reconstruct->add_option("--v", reconstruct.v_path,
                              "Right vector file")->required();
  cmd_reconstruct->add_option("--f", reconstruct.f_path,
                              "Left step-function file")->required();
  cmd_reconstruct->add_option("--g", reconstruct.g_path,
                              "Right step-function file")->required();
  cmd_reconstruct->add_option("--t", reconstruct.t,
                              "Single time (decimal string); prints [re, im]");
  cmd_reconstruct->add_option("--tgrid", reconstruct.tgrid,
                              "Comma list of times; prints CSV t,re,im");
  cmd_reconstruct->add_flag("--unnormalized", reconstruct.unnormalized,
                            "Use unnormalized exponential vectors");
  cmd_reconstruct->add_option("--splits", reconstruct.splits,
                              "Also check invariance under segment "
                              "refinement; exit 1 beyond --tol");
  cmd_reconstruct->add_option("--nt", reconstruct.nt,
                              "Also check the weak-form residual on ~nt "
                              "steps (>= 16); exit 1 beyond --tol");
  cmd_reconstruct->add_option("--tol", reconstruct.tol,
                              "Tolerance for --splits/--nt checks");
  cmd_reconstruct->add_option("--out", reconstruct.out, "Destination");

  TrotterOptions trotter;
  CLI::App* cmd_trotter = app.add_subcommand(
      "trotter", "Regularized-generator convergence table (CSV n,t,error)");
  cmd_trotter->add_option("--in", trotter.in, "Generator file")->required();
  cmd_trotter->add_option("--schedule", trotter.schedule,
                          "Comma list of regularization levels, increasing")
      ->required();
  cmd_trotter->add_option("--c", trotter.c,
                          "Left noise vector, re:im,... or @file");
  cmd_trotter->add_option("--d", trotter.d,
                          "Right noise vector, re:im,... or @file");
  cmd_trotter->add_option("--tgrid", trotter.tgrid,
                          "Comma list of times in seconds")->required();
  cmd_trotter->add_option("--out", trotter.out, "CSV destination");

  QdsOptions qds;
  CLI::App* cmd_qds = app.add_subcommand(
      "qds", "Conservativity/CP table (CSV t,defect,min_diag_defect_index,"
             "min_choi_eig)");
  cmd_qds->add_option("--in", qds.in, "Generator file")->required();
  cmd_qds->add_option("--tgrid", qds.tgrid, "Comma list of times in seconds");
  cmd_qds->add_option("--tmax", qds.tmax,
                      "Evenly spaced grid end time (with --steps)");
  cmd_qds->add_option("--steps", qds.steps,
                      "Number of grid steps for --tmax (grid has steps+1 rows)");
  cmd_qds->add_option("--out", qds.out, "CSV destination");
  cmd_qds->add_option("--dual-out", qds.dual_out,
                      "Also write the table of the time-reversal dual");

  SchurOptions schur;
  CLI::App* cmd_schur = app.add_subcommand(
      "schur", "Random Schur-product admissibility trials; exit 1 on any "
               "violation");
  cmd_schur->add_option("--in", schur.in, "Generator file")->required();
  cmd_schur->add_option("--trials", schur.trials, "Number of random trials");
  cmd_schur->add_option("--n-max", schur.n_max,
                        "Largest exponential-vector family size");
  cmd_schur->add_option("--tmax", schur.tmax,
                        "Times drawn uniformly from [0, tmax] seconds");
  cmd_schur->add_option("--tol", schur.tol, "Violation tolerance");
  cmd_schur->add_option("--seed", schur.seed, "Seed for the trials")
      ->required();
  cmd_schur->add_option("--out", schur.out, "JSON summary destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*cmd_model) return run_model(model);
  if (*cmd_validate) return run_validate(validate);
  if (*cmd_semigroup) return run_semigroup(semigroup);
  if (*cmd_reconstruct) return run_reconstruct(reconstruct);
  if (*cmd_trotter) return run_trotter(trotter);
  if (*cmd_qds) return run_qds(qds);
  if (*cmd_schur) return run_schur(schur);
  return 2;
}
