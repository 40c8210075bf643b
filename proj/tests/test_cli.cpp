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

// End-to-end checks of the command line tool: every scenario runs the real
// binary (path injected as QSC_CLI_PATH) through the shell, captures stdout
// and the exit code, and inspects the files it writes. The exit contract is
// 0 = success, 1 = a checked property failed, 2 = unusable input.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr combined
};

std::string tmp_path(const std::string& name) {
  return "/tmp/qsc_cli_test_" + name;
}

RunResult run(const std::string& args) {
  const std::string out_file = tmp_path("capture.txt");
  const std::string cmd =
      std::string(QSC_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_file.c_str());
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char ch : text)
    if (ch == '\n') ++n;
  return n;
}

// Writes the shared fixture files once per process.
struct Fixtures {
  std::string gen = tmp_path("cayley8.json");
  std::string ladder = tmp_path("iho10.json");
  std::string u = tmp_path("u.json");
  std::string f = tmp_path("f.json");
  std::string g = tmp_path("g.json");

  Fixtures() {
    REQUIRE(run("model --name cayley --dim 8 --out " + gen).exit_code == 0);
    REQUIRE(run("model --name iho --dim 10 --lambda sqrt --mu zero --out " +
                ladder)
                .exit_code == 0);
    json uj;
    uj["entries"] = json::array();
    for (int i = 0; i < 8; ++i)
      uj["entries"].push_back({i == 0 ? 1.0 : 0.0, 0.0});
    write_file(u, uj.dump());
    write_file(f,
               R"({"T": "2", "segments": [)"
               R"({"t0": "0", "value": [[0.25, -0.1]]},)"
               R"({"t0": "0.4", "value": [[-0.2, 0.15]]}]})");
    write_file(g,
               R"({"T": "1.25", "segments": [)"
               R"({"t0": "0", "value": [[0.1, 0.2]]},)"
               R"({"t0": "0.7", "value": [[0.3, -0.05]]}]})");
  }
};

const Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("version flag prints a version and exits cleanly") {
  const auto r = run("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find('.') != std::string::npos);
}

TEST_CASE("missing subcommand or unknown flags exit with the input code") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("validate --no-such-flag").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("model factories write loadable generator files") {
  const auto& fx = fixtures();
  const json gen = json::parse(read_file(fx.gen));
  CHECK(gen["h_dim"] == 8);
  CHECK(gen["noise_dim"] == 1);
  CHECK(gen.contains("blocks"));

  // Unknown model names and missing dims are input errors.
  CHECK(run("model --name warp --dim 4 --out " + tmp_path("x.json")).exit_code ==
        2);
  CHECK(run("model --name cayley --out " + tmp_path("x.json")).exit_code == 2);
}

TEST_CASE("validate accepts the isometric model and reports its diagnostics") {
  const auto& fx = fixtures();
  const std::string report = tmp_path("report.json");
  const auto r =
      run("validate --in " + fx.gen + " --seed 42 --out " + report);
  CHECK(r.exit_code == 0);
  const json rep = json::parse(read_file(report));
  CHECK(rep["verdicts"]["form_inequality"] == true);
  CHECK(rep["max_form_deficit"].get<double>() <= 1e-10);
  std::remove(report.c_str());
}

TEST_CASE("validate reports boundary-supported deficits by geometry") {
  const auto& fx = fixtures();
  const std::string rep_full = tmp_path("rep_full.json");
  const std::string rep_int = tmp_path("rep_int.json");
  // The ladder model leaks only at the truncation cut: the full-matrix report
  // records a unit-scale defect, the interior one none, and both runs exit 0
  // because the form inequality itself holds either way.
  CHECK(run("validate --in " + fx.ladder + " --seed 1 --out " + rep_full)
            .exit_code == 0);
  CHECK(run("validate --in " + fx.ladder +
            " --seed 1 --geometry halfline --margin 2 --out " + rep_int)
            .exit_code == 0);
  const json full = json::parse(read_file(rep_full));
  const json interior = json::parse(read_file(rep_int));
  CHECK(full["geometry"] == "full");
  CHECK(full["isometry_defect"].get<double>() == doctest::Approx(10.0));
  CHECK(interior["geometry"] == "halfline");
  CHECK(interior["isometry_defect"].get<double>() <= 1e-12);
  std::remove(rep_full.c_str());
  std::remove(rep_int.c_str());
}

TEST_CASE("validate rejects a generator violating the form inequality") {
  const std::string bad = tmp_path("shg_plus.json");
  REQUIRE(run("model --name shg --dim1 3 --dim2 3 --k-sign plus --out " + bad)
              .exit_code == 0);
  CHECK(run("validate --in " + bad + " --seed 5").exit_code == 1);
  std::remove(bad.c_str());
}

TEST_CASE("validate requires a seed and a readable input") {
  const auto& fx = fixtures();
  CHECK(run("validate --in " + fx.gen).exit_code == 2);
  CHECK(run("validate --in /nonexistent.json --seed 1").exit_code == 2);
  const std::string garbled = tmp_path("garbled.json");
  write_file(garbled, "{\"h_dim\": ");
  CHECK(run("validate --in " + garbled + " --seed 1").exit_code == 2);
  std::remove(garbled.c_str());
}

TEST_CASE("semigroup emits generator or evolution matrices") {
  const auto& fx = fixtures();
  const std::string out = tmp_path("block.json");
  CHECK(run("semigroup --in " + fx.gen + " --c 1:0 --d 0.5:-0.25 --out " + out)
            .exit_code == 0);
  const json mat = json::parse(read_file(out));
  REQUIRE(mat.is_array());
  CHECK(mat.size() == 8);
  CHECK(mat[0].size() == 8);
  CHECK(run("semigroup --in " + fx.gen +
            " --c 1:0 --d 0.5:-0.25 --t 0.5 --out " + out)
            .exit_code == 0);
  CHECK(run("semigroup --in " + fx.gen + " --c 1:0,2:0 --d 1:0 --out " + out)
            .exit_code == 2);  // wrong noise-vector length
  CHECK(run("semigroup --in " + fx.gen + " --c 1:0 --d 1:0 --t -1 --out " +
            out)
            .exit_code == 2);
  std::remove(out.c_str());
}

TEST_CASE("reconstruct prints the bare inner product at time zero") {
  const auto& fx = fixtures();
  const auto r = run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " +
                     fx.u + " --f " + fx.f + " --g " + fx.g + " --t 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[1, 0]\n");
}

TEST_CASE("reconstruct evaluates a time grid as CSV with echoed labels") {
  const auto& fx = fixtures();
  const auto r = run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " +
                     fx.u + " --f " + fx.f + " --g " + fx.g +
                     " --tgrid 0,0.5,1.0");
  CHECK(r.exit_code == 0);
  REQUIRE(count_lines(r.output) == 4);
  CHECK(r.output.rfind("t,re,im\n", 0) == 0);
  CHECK(r.output.find("\n0,1,0\n") != std::string::npos);
  // The grid labels are echoed verbatim, not reformatted.
  CHECK(r.output.find("\n1.0,") != std::string::npos);
}

TEST_CASE("reconstruct runs its optional consistency checks") {
  const auto& fx = fixtures();
  const auto ok = run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " +
                      fx.u + " --f " + fx.f + " --g " + fx.g +
                      " --t 1 --splits 3 --tol 1e-8");
  CHECK(ok.exit_code == 0);
  const json rep = json::parse(ok.output);
  CHECK(rep.contains("element"));
  CHECK(rep["refine_diff"].get<double>() <= 1e-8);

  // An unreachable tolerance turns the same run into a property failure.
  const auto fail = run("reconstruct --in " + fx.gen + " --u " + fx.u +
                        " --v " + fx.u + " --f " + fx.f + " --g " + fx.g +
                        " --t 1 --unnormalized --nt 64 --tol 1e-14");
  CHECK(fail.exit_code == 1);
  const json rep2 = json::parse(fail.output);
  CHECK(rep2["qsde_residual"].get<double>() > 1e-14);
}

TEST_CASE("reconstruct validates flag combinations and vector files") {
  const auto& fx = fixtures();
  CHECK(run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " + fx.u +
            " --f " + fx.f + " --g " + fx.g)
            .exit_code == 2);  // neither --t nor --tgrid
  CHECK(run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " + fx.u +
            " --f " + fx.f + " --g " + fx.g + " --t 1 --tgrid 0,1")
            .exit_code == 2);  // both
  CHECK(run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " + fx.u +
            " --f " + fx.f + " --g " + fx.g + " --tgrid 0,1 --splits 2")
            .exit_code == 2);  // checks need a single time
  CHECK(run("reconstruct --in " + fx.gen + " --u " + fx.u + " --v " + fx.u +
            " --f " + fx.f + " --g " + fx.g + " --t x")
            .exit_code == 2);
  const std::string short_u = tmp_path("short_u.json");
  write_file(short_u, R"({"entries": [[1, 0]]})");
  CHECK(run("reconstruct --in " + fx.gen + " --u " + short_u + " --v " + fx.u +
            " --f " + fx.f + " --g " + fx.g + " --t 1")
            .exit_code == 2);
  std::remove(short_u.c_str());
}

TEST_CASE("trotter writes one CSV row per schedule and grid entry") {
  const auto& fx = fixtures();
  const std::string out = tmp_path("trotter.csv");
  const auto r = run("trotter --in " + fx.gen +
                     " --schedule 2,4,8 --tgrid 0.25,0.5 --c 1:0 --d 1:0 "
                     "--out " +
                     out);
  CHECK(r.exit_code == 0);
  const std::string text = read_file(out);
  CHECK(text.rfind("n,t,error\n", 0) == 0);
  CHECK(count_lines(text) == 7);
  CHECK(run("trotter --in " + fx.gen +
            " --schedule 8,4 --tgrid 0.25 --c 1:0 --d 1:0 --out " + out)
            .exit_code == 2);
  std::remove(out.c_str());
}

TEST_CASE("qds summarizes unitality and positivity over a grid") {
  const auto& fx = fixtures();
  const std::string out = tmp_path("qds.csv");
  const auto r =
      run("qds --in " + fx.gen + " --tmax 1 --steps 4 --out " + out);
  CHECK(r.exit_code == 0);
  const std::string text = read_file(out);
  CHECK(text.rfind("t,defect,min_diag_defect_index,min_choi_eig\n", 0) == 0);
  REQUIRE(count_lines(text) == 6);  // header + t = 0, 0.25, ..., 1

  // Byte-identical on a repeated run.
  const std::string out2 = tmp_path("qds2.csv");
  REQUIRE(run("qds --in " + fx.gen + " --tmax 1 --steps 4 --out " + out2)
              .exit_code == 0);
  CHECK(read_file(out2) == text);

  // Explicit grids and the dual variant work too.
  const std::string dual = tmp_path("qds_dual.csv");
  CHECK(run("qds --in " + fx.gen + " --tgrid 0,0.5 --out " + out +
            " --dual-out " + dual)
            .exit_code == 0);
  CHECK(count_lines(read_file(dual)) == 3);
  std::remove(out.c_str());
  std::remove(out2.c_str());
  std::remove(dual.c_str());
}

TEST_CASE("qds rows after time zero show the truncation leak of the ladder") {
  const auto& fx = fixtures();
  const std::string out = tmp_path("qds_ladder.csv");
  REQUIRE(run("qds --in " + fx.ladder + " --tmax 1 --steps 4 --out " + out)
              .exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // header
  int row = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string t_str, defect_str;
    std::getline(fields, t_str, ',');
    std::getline(fields, defect_str, ',');
    const double defect = std::stod(defect_str);
    if (row == 0) {
      CHECK(defect == 0.0);
    } else {
      CHECK(defect > 1e-6);
    }
    ++row;
  }
  CHECK(row == 5);
  std::remove(out.c_str());
}

TEST_CASE("schur reports a clean sweep for an admissible model") {
  const auto& fx = fixtures();
  const auto r = run("schur --in " + fx.gen + " --trials 50 --seed 42");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.output);
  CHECK(rep["trials"] == 50);
  CHECK(rep["violations"] == 0);
  CHECK(rep["max_excess"].get<double>() <= 1e-10);

  // Identical seeds give identical bytes.
  const auto again = run("schur --in " + fx.gen + " --trials 50 --seed 42");
  CHECK(again.output == r.output);
  const auto other = run("schur --in " + fx.gen + " --trials 50 --seed 43");
  CHECK(other.output != r.output);

  CHECK(run("schur --in " + fx.gen + " --trials 10").exit_code == 2);
}
