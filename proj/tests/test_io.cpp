// Copyright 2026 The kcomplex Authors
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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>
#include <string>

#include "doctest.h"
#include "kcomplex/csv.hpp"
#include "kcomplex/error.hpp"
#include "kcomplex/operator_file.hpp"
#include "kcomplex/run.hpp"
#include "kcomplex/symmetry.hpp"
#include "support/oracles.hpp"

using namespace kcomplex;
namespace kt = kcomplex::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("kcomplex_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::vector<double> column(const CsvTable& t, const std::string& name) {
  const std::size_t c = t.column(name);
  std::vector<double> out;
  for (const auto& row : t.rows()) out.push_back(row[c]);
  return out;
}

}  // namespace

TEST_CASE("CSV layout") {
  CsvTable t({"a", "b"});
  t.add_comment("hello");
  t.add_row({1.0, 0.1});
  t.add_row({-2.5, 1e-300});
  CHECK(t.to_string() == "# hello\na,b\n1,0.10000000000000001\n-2.5,1e-300\n");
  CHECK(t.column("b") == 1);
  CHECK_THROWS_AS(t.column("c"), Error);
  CHECK_THROWS_AS(t.add_row({1.0}), Error);
  CHECK_THROWS_AS(CsvTable({}), Error);
  CHECK_THROWS_AS(CsvTable({"x,y"}), Error);
  CHECK_THROWS_AS(t.add_comment("two\nlines"), Error);
}

TEST_CASE("17 significant digits round trip") {
  for (int i = 0; i < 1000; ++i) {
    const double x = kt::uniform(-1, 1) * std::pow(10.0, kt::uniform(-300, 300));
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("operator file parses sigma_x") {
  const OperatorMatrix m = parse_operator_text("# sigma_x\n0 0,1 0\n\n1 0,0 0\n", true);
  REQUIRE(m.dim() == 2);
  CHECK(m.entries()(0, 1) == Complex(1, 0));
  CHECK(m.entries()(1, 0) == Complex(1, 0));
  CHECK(m.entries()(0, 0) == Complex(0, 0));
  CHECK(m.is_hamiltonian());
  const OperatorMatrix y = parse_operator_text("0 0, 0 -1\n  0 1 ,  0 0  \n", true);
  CHECK(y.entries()(0, 1) == Complex(0, -1));
}

TEST_CASE("operator file errors") {
  CHECK(code_of([] { (void)parse_operator_text("0 0,1 0\n1 0\n"); }) == ErrorCode::InvalidInput);
  const std::string msg = message_of([] { (void)parse_operator_text("0 0,1 0\n1 0\n"); });
  CHECK(msg.find("2x2") != std::string::npos);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(code_of([] { (void)parse_operator_text("0 0,1 0,2 0\n1 0,0 0,0 0\n"); }) == ErrorCode::InvalidInput);

  CHECK(code_of([] { (void)parse_operator_text("0 0,1 0\n1 x,0 0\n"); }) == ErrorCode::ParseError);
  CHECK(message_of([] { (void)parse_operator_text("# c\n0 0,1 0\n1 x,0 0\n"); }).rfind("line 3", 0) == 0);
  CHECK(code_of([] { (void)parse_operator_text("1 0 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_operator_text("1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_operator_text("# nothing\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_operator_text("0 0,1 0\n2 0,0 0\n", true); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { (void)parse_operator_text("nan 0\n"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { (void)load_operator_file("/nonexistent/kc.txt"); }) == ErrorCode::IoError);
}

TEST_CASE("operator file round trip") {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = kt::random_matrix(4);
    const std::string path = (scratch_dir() / "round.txt").string();
    save_operator_file(path, OperatorMatrix(a));
    const Matrix back = load_operator_file(path).entries();
    CHECK((back - a).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("command names") {
  for (Command c : {Command::Lanczos, Command::SU2, Command::SU11, Command::Deform, Command::Quench,
                    Command::Heights}) {
    CHECK(parse_command(to_string(c)) == c);
  }
  CHECK_FALSE(parse_command("bogus").has_value());
}

TEST_CASE("config defaults and validation") {
  RunConfig c;
  c.command = Command::SU11;
  CHECK(c.resolved_t_max() == 3.0);
  c.command = Command::SU2;
  CHECK(c.resolved_t_max() == doctest::Approx(2 * std::numbers::pi));
  c.command = Command::Deform;
  CHECK(c.resolved_lambdas() == std::vector<double>{0.9, 1.0, 1.2});
  c.command = Command::Heights;
  CHECK(c.resolved_lambdas() == std::vector<double>{1.0});

  RunConfig bad;
  bad.ell = 0.7;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = RunConfig{};
  bad.grid_points = 1;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = RunConfig{};
  bad.command = Command::Deform;
  bad.lambdas = {1.0, 1.8};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::DomainError);
  bad = RunConfig{};
  bad.command = Command::Heights;
  bad.lambdas = {1.0, 1.1};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = RunConfig{};
  bad.command = Command::Lanczos;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = RunConfig{};
  bad.command = Command::SU11;
  bad.k = -1;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = RunConfig{};
  bad.t_max = -1.0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("su2 run") {
  RunConfig c;
  c.command = Command::SU2;
  c.ell = 1.0;
  c.t_max = 6.2832;
  const CsvTable t = run(c);
  CHECK(t.header() == std::vector<std::string>{"t", "C_K_num", "C_K_analytic", "C", "theta", "psi"});
  CHECK(t.rows().size() == 512);
  const auto num = column(t, "C_K_num");
  const auto ana = column(t, "C_K_analytic");
  for (std::size_t i = 0; i < num.size(); ++i) CHECK(std::abs(num[i] - ana[i]) <= 1e-8);
  CHECK(t.comments().at(0) == "kcomplex 0.1.0 su2");
}

TEST_CASE("deform at lambda 1 reproduces su2") {
  RunConfig d;
  d.command = Command::Deform;
  d.ell = 4.0;
  d.lambdas = {1.0};
  RunConfig s;
  s.command = Command::SU2;
  s.ell = 4.0;
  const auto dk = column(run(d), "C_K");
  const auto sk = column(run(s), "C_K_num");
  REQUIRE(dk.size() == sk.size());
  for (std::size_t i = 0; i < dk.size(); ++i) CHECK(std::abs(dk[i] - sk[i]) <= 1e-12);
}

TEST_CASE("deform sweeps every lambda in long format") {
  RunConfig d;
  d.command = Command::Deform;
  d.ell = 4.0;
  d.grid_points = 20;
  const CsvTable t = run(d);
  CHECK(t.rows().size() == 60);
  const auto lam = column(t, "lambda");
  CHECK(lam.front() == 0.9);
  CHECK(lam.back() == 1.2);
  const auto ck = column(t, "C_K");
  const auto unit = column(t, "C_K_over_2l");
  for (std::size_t i = 0; i < ck.size(); ++i) CHECK(unit[i] == doctest::Approx(ck[i] / 8.0));
}

TEST_CASE("quench run") {
  RunConfig q;
  q.command = Command::Quench;
  q.ell = 1.0;
  q.t_star = 1.5708;
  const CsvTable t = run(q);
  const auto ts = column(t, "t");
  const auto ck = column(t, "C_K");
  const auto ckp = column(t, "C_K_prime");
  const double frozen = 1 - std::cos(q.t_star);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] > q.t_star) CHECK(std::abs(ck[i] - frozen) <= 1e-10);
    if (ts[i] <= q.t_star) CHECK(std::abs(ckp[i] - 1.0) <= 1e-10);
  }
  CHECK(t.header().size() == 6);
}

TEST_CASE("heights and su11 runs") {
  RunConfig h;
  h.command = Command::Heights;
  h.ell = 2.0;
  const CsvTable ht = run(h);
  const auto hv = column(ht, "h_theta_n");
  REQUIRE(hv.size() == 5);
  for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(hv[n] - n) <= 1e-9);

  RunConfig k;
  k.command = Command::SU11;
  k.k = 1.0;
  k.grid_points = 32;
  const CsvTable kt_ = run(k);
  const auto leak = column(kt_, "leak");
  for (double l : leak) CHECK(l < 1e-10);
}

TEST_CASE("lanczos run from files") {
  const std::string h = write_text("h.txt", "1 0,0 0,0 0\n0 0,0 0,0 0\n0 0,0 0,-1 0\n");
  const double r = 1 / std::sqrt(2.0);
  const std::string seed = write_text(
      "s.txt", "0 0," + format_double(r) + " 0,0 0\n" + format_double(r) + " 0,0 0," + format_double(r) +
                   " 0\n0 0," + format_double(r) + " 0,0 0\n");
  RunConfig c;
  c.command = Command::Lanczos;
  c.hamiltonian_path = h;
  c.seed_path = seed;
  const CsvTable t = run(c);
  REQUIRE(t.rows().size() == 1);
  CHECK(t.rows()[0][0] == 1.0);
  CHECK(std::abs(t.rows()[0][1] - 1.0) <= 1e-12);
  CHECK(t.comments().back() == "krylov_dimension=2");

  c.seed_path = write_text("bad.txt", "1 0\n");
  CHECK(code_of([&] { (void)run(c); }) == ErrorCode::InvalidInput);
  c.seed_path = "/nonexistent/seed.txt";
  CHECK(code_of([&] { (void)run(c); }) == ErrorCode::IoError);
}

TEST_CASE("identical configs give byte-identical output") {
  for (Command cmd : {Command::SU2, Command::SU11, Command::Deform, Command::Quench, Command::Heights}) {
    RunConfig c;
    c.command = cmd;
    c.ell = 2.0;
    c.grid_points = 64;
    CHECK(run(c).to_string() == run(c).to_string());
  }
}
