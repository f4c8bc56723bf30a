#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;
using testsupport::data_file;
using testsupport::run_cli;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("decgroup_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

json run_json(const std::string& args) {
  const auto r = run_cli(args + " --json");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  return json::parse(r.out);
}

}  // namespace

TEST(CliDec, WorkedExampleReport) {
  const auto rep = run_json("dec " + data_file("example33.sys") + " --order lex --basis");
  EXPECT_EQ(rep["schema"], 1);
  EXPECT_EQ(rep["partition"], "{{1,2,3},{4}}");
  EXPECT_EQ(rep["dec_group"]["order"], 2);
  EXPECT_EQ(rep["dec_group"]["generators"], json::array({"(1 2)"}));
  EXPECT_EQ(rep["groebner_basis"][0], "x4^2 - 3*x4 + 2");
}

TEST(CliDec, CubicIsS3) {
  const auto rep = run_json("dec " + data_file("example21.sys"));
  EXPECT_EQ(rep["dec_group"]["tag"], "S_3");
  EXPECT_EQ(rep["dec_group"]["order"], 6);
}

TEST(CliDec, TextAndJsonCarryTheSameContent) {
  const auto text = run_cli("dec " + data_file("example33.sys") + " --order lex --basis");
  const auto rep = run_json("dec " + data_file("example33.sys") + " --order lex --basis");
  for (const auto& f : rep["char_polys"]) EXPECT_NE(text.out.find(f.get<std::string>()), std::string::npos);
  for (const auto& g : rep["groebner_basis"]) EXPECT_NE(text.out.find(g.get<std::string>()), std::string::npos);
  for (const auto& b : rep["blocks"]) EXPECT_NE(text.out.find(b["F"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find(rep["partition"].get<std::string>()), std::string::npos);
}

TEST(CliDec, ExitCodes) {
  const auto curve = run_cli("dec " + temp_file("curve.sys", "vars: x1 x2\nx1*x2\n"));
  EXPECT_EQ(curve.exit_code, 2);
  EXPECT_NE(curve.out.find("ideal is not zero-dimensional"), std::string::npos);
  EXPECT_EQ(run_cli("dec " + temp_file("bad.sys", "vars: x\nx^^2\n")).exit_code, 1);
  EXPECT_EQ(run_cli("dec /nonexistent/file.sys").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  const auto sq = temp_file("sq.sys", "vars: x1\nx1^2\n");
  EXPECT_EQ(run_cli("dec " + sq + " --radical strict").exit_code, 5);
  EXPECT_EQ(run_json("dec " + sq)["radicalized"], true);
}

TEST(CliDec, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "decgroup_cli_cache";
  std::filesystem::remove_all(dir);
  const auto args = "dec " + data_file("example21.sys") + " --cache " + dir.string();
  const auto first = run_json(args);
  const auto second = run_json(args);
  EXPECT_EQ(first["groebner"]["cache"], "miss");
  EXPECT_EQ(second["groebner"]["cache"], "hit");
  EXPECT_EQ(first["dec_group"], second["dec_group"]);
}

TEST(CliSym, Examples) {
  const auto d4 = run_json("sym " + data_file("example22.poly"));
  EXPECT_EQ(d4["sym_group"]["order"], 8);
  EXPECT_EQ(d4["sym_group"]["tag"], "D_4 (dihedral on 4 points)");
  EXPECT_EQ(run_json("sym " + temp_file("s3.poly", "vars: t1 t2 t3\nt1 + t2 + t3\n"))["sym_group"]["tag"], "S_3");
  EXPECT_EQ(run_json("sym " + temp_file("triv.poly", "vars: t1 t2\nt1 + 2*t2\n"))["sym_group"]["tag"], "trivial");
  EXPECT_EQ(run_cli("sym " + temp_file("two.poly", "vars: t1 t2\nt1\nt2\n")).exit_code, 1);
}

TEST(CliZerosDec, Examples) {
  const auto rep = run_json("zeros-dec " + data_file("example31.pts"));
  EXPECT_EQ(rep["partition"], "{{1},{2,3},{4}}");
  EXPECT_EQ(rep["coordinate_sets"][1], json::array({"3", "5", "6"}));
  const auto one = run_json("zeros-dec " + temp_file("one.pts", "vars: a b c\n1 2 3\n"));
  EXPECT_EQ(one["dec_group"]["order"], 1);
  const auto witness = run_json("zeros-dec " + data_file("witness.pts"));
  EXPECT_EQ(witness["candidate_group"]["order"], 2);
  EXPECT_EQ(witness["dec_group"]["order"], 1);
  EXPECT_EQ(witness["warnings"].size(), 1u);
  EXPECT_EQ(run_cli("zeros-dec " + temp_file("ragged.pts", "vars: a b\n1 2\n3\n")).exit_code, 1);
  EXPECT_EQ(run_cli("zeros-dec " + temp_file("dup.pts", "vars: a b\n1 2\n1 2\n")).exit_code, 1);
}

TEST(CliOrbit, TrivialGroupAndWrongIdeal) {
  const auto tri = temp_file("t.tri", "vars: x1 x2\nx1^2 - 3*x1 + 1\nx2 + 1\n");
  const auto sys = temp_file("t.sys", "vars: x1 x2\nx1^2 - 3*x1 + 1\nx2 + 1\n");
  const auto rep = run_json("orbit " + sys + " " + tri + " --group \"()\"");
  EXPECT_EQ(rep["orbit"].size(), 1u);
  EXPECT_EQ(rep["orbit"][0]["verified"], true);
  const auto wrong = temp_file("wrong.sys", "vars: x1 x2 x3 x4 x5\nx1 - 1\nx2\nx3\nx4\nx5\n");
  EXPECT_EQ(run_cli("orbit " + wrong + " " + data_file("t1.tri")).exit_code, 4);
}

TEST(CliOrbit, FiveVariableSystemUnderDec) {
  const auto rep = run_json("orbit " + data_file("cyclic5.sys") + " " + data_file("t1.tri"));
  EXPECT_EQ(rep["group_source"], "dec");
  EXPECT_EQ(rep["group"]["order"], 10);
  EXPECT_EQ(rep["orbit"].size(), 5u);
  EXPECT_TRUE(rep["violations"].empty());
}
