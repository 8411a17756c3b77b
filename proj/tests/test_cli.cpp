#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "npcc/balanced.hpp"
#include "npcc/census.hpp"
#include "npcc/code.hpp"
#include "npcc/construct.hpp"
#include "npcc/extend.hpp"
#include "npcc/perfect.hpp"
#include "npcc/word.hpp"
#include "test_util.hpp"

using namespace npcc;
using namespace npcc::testutil;
using nlohmann::json;

namespace {

std::filesystem::path work_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("npcc_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json parse_out(const CliResult& res) { return json::parse(res.out); }

}  // namespace

TEST_CASE("construct writes a verified code file for every recipe") {
  struct Row {
    const char* recipe;
    int r;
    const char* type;
    Code expected;
  };
  const Row rows[] = {
      {"glue-a", 3, "A", make_glue_a(3)},
      {"glue-b", 3, "B", make_glue_b(3)},
      {"glue-c", 3, "C", make_glue_c(3)},
      {"union-a", 3, "A", make_union_a(3)},
      {"linear-a", 2, "A", linear_np1cc(2, LinearVariant::A)},
      {"linear-b", 2, "B", linear_np1cc(2, LinearVariant::B)},
      {"balanced", 3, "A", build_balanced(3)},
  };
  for (const Row& row : rows) {
    std::string out = path_of(std::string("construct_") + row.recipe + ".txt");
    CliResult res = run_cli(std::string("construct --recipe ") + row.recipe + " --r " +
                            std::to_string(row.r) + " --out " + out);
    CHECK(res.exit_code == 0);
    json doc = parse_out(res);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "construct");
    CHECK(doc["inputs"]["recipe"] == row.recipe);
    CHECK(doc["results"]["is_np1cc"] == true);
    CHECK(doc["results"]["type"] == row.type);
    CHECK(Code::load(out) == row.expected);
  }

  CliResult big = run_cli("construct --recipe glue-a --r 4 --out " + path_of("big.txt"));
  CHECK(big.exit_code == 0);
  CHECK(parse_out(big)["results"]["M"] == 4096);
}

TEST_CASE("a sign-table file drives the second glue half") {
  Code base = hamming_code(3);
  LambdaTable t = zero_lambda(base);
  t[base.words()[1]] = 1;
  t[base.words()[2]] = 1;
  std::string lf = path_of("lambda2.txt");
  {
    std::ofstream out(lf);
    out << serialize_lambda(t);
  }
  CliResult res = run_cli("construct --recipe glue-c --r 4 --lambda-file " + lf +
                          " --out " + path_of("gc16_2.txt"));
  CHECK(res.exit_code == 0);
  CHECK(parse_out(res)["results"]["k"] == 1792);  // 128 * (16 - 2)

  t[base.words()[3]] = 1;
  t[base.words()[4]] = 1;
  std::string lf4 = path_of("lambda4.txt");
  {
    std::ofstream out(lf4);
    out << serialize_lambda(t);
  }
  CliResult res4 = run_cli("construct --recipe glue-c --r 4 --lambda-file " + lf4 +
                           " --out " + path_of("gc16_4.txt"));
  CHECK(res4.exit_code == 0);
  CHECK(parse_out(res4)["results"]["k"] == 1536);  // 128 * (16 - 4)
}

TEST_CASE("verify distinguishes good, bad, and missing inputs") {
  std::string good = path_of("good.txt");
  make_glue_b(2).save(good);
  CliResult ok = run_cli("verify --in " + good);
  CHECK(ok.exit_code == 0);
  json doc = parse_out(ok);
  CHECK(doc["results"]["is_np1cc"] == true);
  CHECK(doc["results"]["type"] == "B");

  std::string bad = path_of("bad.txt");
  Code::from_strings({"0000", "0001", "0010", "0011"}).save(bad);
  CliResult fail = run_cli("verify --in " + bad);
  CHECK(fail.exit_code == 1);
  json fdoc = parse_out(fail);
  CHECK(fdoc["results"]["is_np1cc"] == false);
  CHECK_FALSE(fdoc["results"]["failures"].empty());

  CHECK(run_cli("verify --in " + path_of("does_not_exist.txt")).exit_code == 2);
}

TEST_CASE("classification and pair listing") {
  std::string b4 = path_of("b4.txt");
  make_glue_b(2).save(b4);

  CliResult cls = run_cli("classify --in " + b4);
  CHECK(cls.exit_code == 0);
  json cdoc = parse_out(cls);
  CHECK(cdoc["results"]["type"] == "B");
  CHECK(cdoc["results"]["k"] == 0);
  CHECK(cdoc["results"]["pair_count"] == 2);

  CliResult pr = run_cli("pairs --in " + b4);
  CHECK(pr.exit_code == 0);
  json pdoc = parse_out(pr)["results"];
  REQUIRE(pdoc["pairs"].size() == 2);
  CHECK(pdoc["pairs"][0]["a"] == "0000");
  CHECK(pdoc["pairs"][0]["b"] == "1001");
  CHECK(pdoc["pairs"][0]["kind"] == "II");
  CHECK(pdoc["pairs"][1]["a"] == "0111");
  CHECK(pdoc["pairs"][1]["b"] == "1110");
  CHECK(pdoc["midwords"] == json::array({"0001", "0110", "1000", "1111"}));
}

TEST_CASE("spectrum output in both formats") {
  std::string a8 = path_of("a8.txt");
  make_glue_a(3).save(a8);
  CliResult res = run_cli("spectrum --in " + a8);
  CHECK(res.exit_code == 0);
  json doc = parse_out(res)["results"];
  CHECK(doc["A"] == json::array({1, 1, 0, 7, 14, 7, 0, 1, 1}));
  CHECK(doc["B_prime"] == json::array({"1", "0", "0", "0", "7", "0", "0", "0", "0"}));
  CHECK(doc["s_prime"] == 1);

  std::string b4 = path_of("b4s.txt");
  make_glue_b(2).save(b4);
  CliResult moved = run_cli("spectrum --in " + b4 + " --translate 1000");
  CHECK(moved.exit_code == 0);
  CHECK(parse_out(moved)["results"]["A"] == json::array({0, 2, 1, 0, 1}));

  CliResult text = run_cli("spectrum --in " + b4 + " --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out ==
        "n: 4\nM: 4\nA: 1 0 1 2 0\nB: 1 0 1 2 0\nA': 1 0 1 2 0\nB': 1 0 1 2 0\ns': 2\n");
}

TEST_CASE("extension scan groups a code with its punctures") {
  std::string a8 = path_of("a8scan.txt");
  make_glue_a(3).save(a8);
  CliResult res = run_cli("extend-scan --in " + a8);
  CHECK(res.exit_code == 0);
  json doc = parse_out(res)["results"];
  CHECK(doc["extended_length"] == 9);
  CHECK(doc["profile"] == "BBBBBBBAA");
  CHECK(doc["nA"] == 2);
  CHECK(doc["nB"] == 7);
  CHECK(doc["nC"] == 0);
  CHECK(doc["class_key"] == equivalence_key(make_glue_a(3)));

  std::string bad = path_of("badscan.txt");
  Code::from_strings({"0000", "0001", "0010", "0011"}).save(bad);
  CliResult fail = run_cli("extend-scan --in " + bad);
  CHECK(fail.exit_code == 1);
  json fdoc = parse_out(fail)["results"];
  CHECK(fdoc["is_np1cc"] == false);
  CHECK(fdoc.contains("error"));
}

TEST_CASE("census command writes the same report as the library") {
  std::string f1 = path_of("census2.json");
  CliResult res = run_cli("census --n 2 --out " + f1);
  CHECK(res.exit_code == 0);
  json doc = parse_out(res)["results"];
  CHECK(doc["total"] == 6);
  CHECK(doc["types"]["A"] == 4);
  CHECK(slurp(f1) == census_json(run_census(2, 1)));

  std::string f2 = path_of("census4_t1.json");
  std::string f3 = path_of("census4_t4.json");
  CHECK(run_cli("census --n 4 --out " + f2).exit_code == 0);
  CHECK(run_cli("--threads 4 census --n 4 --out " + f3).exit_code == 0);
  CHECK(slurp(f2) == slurp(f3));

  CHECK(run_cli("census --n 3 --out " + path_of("c3.json")).exit_code == 2);
}

TEST_CASE("bound evaluation for covering parameters") {
  CliResult res = run_cli("bounds --n 8 --R 1 --M 32");
  CHECK(res.exit_code == 1);  // packing-style bounds are exceeded
  json doc = parse_out(res)["results"];
  CHECK(doc["all_satisfied"] == false);
  REQUIRE(doc["bounds"].size() == 5);
  CHECK(doc["bounds"][0]["name"] == "sphere_packing");
  CHECK(doc["bounds"][0]["value"] == "256/9");
  CHECK(doc["bounds"][0]["satisfied"] == false);
  CHECK(doc["bounds"][1]["name"] == "sphere_covering");
  CHECK(doc["bounds"][1]["satisfied"] == true);
  CHECK(doc["bounds"][3]["name"] == "struik");
  CHECK(doc["bounds"][3]["value"] == "32");
  CHECK(doc["bounds"][3]["satisfied"] == true);
  CHECK(doc["bounds"][4]["name"] == "van_wee");
  CHECK(doc["bounds"][4]["value"] == "32");
  CHECK(doc["bounds"][4]["satisfied"] == true);

  CliResult perfect = run_cli("bounds --n 7 --R 1 --M 16");
  CHECK(perfect.exit_code == 0);
  json pdoc = parse_out(perfect)["results"];
  CHECK(pdoc["all_satisfied"] == true);
  CHECK(pdoc["bounds"].size() == 4);  // no even-length refinement at n = 7
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("construct --recipe glue-a --r 3").exit_code == 2);  // missing --out
  CHECK(run_cli("construct --recipe nonsense --r 3 --out " + path_of("x.txt")).exit_code == 2);
  CHECK(run_cli("spectrum --in " + path_of("nope.txt") + " --format yaml").exit_code == 2);
  CHECK(run_cli("bounds --n 7 --R -1 --M 1").exit_code == 2);  // negative radius
}
