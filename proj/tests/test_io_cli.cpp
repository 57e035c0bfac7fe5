#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "complementa/cli.hpp"
#include "complementa/examples.hpp"
#include "complementa/io.hpp"

using namespace complementa;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json strip_timing(Json j) {
  for (auto& r : j) r.erase("elapsed_ms");
  return j;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("complementa-test-" + name);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("cayley-v1 round trip") {
    for (const char* name : {"S3", "holomorph8", "Q8", "C1"}) {
      const auto g = build_recipe(name).group;
      const auto j = group_to_json(g);
      CHECK(j["format"] == "cayley-v1");
      CHECK(j["mult"].size() == g.order() * g.order());
      const auto back = group_from_json(Json::parse(j.dump()));
      CHECK(back == g);
      CHECK(std::ranges::equal(back.labels(), g.labels()));
    }
  }

  TEST_CASE("invalid group JSON is rejected") {
    auto j = group_to_json(cyclic(3));
    CHECK_THROWS_AS(group_from_json(Json::array()), InvalidStructure);
    auto bad_format = j;
    bad_format["format"] = "other";
    CHECK_THROWS_AS(group_from_json(bad_format), InvalidStructure);
    auto short_table = j;
    short_table["mult"].erase(0);
    CHECK_THROWS_AS(group_from_json(short_table), InvalidStructure);
    auto not_group = j;
    not_group["mult"] = {0, 1, 2, 1, 1, 0, 2, 0, 1};
    CHECK_THROWS_AS(group_from_json(not_group), InvalidStructure);
    auto wrong_type = j;
    wrong_type["order"] = "three";
    CHECK_THROWS_AS(group_from_json(wrong_type), InvalidStructure);
    CHECK_THROWS_AS(read_group("/nonexistent/complementa.json"), Error);

    const auto path = temp_path("garbage.json");
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(read_group(path.string()), InvalidStructure);
    std::filesystem::remove(path);
  }

  TEST_CASE("lattice JSON and DOT") {
    const auto g = symmetric(3);
    const auto lat = all_subgroups(g);
    const auto j = lattice_to_json(g, lat);
    CHECK(j["subgroups"].size() == 6);
    CHECK(j["conjugacy_classes"].size() == 4);
    CHECK(j["subgroups"][0]["order"] == 1);
    CHECK(j["subgroups"][5]["normal"] == true);
    const auto dot = lattice_to_dot(g, lat, "S3");
    CHECK(dot.rfind("digraph \"S3\" {", 0) == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
    CHECK(edges == lat.covers.size());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("bounds") {
    const auto r = cli({"bounds", "--m", "2"});
    REQUIRE(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["zeta"] == 8);
    CHECK(j["d_bound"] == 11);
    CHECK(j["factorial_index_bound"] == "2");

    const auto big = Json::parse(cli({"bounds", "--m", "8", "--q", "2"}).out);
    CHECK(big["n"] == 80);
    CHECK(big["zeta"] == 15);
    CHECK(big["d_bound_floor"] == 18);
    CHECK(big["d_bound"].get<double>() > 18.0);
    CHECK(big["minimal_normal_bound"] == "1208925819614629174706176");  // 2^80

    CHECK(cli({"bounds", "--m", "0"}).code == exit_usage);
    CHECK(cli({"bounds", "--m", "2", "--q", "4"}).code == exit_usage);
    CHECK(cli({"bounds"}).code == exit_usage);
  }

  TEST_CASE("check") {
    auto r = cli({"check", "supercomplemented", "--recipe", "theorem4", "--subgroup", "x"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["result"] == true);

    r = cli({"check", "complemented", "--recipe", "cyclic", "--n", "4", "--subgroup", "2"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["result"] == false);

    r = cli({"check", "complements", "--recipe", "S3", "--subgroup", "c", "--mode", "all"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["complements"].size() == 3);

    r = cli({"check", "c-separating", "--recipe", "theorem4"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["subgroups"].empty());

    r = cli({"check", "derived-series", "--recipe", "S4"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["result"] == 3);

    CHECK(cli({"check", "complemented", "--recipe", "S3"}).code == exit_usage);
    CHECK(cli({"check", "bogus", "--recipe", "S3", "--subgroup", "c"}).code == exit_usage);
    CHECK(cli({"check", "normal", "--recipe", "S3", "--subgroup", "99"}).code == exit_usage);
    CHECK(cli({"check", "normal", "--recipe", "S3", "--subgroup", "c", "--mode", "x"}).code == exit_ok);
  }

  TEST_CASE("caps surface as usage errors") {
    const auto r = cli({"lattice", "--recipe", "C5^4"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("[cap: ") != std::string::npos);
    CHECK(cli({"build", "--recipe", "example", "--p", "5"}).code == exit_usage);
  }

  TEST_CASE("verify") {
    const auto a = cli({"verify", "--suite", "theorem4"});
    REQUIRE(a.code == exit_ok);
    const auto b = cli({"verify", "--suite", "holomorph8"});
    CHECK(strip_timing(Json::parse(a.out)) == strip_timing(Json::parse(b.out)));
    CHECK(cli({"verify", "--suite", "example", "--p", "2"}).code == exit_ok);
    CHECK(cli({"verify", "--suite", "example", "--p", "5"}).code == exit_usage);
    CHECK(cli({"verify", "--suite", "S3"}).code == exit_ok);
    CHECK(cli({"verify", "--suite", "nothing"}).code == exit_usage);
  }

  TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"lattice", "--recipe", "S4"},
             {"export", "--recipe", "holomorph8"},
             {"build", "--recipe", "example", "--p", "3"},
             {"check", "chief-series", "--recipe", "A4xC2"}}) {
      const auto first = cli(args);
      REQUIRE(first.code == exit_ok);
      CHECK(cli(args).out == first.out);
    }
    const auto v1 = cli({"verify", "--suite", "example", "--p", "3"});
    const auto v2 = cli({"verify", "--suite", "example", "--p", "3"});
    CHECK(strip_timing(Json::parse(v1.out)).dump() == strip_timing(Json::parse(v2.out)).dump());
  }

  TEST_CASE("build and input") {
    const auto path = temp_path("dic12.json");
    REQUIRE(cli({"build", "--recipe", "Dic12", "--out", path.string()}).code == exit_ok);
    const auto from_file = cli({"lattice", "--input", path.string()});
    REQUIRE(from_file.code == exit_ok);
    CHECK(from_file.out == cli({"lattice", "--recipe", "Dic12"}).out);
    CHECK(cli({"lattice", "--input", path.string(), "--recipe", "S3"}).code == exit_usage);
    std::filesystem::remove(path);
    CHECK(cli({"lattice", "--input", path.string()}).code == exit_usage);
  }

  TEST_CASE("usage errors") {
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"bounds", "--m", "2", "--bogus"}).code == exit_usage);
    CHECK(cli({"lattice"}).code == exit_usage);
    CHECK(cli({"--help"}).code == exit_ok);
  }
}
