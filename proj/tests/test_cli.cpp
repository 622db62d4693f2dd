#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hb/cli.hpp"
#include "hb/io.hpp"

using namespace hb;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kK5 = R"({"vertices":[0,1,2,3,4],"maximal_simplices":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";

}  // namespace

TEST_CASE("documented examples") {
  CHECK(call({"betti", "--reduced"}, kK5).out == "{\"betti\":[0,6]}\n");
  CHECK(call({"obstruction", "--dim", "2"}, kK5).out == "{\"nonzero\":true}\n");
  const auto gamma = call({"examples", "gen", "gamma", "--b", "1", "--d", "2"});
  REQUIRE(gamma.code == 0);
  CHECK(call({"helly"}, gamma.out).out == "{\"helly\":4}\n");
}

TEST_CASE("exit codes") {
  CHECK(call({"frobnicate"}).code == cli::kInputError);
  CHECK(call({"betti"}, "{not json").code == cli::kInputError);
  CHECK(call({"obstruction", "--dim", "2", "--budget", "10"}, kK5).code == cli::kBudgetExceeded);
  const auto big = call({"examples", "gen", "skeleton", "--n", "22", "--k", "0"});
  CHECK(call({"helly"}, big.out).code == cli::kBudgetExceeded);
  CHECK(call({"helly", "--budget", "22"}, big.out).code == cli::kOk);
}

TEST_CASE("every generated example re-parses and validates") {
  const std::vector<std::vector<std::string>> gens = {
      {"examples", "gen", "gamma", "--b", "2", "--d", "3"},
      {"examples", "gen", "skeleton", "--n", "5", "--k", "1"},
      {"examples", "gen", "interval", "--n", "3"},
      {"examples", "gen", "tight", "--d", "3", "--k", "2", "--n", "5"}};
  for (const auto& g : gens) {
    const auto r = call(g);
    REQUIRE(r.code == 0);
    const auto f = family_from_json(parse_json(r.out));
    CHECK(to_json(f).dump() + "\n" == r.out);
    CHECK(call({"audit", "--dim", "2"}, r.out).code == 0);
  }
  const auto g3 = call({"examples", "gen", "gamma3prime"});
  CHECK(complex_from_json(parse_json(g3.out)) == gamma3_prime());
}

TEST_CASE("build-ccm output verifies") {
  const auto k = to_json(simplex_skeleton(2, 1)).dump();
  const auto f = to_json(skeleton_family(6, 1)).dump();
  const std::string kp = "cli_test_k.json";
  const std::string fp = "cli_test_f.json";
  std::ofstream(kp) << k;
  std::ofstream(fp) << f;
  const auto built = call({"build-ccm", "--complex", kp, "--family", fp, "--b", "1"});
  REQUIRE(built.code == 0);
  const auto j = parse_json(built.out);
  CHECK(j.at("report").at("verified") == true);
  CHECK(j.at("report").at("almost_embedding") == true);
  const auto checked = call({"verify", "constrained"}, built.out);
  CHECK(checked.code == 0);
  CHECK(parse_json(checked.out).at("verified") == true);

  auto tampered = j.at("bundle");
  tampered["phi"]["0"] = Json::array({0, 1});
  CHECK(call({"verify", "constrained"}, tampered.dump()).code == cli::kFalsified);
  CHECK(call({"build-ccm", "--complex", kp, "--family", fp, "--b", "1", "--dim-cap", "0"}).code ==
        cli::kInputError);
  std::remove(kp.c_str());
  std::remove(fp.c_str());
}

TEST_CASE("other subcommands") {
  const auto dp = parse_json(call({"deleted-product", "--quotient"}, to_json(simplex_boundary(2)).dump()).out);
  CHECK(dp.at("f_vector") == Json::array({6, 6}));
  CHECK(dp.at("quotient").at("f_vector") == Json::array({3, 3}));
  const auto sd = parse_json(call({"subdivide"}, to_json(full_simplex(2)).dump()).out);
  CHECK(sd.at("labels").size() == 7);
  const auto eml = parse_json(call({"eml", "--p", "2", "--q", "1"}).out);
  CHECK(eml.at("count") == 3);
  CHECK(eml.at("flip_equivariant") == true);
}
