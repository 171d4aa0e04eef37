#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cliff::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  auto r = call(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Transform, TranslationExample) {
  auto j = call_json({"transform", R"({"map":{"type":"translation","h":[0,1,0,0]},"point":[0,0,1,0]})"});
  EXPECT_EQ(j["x"], json::array({"0", "1", "1", "0"}));
  EXPECT_EQ(j["delta"], "1");
  EXPECT_EQ(j["at_infinity"], false);
}

TEST(Transform, InversionAtOriginIsAtInfinity) {
  auto j = call_json({"transform", R"({"map":{"type":"inversion"},"point":[0,0,0,0]})"});
  EXPECT_EQ(j["at_infinity"], true);
  EXPECT_TRUE(j["x"].is_null());
  EXPECT_EQ(j["projective"]["mu"], "0");
  EXPECT_EQ(j["projective"]["lambda"], "1");
}

TEST(Transform, DilationExample) {
  auto j = call_json({"transform", R"({"map":{"type":"dilation","rho":4},"point":[1,0,0,0]})"});
  EXPECT_EQ(j["x"], json::array({"4", "0", "0", "0"}));
  EXPECT_EQ(j["delta"], "1/4");
}

TEST(Transform, WordsRotationsAndFloat) {
  // Translation after dilation: x -> 4x + h.
  auto j = call_json({"transform",
                      R"({"map":[{"type":"translation","h":[1,0,0,0]},{"type":"dilation","rho":"4"}],"point":["1/2",0,0,0]})"});
  EXPECT_EQ(j["x"], json::array({"3", "0", "0", "0"}));
  // g = 3/5 + 4/5 e12 turns e1 into g^2 e1 = -7/25 e1 - 24/25 e2.
  auto r = call_json({"transform",
                      R"({"map":{"type":"rotation","g":{"terms":[{"blade":[],"re":"3/5"},{"blade":[0,1],"re":"4/5"}]}},"point":[0,1,0,0]})"});
  EXPECT_EQ(r["x"], json::array({"0", "-7/25", "-24/25", "0"}));
  auto f = call_json({"--float", "transform", R"({"map":{"type":"dilation","rho":2},"point":[1,0,0,0]})"});
  EXPECT_NEAR(f["x"][0].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(f["delta"].get<double>(), 0.5, 1e-12);
}

TEST(Transform, InputErrors) {
  EXPECT_EQ(call({"transform", "{not json"}).code, 2);
  EXPECT_EQ(call({"transform", R"({"map":{"type":"warp"},"point":[0,0,0,0]})"}).code, 2);
  EXPECT_EQ(call({"transform", R"({"map":{"type":"dilation","rho":2},"point":[0,0,0,0]})"}).code, 2);
  EXPECT_EQ(call({"transform", R"({"map":{"type":"translation"},"point":[0,0,0,0]})"}).code, 2);
  EXPECT_EQ(call({"transform", R"({"map":{"type":"inversion"},"point":[0,0,0]})"}).code, 2);
  EXPECT_EQ(call({"transform"}).code, 2);
}

TEST(Twistor, BuildIncidenceLocus) {
  auto b = call_json({"twistor", "build", R"({"x":[0,0,0,0],"pi":[[0,0],[0,0],["2","1"],[0,"-1/3"]]})"});
  EXPECT_EQ(b["eta"], json::parse(R"([["0","0"],["0","0"],["2","1"],["0","-1/3"]])"));
  auto i = call_json({"twistor", "incidence", R"({"x":[1,2,3,4],"x_prime":[1,2,3,4],"xi":[1,[0,1]]})"});
  EXPECT_EQ(i["J"], json::array({"0", "0"}));
  auto i2 = call_json({"twistor", "incidence", R"({"x":[0,0,0,0],"x_prime":[1,0,0,0],"xi":[1,0]})"});
  EXPECT_EQ(i2["J"], json::array({"0", "1"}));
  auto l = call_json({"twistor", "locus", R"({"x":[0,0,0,0],"xi":[1,0],"grid":{"lo":-2,"hi":2}})"});
  EXPECT_EQ(l["count"], 125);
  for (const auto& h : l["hits"]) EXPECT_EQ(std::stol(h[0].get<std::string>()) + std::stol(h[3].get<std::string>()), 0);
  EXPECT_EQ(call({"twistor", "build", R"({"x":[0,0,0,0],"pi":[1,0,0,0]})"}).code, 2);
  EXPECT_EQ(call({"twistor", "spin", "{}"}).code, 2);
  EXPECT_EQ(call({"twistor", "locus", R"({"x":[0,0,0,0],"xi":[1,0],"grid":{"lo":2,"hi":-2}})"}).code, 2);
}

TEST(Pure, Examples) {
  auto v = call_json({"pure", "check", R"({"n":4,"terms":[{"occ":[],"re":"1"}]})"});
  EXPECT_EQ(v["pure"], true);
  EXPECT_EQ(v["dim"], 4);
  auto w = call_json({"pure", "check", R"({"n":4,"terms":[{"occ":[],"re":"1"},{"occ":[1,2,3,4],"re":"1"}]})"});
  EXPECT_EQ(w["pure"], false);
  EXPECT_EQ(w["dim"], 0);
  auto o = call_json({"pure", "orbit-dim", R"({"n":3,"terms":[{"occ":[],"re":"1"},{"occ":[1,2],"re":"2","im":"1"}]})"});
  EXPECT_EQ(o["dim"], 6);
  auto f = call_json({"pure", "flagpole", R"({"spinor":{"n":2,"terms":[{"occ":[],"re":"1"}]}})"});
  EXPECT_EQ(f["conjugation_identity"], true);
  EXPECT_FALSE(f["p"]["terms"].empty());
  EXPECT_EQ(call({"pure", "check", R"({"n":6,"terms":[]})"}).code, 2);
  EXPECT_EQ(call({"pure", "check", R"({"n":0,"terms":[]})"}).code, 2);
  EXPECT_EQ(call({"pure", "check", R"({"n":2,"terms":[]})"}).code, 2);
  EXPECT_EQ(call({"pure", "check", R"({"n":2,"terms":[{"occ":[3],"re":1}]})"}).code, 2);
  EXPECT_EQ(call({"pure", "orbit-dim", R"({"n":4,"terms":[{"occ":[],"re":1},{"occ":[1,2,3,4],"re":1}]})"}).code, 2);
}

TEST(Verify, ExitCodes) {
  auto ok = call({"verify", "generators"});
  EXPECT_EQ(ok.code, 0);
  auto j = json::parse(ok.out);
  EXPECT_EQ(j["families"].size(), 9u);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(call({"verify", "generators", "--m-convention", "reversed"}).code, 1);
  EXPECT_EQ(call({"verify", "bogus"}).code, 2);
  EXPECT_EQ(call({"verify", "generators", "--m-convention", "sideways"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--seed", "x", "verify"}).code, 2);
}

TEST(Verify, OutputFileAndSeedPlacement) {
  const auto path = std::filesystem::temp_directory_path() / "cliff_test_verify.json";
  auto r = call({"--seed", "9", "verify", "twistor", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto again = call({"verify", "twistor", "--seed", "9"});
  EXPECT_EQ(ss.str(), again.out);
  std::filesystem::remove(path);
}

TEST(Verify, InputFile) {
  const auto path = std::filesystem::temp_directory_path() / "cliff_test_payload.json";
  {
    std::ofstream f(path);
    f << R"({"map":{"type":"translation","h":[0,1,0,0]},"point":[0,0,1,0]})";
  }
  auto j = call_json({"transform", "--input", path.string()});
  EXPECT_EQ(j["x"], json::array({"0", "1", "1", "0"}));
  EXPECT_EQ(call({"transform", "--input", "/nonexistent/payload.json"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Binary, ExitCodesThroughProcess) {
  const std::string bin = CLIFF_BIN;
  auto status = [&](const std::string& args) {
    int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status("verify generators"), 0);
  EXPECT_EQ(status("verify generators --m-convention reversed"), 1);
  EXPECT_EQ(status("verify bogus"), 2);
}
