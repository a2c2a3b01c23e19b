#include <minuscule/cli.hpp>
#include <minuscule/serialize.hpp>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace minuscule;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::string& line) {
  std::vector<std::string> args;
  std::istringstream in(line);
  for (std::string token; in >> token;) args.push_back(token);
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* kA5 = "--type A --rank 5 --variant minuscule --weight 3 --word 3,1,2,5,4,3";
const char* kC4 = "--type C --rank 4 --variant cominuscule --weight 4 --word 3,4,1,2,3,4";
const char* kE6 = "--type E --rank 6 --variant minuscule --weight 6 --word 5,4,2,1,3,4,5,6";

}  // namespace

TEST_CASE("classify matches the golden files") {
  for (auto [args, file] : {std::pair{kA5, "classify_a5.json"}, std::pair{kC4, "classify_c4.json"},
                            std::pair{kE6, "classify_e6.json"}}) {
    CAPTURE(file);
    const Result r = invoke(std::string("classify ") + args + " --format json");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/" + file));
  }
}

TEST_CASE("classification counts") {
  auto counts = [](const char* args) {
    const Json j = Json::parse(invoke(std::string("classify ") + args).out);
    return std::pair{j["counts"]["qfact"].get<int>(), j["counts"]["ih_small"].get<int>()};
  };
  CHECK(counts(kA5) == std::pair{6, 6});
  CHECK(counts(kC4) == std::pair{2, 0});
  CHECK(counts(kE6) == std::pair{2, 0});
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const std::string cmd : {std::string("classify ") + kA5, std::string("quiver ") + kC4,
                                std::string("cones ") + kA5, std::string("peel ") + kA5 + " --class 2,1,1",
                                std::string("elements --type D5 --weight 5"), std::string("weights --type E6"),
                                std::string("verify --type A3 --weight 2 --samples 50")}) {
    CAPTURE(cmd);
    const Result r = invoke(cmd);
    REQUIRE(r.code == 0);
    CHECK(dump(Json::parse(r.out)) == r.out);
  }
}

TEST_CASE("quiver emission") {
  const Result json = invoke(std::string("quiver ") + kC4);
  const Json j = Json::parse(json.out);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["arrows"].size() == 6);
  CHECK(j["vertices"][0]["successor"] == 5);
  CHECK(j["vertices"][0]["predecessor"].is_null());

  const Result ascii = invoke(std::string("quiver ") + kC4 + " --format ascii");
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("3^") != std::string::npos);
  CHECK(ascii.out.find("1^") != std::string::npos);
  CHECK(ascii.out.find("2o") != std::string::npos);
  CHECK(ascii.out.find("4o") != std::string::npos);

  const Result dot = invoke(std::string("quiver ") + kA5 + " --format dot");
  CHECK(dot.code == 0);
  CHECK(std::count(dot.out.begin(), dot.out.end(), '{') == std::count(dot.out.begin(), dot.out.end(), '}'));
  CHECK(dot.out.rfind("digraph", 0) == 0);
  std::istringstream lines(dot.out);
  int edges = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") != std::string::npos) {
      ++edges;
      CHECK(line.back() == ';');
    }
  }
  CHECK(edges == 6);
  CHECK(dot.out.find("label=\"1:\xce\xb1" "3\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Result nonreduced = invoke("quiver --type A5 --weight 3 --word 1,3,1,2,5,4,3");
  CHECK(nonreduced.code == 1);
  CHECK(nonreduced.err.find("not reduced") != std::string::npos);
  CHECK(nonreduced.out.empty());

  const Result wrong_weight = invoke("classify --type A5 --weight 2 --word 3,1,2,5,4,3");
  CHECK(wrong_weight.code == 1);
  CHECK(wrong_weight.err.find("not minuscule") != std::string::npos);

  CHECK(invoke("quiver --type Q5 --weight 1 --word 1").code == 1);
  CHECK(invoke("weights --type E8 --format dot").code == 1);
  CHECK(invoke("quiver --type A5 --weight 3").code == 1);
  CHECK(invoke("").code == 1);
  CHECK(invoke("classify --type A5 --weight 3 --word 3,1,2,5,4,3 --max-peaks 2").code == 1);
  CHECK(invoke("peel --type A5 --weight 3 --word 3,1,2,5,4,3 --class 1,-1,0").code == 1);
  CHECK(invoke("--help").code == 0);
}

TEST_CASE("verify") {
  const Result r = invoke("verify --type A5 --weight 3");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["ok"] == true);
  // Same seed, same output.
  CHECK(invoke("verify --type A5 --weight 3 --seed 17").out == invoke("verify --type A5 --weight 3 --seed 17").out);
}

TEST_CASE("cones for one ordering") {
  const Json j = Json::parse(invoke(std::string("cones ") + kA5 + " --ordering 1,2,4").out);
  REQUIRE(j["nef"].size() == 1);
  CHECK(j["nef"][0]["cone"]["generators"] == Json::parse(R"([["1/1","0/1","0/1"],["1/1","1/1","0/1"],["1/1","1/1","1/1"]])"));
  CHECK(j["effective"]["basis"] == "dhat");
  CHECK(j["nef"][0]["cone"]["simplicial"] == true);
}

TEST_CASE("output file") {
  const std::string path = "cli_out_test.json";
  const Result r = invoke(std::string("classify ") + kE6 + " --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(path))["counts"]["qfact"] == 2);
  std::remove(path.c_str());
}
