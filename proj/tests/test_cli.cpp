#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "polyhit/cli.hpp"
#include "polyhit/io.hpp"

using namespace polyhit;

namespace {

const std::string kData = POLYHIT_DATA_DIR;

std::string data(const char* name) { return kData + "/" + name; }

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("polyhit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("hitsize on the sliding interval") {
  Run r = cli({"hitsize", "--input", data("f1.json"), "--kmax", "5", "--engine", "exact"});
  CHECK(r.code == kSolved);
  Json j = r.json();
  CHECK(j["k"] == 2);
  CHECK(j["points"] == Json::parse(R"([["1"], ["2"]])"));
  CHECK(j["breakpoints"] == Json::parse(R"(["1", "2"])"));
  CHECK(j["covered"] == true);
  CHECK(j["points_approx"][0][0] == "1.000000000000");
}

TEST_CASE("sigma on F2 prints the algebraic value") {
  Run r = cli({"sigma", "--input", data("f2.json"), "--lambda", "0", "--engine", "exact"});
  CHECK(r.code == kSolved);
  CHECK(r.json()["sigma"] ==
        Json::parse(R"({"poly": [-1, 0, 2], "interval": ["11/16", "3/4"], "approx": "0.707106781187"})"));
  Run b = cli({"sigma", "--input", data("f2.json"), "--lambda", "0", "--engine", "bisect", "--eps", "1/1024"});
  CHECK(b.code == kSolved);
  Json s = b.json()["sigma"];
  Rat lo = parse_rat(s["lo"].get<std::string>()), hi = parse_rat(s["hi"].get<std::string>());
  CHECK(hi - lo <= Rat(1, 1024));
  CHECK(2 * lo * lo < 1);
  CHECK(2 * hi * hi > 1);
}

TEST_CASE("exit codes") {
  CHECK(cli({"decide", "--input", data("f3.json"), "--k", "3"}).code == kSolverLimit);
  CHECK(cli({"decide", "--input", data("f1.json"), "--k", "1"}).code == kNo);
  CHECK(cli({"decide", "--input", data("f1.json"), "--k", "2"}).code == kSolved);
  CHECK(cli({"hitsize", "--input", data("f3_boxed.json")}).code == kNo);
  CHECK(cli({"sigma", "--input", data("f3.json"), "--lambda", "1"}).code == kNo);
  CHECK(cli({"hit1", "--input", data("f1.json")}).code == kNo);
  CHECK(cli({"verify", "--input", data("f1.json"), "--points", data("f1_points.json")}).code == kSolved);
  CHECK(cli({"verify", "--input", data("f1.json"), "--points", data("f1_gap.json")}).code == kNo);
  CHECK(cli({"lift", "--input", data("f4.json"), "--t", "1"}).code == kSolverLimit);
  CHECK(cli({"sample-plot", "--input", data("f1.json")}).code == kSolverLimit);
  CHECK(cli({"dual-interval", "--input", data("triangle.json"), "--x", "1"}).code == kSolverLimit);
  CHECK(cli({"oracle", "--input", data("f3.json"), "--lambda", "1"}).code == kNo);
  CHECK(cli({"adapt", "decide", "--input", data("f4.json"), "--k", "1", "--t", "2/5"}).code == kNo);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli({"hitsize", "--input", data("missing.json")}).code == kInputError);
  CHECK(cli({"hitsize", "--input", temp_file("bad.json", "{not json")}).code == kInputError);
  CHECK(cli({"hitsize", "--input", temp_file("short.json", R"({"d": 1, "p": 1, "m": 2, "A0": [["1"]]})")}).code ==
        kInputError);
  CHECK(cli({"hitsize", "--input", data("f1.json"), "--bogus"}).code == kInputError);
  CHECK(cli({"frobnicate"}).code == kInputError);
  CHECK(cli({}).code == kInputError);
  CHECK(cli({"sigma", "--input", data("f1.json"), "--lambda", "x"}).code == kInputError);
  CHECK(cli({"sigma", "--input", data("f1.json"), "--engine", "fast"}).code == kInputError);
  CHECK(cli({"dual-interval", "--input", data("f1.json"), "--x", "1,2"}).code == kInputError);
  CHECK(cli({"eval", "--input", data("f1.json")}).code == kInputError);
}

TEST_CASE("eval, dual and dual-interval") {
  Run e = cli({"eval", "--input", data("f1.json"), "--lambda", "2"});
  CHECK(e.code == kSolved);
  CHECK(e.json()["b"] == Json::parse(R"(["-2", "3"])"));
  Run t = cli({"eval", "--input", data("triangle.json"), "--omega", "1/2,1/4"});
  CHECK(t.json()["b"] == Json::parse(R"(["-3/4", "1"])"));
  Run d = cli({"dual", "--input", data("f1.json")});
  CHECK(d.json()["family"]["domain"] == Json::parse(R"({"unrestricted": true})"));
  Run di = cli({"dual-interval", "--input", data("f2.json"), "--x", "7/10,1/2"});
  CHECK(di.json()["interval"] == Json::parse(R"(["0", "7/10"])"));
  Run em = cli({"dual-interval", "--input", data("f1.json"), "--x", "5"});
  CHECK(em.json()["empty"] == true);
}

TEST_CASE("hit1, verify and oracle reports") {
  Run h = cli({"hit1", "--input", data("triangle.json")});
  CHECK(h.code == kSolved);
  CHECK(h.json()["witness"] == Json::parse(R"(["1"])"));
  Run v = cli({"verify", "--input", data("f1.json"), "--points", data("f1_gap.json")});
  CHECK(v.json()["gap"]["text"] == "(1, 2]");
  Run v2 = cli({"verify", "--input", data("f2.json"), "--points", data("f2_points.json")});
  CHECK(v2.json()["covered"] == true);
  Run o = cli({"oracle", "--input", data("f2.json"), "--resolution", "201", "--lambda", "0", "--points",
               data("f2_points.json")});
  CHECK(o.code == kSolved);
  CHECK(o.json()["grid_hit_size"] == 2);
  CHECK(o.json()["sample_verify"] == true);
  CHECK(o.json()["sigma_bracket_approx"]["lo"].get<std::string>().substr(0, 10) == "0.70710678");
}

TEST_CASE("adapt subcommands") {
  Run d = cli({"adapt", "decide", "--input", data("f4.json"), "--k", "2", "--t", "1/4"});
  CHECK(d.code == kSolved);
  CHECK(d.json()["witnesses"].size() == 2);
  Run o = cli({"adapt", "optimize", "--input", data("f4.json"), "--k", "2", "--eps", "1/1000"});
  CHECK(o.code == kSolved);
  Rat lo = parse_rat(o.json()["value"]["lo"].get<std::string>());
  Rat hi = parse_rat(o.json()["value"]["hi"].get<std::string>());
  CHECK(lo < Rat(1, 4));
  CHECK(Rat(1, 4) <= hi);
  Run l = cli({"lift", "--input", data("lift_example.json"), "--t", "1"});
  CHECK(l.code == kSolved);
  CHECK(l.json()["dim"] == 3);
  CHECK(l.json()["p_hat"]["surface"][0] == Json::parse(R"({"product": 2, "left": 0, "right": 1})"));
}

TEST_CASE("sample-plot on F2") {
  Run r = cli({"sample-plot", "--input", data("f2.json"), "--resolution", "5"});
  CHECK(r.code == kSolved);
  int blocks = 0;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "omega,x1,x2,omega_exact,x1_exact,x2_exact");
  while (std::getline(in, line))
    if (line.rfind("# omega=", 0) == 0) {
      ++blocks;
      CHECK(line.find("status=polygon") != std::string::npos);
    }
  CHECK(blocks == 5);
  // at w = 0 the member is the rectangle [0, 2] x [1/2, 1]
  CHECK(r.out.find("# omega=0 status=polygon vertices=4") != std::string::npos);
}

TEST_CASE("sample-plot flags point and empty members") {
  // x1 = w, x2 = 0 exactly, empty for w > 1/2 through x1 <= 1/2
  auto f = fixtures::one_param(fixtures::mat({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}, {"1", "0"}}),
                               fixtures::mat({{"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}),
                               fixtures::vec({"0", "0", "0", "0", "1/2"}), fixtures::vec({"1", "-1", "0", "0", "0"}),
                               0, 1);
  std::string csv = sample_plot(f, 3);
  CHECK(csv.find("# omega=0 status=point vertices=1") != std::string::npos);
  CHECK(csv.find("# omega=1 status=empty vertices=0") != std::string::npos);
}

TEST_CASE("output file flag") {
  auto path = (std::filesystem::temp_directory_path() / "polyhit_test_out.json").string();
  Run r = cli({"hitsize", "--input", data("f1.json"), "--output", path});
  CHECK(r.code == kSolved);
  CHECK(r.out.empty());
  CHECK(read_json_file(path)["k"] == 2);
}

TEST_CASE("round trip of instances") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 30; ++k) {
    AffineFamily f = fixtures::random_family(rng, 1 + k % 5, 1 + k % 3, 1 + k % 3);
    CHECK(family_from_json(Json::parse(family_to_json(f).dump())) == f);
  }
  for (const char* name : {"f1.json", "f2.json", "f3.json", "triangle.json"}) {
    AffineFamily f = family_from_json(read_json_file(data(name)));
    CHECK(family_from_json(family_to_json(f)) == f);
  }
  AdaptInstance a = adapt_from_json(read_json_file(data("lift_example.json")));
  CHECK(adapt_from_json(adapt_to_json(a)) == a);
  AdaptInstance b = adapt_from_json(read_json_file(data("f4.json")));
  CHECK(b.box.size() == 2);
  CHECK(adapt_from_json(adapt_to_json(b)) == b);
  AdaptInstance c = fixtures::random_lift_instance(rng, 3, 2, 2);
  CHECK(adapt_from_json(adapt_to_json(c)) == c);
  CHECK(rat_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), InputError);
}

TEST_CASE("the installed binary follows the exit-code contract") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(POLYHIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("hitsize --input " + data("f1.json") + " --kmax 5") == 0);
  CHECK(status("decide --input " + data("f1.json") + " --k 1") == 1);
  CHECK(status("hitsize --input /nonexistent.json") == 2);
  CHECK(status("decide --input " + data("f3.json") + " --k 3") == 3);
}
