#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = PATCHWORK_CLI_PATH;

fs::path work_dir() {
  fs::path p = fs::temp_directory_path() / "patchwork_cli_tests";
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, std::string* output = nullptr) {
  fs::path out = work_dir() / "last_output.txt";
  std::string cmd = cli + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  if (output) *output = read_file(out);
  return WEXITSTATUS(rc);
}

const char* kStaircase = R"({"d": 2, "n": 3, "trees": [
  [[1,1],[1,2],[1,3],[2,3]],
  [[1,1],[1,2],[2,2],[2,3]],
  [[1,1],[2,1],[2,2],[2,3]]]})";

const char* kHeights = R"({"H": [[0,3,2],[0,0,0],[1,3,0]]})";
const char* kSigns =
    R"({"A": [["-","+","-"],["+","+","-"],["-","-","-"]]})";

}  // namespace

TEST_CASE("validate accepts the staircase file") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  std::string out;
  CHECK(run("validate " + (dir / "staircase.json").string(), &out) == 0);
  CHECK(out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("validate names the offending tree") {
  fs::path dir = work_dir();
  write_file(dir / "bad.json", R"({"d": 2, "n": 3, "trees": [
    [[1,1],[1,2],[1,3],[2,3]],
    [[1,1],[2,1],[1,2],[2,2]],
    [[1,1],[2,1],[2,2],[2,3]]]})");
  std::string out;
  CHECK(run("validate " + (dir / "bad.json").string(), &out) == 2);
  CHECK(out.find("\"bad_tree\": 1") != std::string::npos);
}

TEST_CASE("missing and malformed files exit with code one") {
  fs::path dir = work_dir();
  CHECK(run("validate " + (dir / "no_such_file.json").string()) == 1);
  write_file(dir / "broken.json", "{\"d\": 2,");
  std::string out;
  CHECK(run("validate " + (dir / "broken.json").string(), &out) == 1);
  CHECK(out.find("parse") != std::string::npos);
}

TEST_CASE("unknown flags are rejected") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  CHECK(run("validate --frobnicate " + (dir / "staircase.json").string()) == 1);
}

TEST_CASE("subdivide emits the six trees of the worked example") {
  fs::path dir = work_dir();
  write_file(dir / "heights.json", kHeights);
  std::string out;
  CHECK(run("subdivide " + (dir / "heights.json").string(), &out) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("trees").size() == 6);
}

TEST_CASE("verify runs the whole pipeline on the worked example") {
  fs::path dir = work_dir();
  write_file(dir / "heights.json", kHeights);
  write_file(dir / "signs.json", kSigns);
  std::string out;
  CHECK(run("verify " + (dir / "heights.json").string() + " " +
                (dir / "signs.json").string(),
            &out) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("pass") == true);
  // The three labels of the worked quotient example appear.
  std::string flat = out;
  CHECK(flat.find("-++0-+") != std::string::npos);
  CHECK(flat.find("-++0-0") != std::string::npos);
  CHECK(flat.find("+++0--") != std::string::npos);
  // Every representation assertion id appears exactly once.
  for (const char* id :
       {"phi_injective", "phi_surjective", "phi_order_isomorphism",
        "delta_membership", "euler_characteristic", "homology"}) {
    auto first = flat.find(std::string("\"") + id + "\"");
    REQUIRE(first != std::string::npos);
    CHECK(flat.find(std::string("\"") + id + "\"", first + 1) ==
          std::string::npos);
  }
}

TEST_CASE("verify reports are byte identical across runs") {
  fs::path dir = work_dir();
  write_file(dir / "heights.json", kHeights);
  write_file(dir / "signs.json", kSigns);
  std::string a, b;
  run("verify " + (dir / "heights.json").string() + " " +
          (dir / "signs.json").string(),
      &a);
  run("verify " + (dir / "heights.json").string() + " " +
          (dir / "signs.json").string(),
      &b);
  CHECK(a == b);
}

TEST_CASE("degenerate heights exit with a verification failure") {
  fs::path dir = work_dir();
  write_file(dir / "flat.json", R"({"H": [[0,0],[0,0]]})");
  std::string out;
  CHECK(run("subdivide " + (dir / "flat.json").string(), &out) == 2);
  CHECK(out.find("degenerate") != std::string::npos);
  // The pipeline fails the same way at its first stage.
  write_file(dir / "signs_flat.json", R"({"A": [["+","+"],["+","+"]]})");
  std::string out2;
  CHECK(run("verify " + (dir / "flat.json").string() + " " +
                (dir / "signs_flat.json").string(),
            &out2) == 2);
  CHECK(out2.find("degenerate") != std::string::npos);
}

TEST_CASE("patchwork exports a hasse diagram") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  write_file(dir / "signs2.json", R"({"A": [["+","-","+"],["-","+","+"]]})");
  fs::path dot = dir / "hasse.dot";
  std::string out;
  CHECK(run("patchwork " + (dir / "staircase.json").string() + " " +
                (dir / "signs2.json").string() + " --dot " + dot.string(),
            &out) == 0);
  CHECK(read_file(dot).find("digraph") == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("graded") == true);
  CHECK(j.at("augmented_lattice") == true);
  CHECK(j.at("rank_range") == nlohmann::json::array({1, 2}));
}

TEST_CASE("covector lines come out sorted") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  write_file(dir / "signs2.json", R"({"A": [["+","-","+"],["-","+","+"]]})");
  std::string out;
  CHECK(run("covectors " + (dir / "staircase.json").string() + " " +
                (dir / "signs2.json").string(),
            &out) == 0);
  std::vector<std::string> lines;
  std::stringstream ss(out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(lines.size() > 3);
}

TEST_CASE("covector budget exits with code three") {
  fs::path dir = work_dir();
  write_file(dir / "heights.json", kHeights);
  write_file(dir / "signs.json", kSigns);
  CHECK(run("covectors --budget 1 " + (dir / "heights.json").string() + " " +
            (dir / "signs.json").string()) == 3);
}

TEST_CASE("render writes an svg with closed loci") {
  fs::path dir = work_dir();
  write_file(dir / "heights.json", kHeights);
  write_file(dir / "signs.json", kSigns);
  fs::path svg = dir / "out.svg";
  std::string out;
  CHECK(run("render " + (dir / "heights.json").string() + " " +
                (dir / "signs.json").string() + " " + svg.string(),
            &out) == 0);
  CHECK(read_file(svg).find("<svg") == 0);
  CHECK(out.find("\"closed_curves\": true") != std::string::npos);
}

TEST_CASE("render rejects rank two input") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  write_file(dir / "signs2.json", R"({"A": [["+","+","+"],["+","+","+"]]})");
  CHECK(run("render " + (dir / "staircase.json").string() + " " +
            (dir / "signs2.json").string() + " " +
            (work_dir() / "no.svg").string()) == 1);
}

TEST_CASE("chirotope export is stable") {
  fs::path dir = work_dir();
  write_file(dir / "staircase.json", kStaircase);
  write_file(dir / "signs2.json", R"({"A": [["+","+","+"],["+","+","+"]]})");
  std::string out;
  CHECK(run("chirotope " + (dir / "staircase.json").string() + " " +
                (dir / "signs2.json").string(),
            &out) == 0);
  CHECK(out == "1,2:+\n1,3:+\n2,3:+\n");
}
