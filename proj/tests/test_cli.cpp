#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mmk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const auto path = fs::temp_directory_path() / ("mmk_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("tables match the golden files") {
  for (const std::string which : {"vir-mod-I", "min-I", "min-II", "su2-ext"}) {
    for (const auto& [format, ext] : {std::pair{"markdown", ".md"}, {"csv", ".csv"}}) {
      const auto r = run({"tables", "--which", which, "--format", format});
      REQUIRE(r.code == 0);
      CHECK_MESSAGE(r.out == slurp(fs::path(MMK_GOLDEN_DIR) / (which + ext)), which << ext);
    }
  }
}

TEST_CASE("table row counts") {
  const auto count_rows = [](const std::string& csv) {
    return std::count(csv.begin(), csv.end(), '\n') - 1;
  };
  CHECK(count_rows(run({"tables", "--which", "min-I", "--format", "csv"}).out) == 7);
  CHECK(count_rows(run({"tables", "--which", "min-II", "--format", "csv"}).out) == 4);
  CHECK(count_rows(run({"tables", "--which", "su2-ext", "--format", "csv"}).out) == 4);
  CHECK(run({"tables", "--which", "min-I"}).out.find("| 12 | (E_6,A_{12}) | 36 | 72 | 36 | 18 |") !=
        std::string::npos);
}

TEST_CASE("output is deterministic across runs and worker counts") {
  const std::vector<std::string> args{"invariants", "enumerate", "--level", "28", "--format", "json"};
  setenv("MMK_WORKERS", "1", 1);
  const auto one = run(args);
  setenv("MMK_WORKERS", "3", 1);
  const auto three = run(args);
  unsetenv("MMK_WORKERS");
  const auto dflt = run(args);
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(one.out == dflt.out);
  CHECK(run({"classify", "--max-m", "12"}).out == run({"classify", "--max-m", "12"}).out);
}

TEST_CASE("enumerate labels the SU(2) level 10 invariants") {
  const auto r = run({"invariants", "enumerate", "--algebra", "su2", "--level", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 3);
  std::vector<std::string> labels;
  for (const auto& inv : j) labels.push_back(inv.at("label"));
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"A11", "D7", "E6"});
}

TEST_CASE("emitted invariants round-trip through check and label") {
  for (const std::vector<std::string> selector : {std::vector<std::string>{"--m", "12"}, {"--level", "16"}}) {
    std::vector<std::string> args{"invariants", "enumerate"};
    args.insert(args.end(), selector.begin(), selector.end());
    const auto emitted = run(args);
    REQUIRE(emitted.code == 0);
    const auto path = write_temp("roundtrip.json", emitted.out);

    const auto checked = run({"invariants", "check", "--input", path.string()});
    CHECK(checked.code == 0);
    for (const auto& r : json::parse(checked.out)) CHECK(r.at("ok") == true);

    const auto labeled = run({"invariants", "label", "--input", path.string()});
    CHECK(labeled.code == 0);
    const auto in = json::parse(emitted.out);
    const auto out = json::parse(labeled.out);
    REQUIRE(in.size() == out.size());
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(in[i].at("label") == out[i].at("label"));
    fs::remove(path);
  }
}

TEST_CASE("label output carries the type I decision") {
  const auto emitted = run({"invariants", "enumerate", "--m", "11"});
  auto j = json::parse(emitted.out);
  json e6;
  for (const auto& inv : j)
    if (inv.at("label") == "(A10,E6)") e6 = inv;
  REQUIRE(!e6.is_null());
  const auto path = write_temp("e6.json", e6.dump());
  const auto r = run({"invariants", "label", "--input", path.string()});
  REQUIRE(r.code == 0);
  const auto out = json::parse(r.out);
  CHECK(out.at("label") == "(A10,E6)");
  CHECK(out.at("typeI") == true);
  CHECK(out.at("blocks").size() == 15);
  fs::remove(path);
}

TEST_CASE("check reports violations with exit code 1") {
  json bad = {{"algebra", {{"type", "su2"}, {"level", 4}}},
              {"Z", {{1, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}};
  const auto path = write_temp("bad.json", bad.dump());
  const auto r = run({"invariants", "check", "--input", path.string()});
  CHECK(r.code == 1);
  const auto out = json::parse(r.out);
  CHECK(out.at("ok") == false);
  CHECK(out.at("condition") == "T-support");
  CHECK(r.err.find("T-support") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("usage and domain errors exit with code 2") {
  CHECK(run({"tables", "--which", "nope"}).code == 2);
  CHECK(run({"tables", "--bogus"}).code == 2);
  CHECK(run({"modular-data", "--level", "3", "--m", "4"}).code == 2);
  CHECK(run({"modular-data", "--algebra", "su2", "--m", "4"}).code == 2);
  CHECK(run({"modular-data"}).code == 2);
  CHECK(run({"modular-data", "--m", "2"}).code == 2);
  CHECK(run({"fusion", "--m", "3", "--left", "2,2", "--right", "1,1"}).code == 2);
  CHECK(run({"fusion", "--m", "3", "--left", "x", "--right", "1,1"}).code == 2);
  CHECK(run({"invariants", "check", "--input", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"invariants", "enumerate", "--m", "13"}).code == 2);
  CHECK(run({"verify", "--max-m", "2"}).code == 2);
  CHECK(run({}).code == 2);

  const auto garbage = write_temp("garbage.json", "{not json");
  const auto r = run({"invariants", "label", "--input", garbage.string()});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  fs::remove(garbage);

  setenv("MMK_WORKERS", "zero", 1);
  CHECK(run({"invariants", "enumerate", "--level", "4"}).code == 2);
  unsetenv("MMK_WORKERS");
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("invariants") != std::string::npos);
}

TEST_CASE("modular data and fusion output") {
  const auto md = json::parse(run({"modular-data", "--m", "3"}).out);
  CHECK(md.at("algebra").at("type") == "minimal");
  CHECK(md.at("c") == "1/2");
  CHECK(md.at("h").at(1) == "1/16");
  CHECK(md.at("labels").size() == 3);

  const auto csv = run({"modular-data", "--level", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK_FALSE(csv.out.empty());

  const auto f = json::parse(run({"fusion", "--m", "4", "--left", "2,2", "--right", "2,2"}).out);
  CHECK(f.at("result") == json::parse("[[1,1],[1,2],[1,3],[1,4]]"));
  const auto s = json::parse(run({"fusion", "--level", "4", "--left", "2", "--right", "2"}).out);
  CHECK(s.at("result") == json::parse("[0,2,4]"));
}

TEST_CASE("classify output") {
  const auto r = run({"classify", "--m", "5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("label") == "(A4,A5)");
  CHECK(j[1].at("label") == "(A4,D4)");
  CHECK(j[1].at("counts") == json::parse("[8,16,8,6]"));

  const auto su2 = json::parse(run({"classify", "--algebra", "su2", "--level", "28"}).out);
  CHECK(su2.size() == 3);
  CHECK(run({"classify", "--m", "17", "--format", "markdown"}).out.find("(A16,E7)") != std::string::npos);
}

TEST_CASE("verify passes on small models") {
  const auto r = run({"verify", "--max-m", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}
