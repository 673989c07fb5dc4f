#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyptorsion/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = hyptorsion::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string curve(const std::string& name) { return std::string(HYPTORSION_DATA_DIR) + "/curves/" + name; }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count and the small-N note") {
    auto r = run_cli({"torsion", "count", "--curve", curve("ex1.curve"), "--char", "2", "--N", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "32\n");
    auto s = run_cli({"torsion", "utilde", "--curve", curve("ex1.curve"), "--char", "0", "--N", "4"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("1\n", 0) == 0);
    CHECK(s.out.find("3<=N<=2g: empty") != std::string::npos);
  }

  TEST_CASE("json and human output agree") {
    for (const std::string p : {"0", "2", "3"}) {
      std::vector<std::string> base = {"torsion", "utilde", "--curve", curve("ex1.curve"), "--char", p, "--N", "5"};
      auto human = run_cli(base);
      base.push_back("--json");
      auto machine = run_cli(base);
      REQUIRE(machine.code == 0);
      const json j = json::parse(machine.out);
      CHECK(j["utilde"]["text"].get<std::string>() + "\n" == human.out);
      auto count = run_cli({"torsion", "count", "--curve", curve("ex1.curve"), "--char", p, "--N", "5"});
      CHECK(std::to_string(j["count"].get<long>()) + "\n" == count.out);
      CHECK(j["utilde"]["degree"].get<int>() == static_cast<int>(j["utilde"]["coefficients"].size()) - 1);
      CHECK(json::parse(j.dump()) == j);
    }
    auto d = run_cli({"divpoly", "delta", "--curve", curve("ex1.curve"), "--char", "2", "--N", "5", "--json"});
    CHECK(json::parse(d.out)["degree"].get<int>() == -1);
    auto b = run_cli({"torsion", "bounds", "--g", "2", "--N", "7", "--json"});
    const json bj = json::parse(b.out);
    auto bh = run_cli({"torsion", "bounds", "--g", "2", "--N", "7"});
    CHECK(bh.out.find("general_bound: " + std::to_string(bj["general_bound"].get<long>())) != std::string::npos);
    CHECK(bh.out.find("delta_bound: " + std::to_string(bj["delta_bound"].get<long>())) != std::string::npos);
  }

  TEST_CASE("char-search reports 911") {
    auto r = run_cli({"char-search", "--curve", curve("ex1.curve"), "--N", "7", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["exceptional_primes"] == json::array({"911"}));
  }

  TEST_CASE("inline curves, rank-at, verify and divpoly") {
    auto r = run_cli({"torsion", "utilde", "--P", "0,0,0,0,0,1", "--Q", "1", "--N", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "x^6 - x\n");
    auto t = run_cli({"torsion", "rank-at", "--curve", curve("ex1.curve"), "--N", "5", "--x0", "0"});
    CHECK(t.out.find("is_torsion_x: true") != std::string::npos);
    auto u = run_cli({"torsion", "rank-at", "--curve", curve("ex1.curve"), "--N", "5", "--x0", "2", "--json"});
    CHECK(json::parse(u.out)["is_torsion_x"] == false);
    auto g = run_cli({"torsion", "rank-at", "--curve", curve("ex1.curve"), "--char", "2", "--N", "5", "--x0", "0,1",
                      "--degree", "4", "--json"});
    CHECK(json::parse(g.out)["is_torsion_x"] == true);
    auto v = run_cli({"jacobian", "verify", "--curve", curve("ex1.curve"), "--char", "2", "--N", "5", "--json"});
    REQUIRE(v.code == 0);
    const json vj = json::parse(v.out);
    CHECK(vj["rows"].size() == 16);
    for (const auto& row : vj["rows"]) {
      CHECK(row.contains("x0_field_degree"));
      CHECK(row["order_divides_N"] == true);
      CHECK(row["in_two_torsion"] == false);
    }
    auto c = run_cli({"divpoly", "cantor-p", "--curve", curve("ex1.curve"), "--N", "5"});
    auto d = run_cli({"divpoly", "delta", "--curve", curve("ex1.curve"), "--N", "5"});
    CHECK(c.code == 0);
    CHECK(!d.out.empty());
    auto k = run_cli({"torsion", "check-div", "--curve", curve("ex1.curve"), "--N", "5", "--r", "1", "--json"});
    CHECK(json::parse(k.out)["passed"] == true);
  }

  TEST_CASE("scan output") {
    auto r = run_cli({"scan", "--curve", curve("ex1.curve"), "--char", "0", "--n-from", "6", "--n-to", "8", "--primes",
                      "3,7", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 3);
    for (const auto& e : j["entries"]) CHECK(e["verdict"] == "EMPTY");
    auto bad = run_cli({"scan", "--curve", curve("ex1.curve"), "--char", "3", "--n-from", "6", "--n-to", "8",
                        "--primes", "7"});
    CHECK(bad.code == 1);
  }

  TEST_CASE("thread count does not change output") {
    std::vector<std::string> base = {"torsion", "utilde", "--P", "1,3,0,0,0,0,0,1", "--Q", "0,1", "--N", "11", "--json"};
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    CHECK(run_cli(one).out == run_cli(four).out);
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"torsion"}).code == 1);
    CHECK(run_cli({"torsion", "count", "--curve", curve("ex1.curve"), "--N", "5", "--bogus"}).code == 1);
    CHECK(run_cli({"torsion", "count", "--curve", "/nonexistent.curve", "--N", "5"}).code == 1);
    CHECK(run_cli({"torsion", "count", "--curve", curve("ex1.curve"), "--char", "5", "--N", "7"}).code == 1);
    CHECK(run_cli({"torsion", "count", "--curve", curve("ex1.curve"), "--char", "4", "--N", "7"}).code == 1);
    const auto dir = scratch_dir("hyptorsion-cli-bad");
    std::ofstream(dir / "bad.curve") << "char: 0\nP: 0,1,x\n";
    CHECK(run_cli({"torsion", "count", "--curve", (dir / "bad.curve").string(), "--N", "5"}).code == 1);
    std::ofstream(dir / "even.curve") << "char: 0\nP: 0,0,0,0,1\n";
    CHECK(run_cli({"torsion", "count", "--curve", (dir / "even.curve").string(), "--N", "5"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
  }

  TEST_CASE("a corrupted cache is a theorem violation, exit 2") {
    const auto dir = scratch_dir("hyptorsion-cli-cache");
    std::vector<std::string> args = {"torsion", "utilde", "--curve", curve("ex1.curve"), "--N", "7",
                                     "--cache-dir", dir.string()};
    auto first = run_cli(args);
    REQUIRE(first.code == 0);
    CHECK(run_cli(args).out == first.out);
    std::filesystem::path file;
    for (const auto& e : std::filesystem::directory_iterator(dir)) file = e.path();
    REQUIRE(!file.empty());
    std::vector<std::string> lines;
    {
      std::ifstream in(file);
      for (std::string line; std::getline(in, line);) lines.push_back(line);
    }
    lines.back() = "1";
    {
      std::ofstream out(file);
      for (const auto& line : lines) out << line << "\n";
    }
    auto broken = run_cli(args);
    CHECK(broken.code == 2);
    CHECK(broken.err.find("theorem violation") != std::string::npos);
  }
}
