#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grkoszul/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int s = grk::run_cli(args, out, err);
  return {s, out.str(), err.str()};
}

bool well_formed(const std::string& report) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) return false;
    if (line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) return false;
  }
  return true;
}

bool has_line(const std::string& report, const std::string& line) {
  return ("\n" + report).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("koszul-check on B5") {
  auto r = run({"algebra", "koszul-check", "model:b5", "--max-degree", "8"});
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "# koszul: true (exact, gldim 2)"));
  CHECK(has_line(r.out, "koszul=true"));
  CHECK(has_line(r.out, "# grkoszul 0.1.0"));
  CHECK(has_line(r.out, "# param max-degree=8"));
  CHECK(well_formed(r.out));
}

TEST_CASE("kl table prints all-ones tables for A1") {
  auto r = run({"kl", "table", "--type", "A", "--rank", "1", "--e", "5", "--max-length", "6", "--no-cache"});
  CHECK(r.status == 0);
  CHECK(well_formed(r.out));
  std::istringstream in(r.out);
  std::size_t entries = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind("P(", 0) == 0 || line.rfind("Q(", 0) == 0) {
      ++entries;
      CHECK(line.substr(line.find('=')) == "=1");
    }
  CHECK(entries > 0);
}

TEST_CASE("the table cache returns the same report") {
  auto dir = std::filesystem::temp_directory_path() / "grkoszul-cache-test";
  std::filesystem::remove_all(dir);
  ::setenv("GRKOSZUL_CACHE_DIR", dir.c_str(), 1);
  std::vector<std::string> args{"kl", "table", "--type", "A", "--rank", "2", "--e", "5", "--max-length", "3"};
  auto first = run(args), second = run(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(!std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
  ::unsetenv("GRKOSZUL_CACHE_DIR");
}

TEST_CASE("predict layers") {
  auto r = run({"predict", "layers", "--type", "A", "--rank", "1", "--e", "5", "--lambda", "5"});
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "layer.0=5"));
  CHECK(has_line(r.out, "layer.1=3"));
  CHECK_FALSE(has_line(r.out, "layer.2=3"));
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"qha", "check", "model:b9"},
           {"qha", "reciprocity", "model:b5"},
           {"alcove", "bounds", "--type", "A", "--rank", "2", "--p", "7", "--weight", "3,3", "--m-max", "1"},
           {"kl", "lcf", "--type", "A", "--rank", "2", "--e", "5", "--lambda", "2,3"},
           {"algebra", "koszul-check", "model:b9", "--jobs", "3"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(well_formed(a.out));
  }
}

TEST_CASE("exit statuses") {
  CHECK(run({"algebra", "build", "/nonexistent.qalg"}).status == 2);
  CHECK(run({"algebra", "frobnicate"}).status == 2);
  CHECK(run({"kl", "lcf", "--e", "5", "--lambda", "4"}).status == 3);
  CHECK(run({"kl", "lcf", "--e", "5", "--lambda", "30", "--region", "jantzen"}).status == 3);
  CHECK(run({"qha", "check", "model:dual"}).status == 3);
  CHECK(run({"module", "slices", "model:b5", "P(7)"}).status == 2);
  auto bad = std::filesystem::temp_directory_path() / "grkoszul-bad.qalg";
  std::ofstream(bad) << "field Q\nvertex 1\narrow a 1 9\n";
  auto r = run({"algebra", "build", bad.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find(":3:") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("the output flag writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "grkoszul-out.txt";
  auto r = run({"alcove", "roots", "--type", "B", "--rank", "2", "--output", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(has_line(s.str(), "h=4"));
  std::filesystem::remove(path);
}
