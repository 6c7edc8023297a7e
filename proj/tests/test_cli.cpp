#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"
#include "catnerve/json_io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path corpus_dir() { return fs::path(CATNERVE_SOURCE_DIR) / "corpus"; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, bool with_corpus = true) {
  if (with_corpus) {
    args.insert(args.begin(), {"--corpus", corpus_dir().string()});
  }
  std::ostringstream out;
  std::ostringstream err;
  int code = catnerve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) {
    words.push_back(w);
  }
  return words;
}

fs::path temp_file(std::string const& name, std::string const& text) {
  auto p = fs::temp_directory_path() / ("catnerve_test_" + name);
  std::ofstream(p) << text;
  return p;
}

bool contains(std::string const& hay, std::string const& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("expected exit codes for the corpus") {
  std::ifstream in(corpus_dir() / "EXPECTED");
  REQUIRE(in);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    auto words = split(line);
    int expected = std::stoi(words.front());
    words.erase(words.begin());
    auto r = run(words);
    CHECK_MESSAGE(r.code == expected, line << "\n" << r.out << r.err);
    ++lines;
  }
  CHECK(lines > 10);
}

TEST_CASE("ho of the circle") {
  auto r = run({"ho", "s1.sset"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "objects: 1"));
  CHECK(contains(r.out, "generators: 1"));
  CHECK(contains(r.out, "relations: 0"));
  CHECK(contains(r.out, "verdict: pass"));
}

TEST_CASE("colimit output") {
  auto r = run({"colimit", "coeq.diag"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "leg b: q(0<1) = 0<1"));
  CHECK(contains(r.out, "infinite"));
}

TEST_CASE("json reports") {
  auto r = run({"--json", "check", "segal", "boundary2"});
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == catnerve::report_schema);
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["exit_code"] == 1);
  auto ok = nlohmann::json::parse(run({"--json", "nerve", "fin2"}).out);
  CHECK(ok["verdict"] == "pass");
}

TEST_CASE("json export can be read back") {
  auto r = run({"export", "json", "coeq"});
  REQUIRE(r.code == 0);
  auto p = temp_file("coeq.json", r.out);
  auto again = run({"-f", p.string(), "colimit", "coeq"}, false);
  CHECK(again.code == 0);
  fs::remove(p);
}

TEST_CASE("parse and validation errors") {
  auto bad = temp_file("bad.cat", "category bad {\n  objects: a\n  arrows: f a -> a\n}\n");
  auto r = run({"nerve", bad.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "3:"));
  fs::remove(bad);

  auto broken = temp_file("broken.sset",
                          "sset broken dim 1 {\n  0: a b\n  1: aa ab bb\n"
                          "  face 1 0: aa -> a, ab -> b, bb -> b\n"
                          "  face 1 1: aa -> a, ab -> a, bb -> b\n"
                          "  degen 0 0: a -> aa, b -> ab\n}\n");
  CHECK(run({"ho", broken.string()}).code == 1);
  fs::remove(broken);
}

TEST_CASE("unknown names and commands") {
  CHECK(run({"nerve", "nowhere"}).code == 2);
  CHECK(run({"eq", "bn", "e", "x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("inconclusive results") {
  auto r = run({"--fuel", "1", "eq", "bn", "e", "e.e"});
  CHECK((r.code == 1 || r.code == 3));
  CHECK(run({"--guard", "1", "check", "adjunction"}).code == 3);
}

TEST_CASE("corpus directory from the environment") {
  ::setenv("CATNERVE_CORPUS", corpus_dir().string().c_str(), 1);
  CHECK(run({"ho", "s1"}, false).code == 0);
  ::setenv("CATNERVE_CORPUS", "/nonexistent/catnerve", 1);
  CHECK(run({"ho", "s1"}, false).code == 2);
  ::unsetenv("CATNERVE_CORPUS");
}
