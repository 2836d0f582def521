#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = wzw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("tensor subcommand, human output") {
  auto r = run({"tensor", "--alg", "A1", "--lhs", "1", "--rhs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(2)") != std::string::npos);
  CHECK(r.out.find("(0)") != std::string::npos);
  CHECK(r.out.find("total multiplicity: 2") != std::string::npos);

  auto e6 = run({"tensor", "--alg", "E6", "--lhs", "0,1,0,0,0,0", "--rhs", "1,0,0,0,2,0"});
  CHECK(e6.code == 0);
  CHECK(count_lines(e6.out) == 15);  // 14 channels + total line
  CHECK(e6.out.find("total multiplicity: 17") != std::string::npos);
}

TEST_CASE("fuse subcommand with all three methods") {
  for (const char* method : {"rs", "kw", "verlinde"}) {
    auto r = run({"fuse", "--alg", "E6", "--level", "3", "--lhs", "0,1,0,0,0,0", "--rhs",
                  "1,0,0,0,2,0", "--method", method});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 5);
    CHECK(r.out.find("total multiplicity: 4") != std::string::npos);
  }
}

TEST_CASE("domain errors exit 1 and name the violated precondition") {
  auto above = run({"fuse", "--alg", "A2", "--level", "1", "--lhs", "2,0", "--rhs", "1,0"});
  CHECK(above.code == 1);
  CHECK(above.err.find("level above 1") != std::string::npos);

  auto nondom = run({"tensor", "--alg", "A2", "--lhs", "-1,0", "--rhs", "1,0"});
  CHECK(nondom.code == 1);
  CHECK(nondom.err.find("not dominant") != std::string::npos);

  auto badalg = run({"smatrix", "--alg", "E5", "--level", "2"});
  CHECK(badalg.code == 1);
  CHECK(badalg.err.find("not a simple algebra") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with usage text") {
  auto r = run({"bogus-subcommand"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  auto missing = run({"tensor", "--alg", "A1", "--lhs", "1"});
  CHECK(missing.code == 2);
}

TEST_CASE("json output is schema-shaped and byte-stable") {
  std::vector<std::string> args = {"fuse", "--alg",  "A2",        "--level", "2",
                                   "--lhs", "1,0",   "--rhs",     "0,1",     "--json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(a.out.find("\"command\": \"fuse\"") != std::string::npos);
  CHECK(a.out.find("\"total_multiplicity\"") != std::string::npos);

  auto s = run({"smatrix", "--alg", "A1", "--level", "2", "--json"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"s1\"") != std::string::npos);
  CHECK(s.out.find("\"alcove\"") != std::string::npos);
}

TEST_CASE("rep-type, automorphisms, sigma, census, fs-indicator, path-matrix") {
  auto rt = run({"rep-type", "--alg", "D6", "--weight", "0,1,0,0,1,0"});
  CHECK(rt.code == 0);
  CHECK(rt.out.find("quaternionic") != std::string::npos);

  auto au = run({"automorphisms", "--alg", "E6", "--level", "3", "--weight", "0,1,0,0,0,0"});
  CHECK(au.code == 0);
  CHECK(au.out.find("tau=1") != std::string::npos);
  CHECK(au.out.find("order 3") != std::string::npos);

  auto sg = run({"sigma", "--alg", "G2", "--level", "2"});
  CHECK(sg.code == 0);
  CHECK(count_lines(sg.out) == 4);

  auto cs = run({"census", "--alg", "G2", "--level", "4"});
  CHECK(cs.code == 0);
  CHECK(cs.out.find("accidental: 2") != std::string::npos);

  auto fs = run({"fs-indicator", "--alg", "D5", "--level", "2"});
  CHECK(fs.code == 0);
  CHECK(fs.out.find("I=") != std::string::npos);

  auto pm = run({"path-matrix", "--alg", "A2", "--level", "2"});
  CHECK(pm.code == 0);
  CHECK(pm.out.find("alcove (6)") != std::string::npos);
}

TEST_CASE("verify-theorems smoke grid") {
  auto r = run({"verify-theorems", "--grid", "smoke"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all theorem checks passed") != std::string::npos);

  auto bad = run({"verify-theorems", "--grid", "nope"});
  CHECK(bad.code == 2);
}

TEST_CASE("help exits zero") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fusion") != std::string::npos);
}
