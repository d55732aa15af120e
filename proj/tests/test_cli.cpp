#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "frobschur/io.hpp"
#include "frobschur/multiparameter.hpp"

using namespace frobschur;

namespace {
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FROBSCHUR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}
}  // namespace

TEST(Cli, DocumentedExamples) {
  auto r = run("expand --mu 2 --params special");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(strip(r.out), "s[2] - 1/2 s[1]");
  r = run("ribbon --shape 4,2,2/1,1 --params custom:-1=-1,0=0,1=1,2=2,3=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(strip(r.out), "(u+v)(u+1)(u-2)(u-3)(v+0)(v+1)");
  r = run("dim --mu 1 --nu 2,1 --ratio");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(strip(r.out), "1 = 1");
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(strip(run("dim --nu 3,2").out), "5");
  EXPECT_EQ(strip(run("dim --mu 1 --nu 2,2").out), "2");
  EXPECT_EQ(strip(run("eval --mu 2,1 --params special --x 3/2 --y 3/2").out), "3");
  EXPECT_EQ(strip(run("tableaux --mu 1,1 --max-entry 1").out), "1 / 1");
  EXPECT_EQ(run("tableaux --mu 2,2 --max-entry 1").out, "");
  EXPECT_EQ(strip(run("ribbon --shape 2,1 --params special --symbolic").out), "(u+v)(u-a_{1})(v+a_{0})");
  EXPECT_EQ(strip(run("expand --mu 1,1 --params zero --basis h").out), "-h[2] + h[1,1]");
  auto t = run("transition --mu 2 --from special --to zero --json");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out), json::parse(R"([{"partition":[2],"coeff":"1"},{"partition":[1],"coeff":"-1/2"}])"));
}

TEST(Cli, EvalMethodsAgree) {
  const std::vector<std::string> points{"--x 1 --y 2", "--x 1/2 --y -3", "--x 1,2 --y 3,5", "--x -1,1/3 --y 2,-1/2"};
  for (const auto& mu : partitions_up_to(4))
    for (const auto& pt : points) {
      std::string base = "eval --mu '" + to_string(mu) + "' --params special " + pt + " --method ";
      std::string jt = strip(run(base + "jt").out);
      EXPECT_EQ(strip(run(base + "comb").out), jt);
      EXPECT_EQ(strip(run(base + "sp").out), jt);
      auto fact = run(base + "fact");
      bool two = pt.find(',') != std::string::npos;
      if (mu.depth() == (two ? 2 : 1))
        EXPECT_EQ(strip(fact.out), jt) << to_string(mu) << " " << pt;
      else
        EXPECT_EQ(fact.code, 2);
      EXPECT_EQ(run(base + "all").code, 0);
    }
}

TEST(Cli, Interpolate) {
  std::string path = ::testing::TempDir() + "frobschur_input.txt";
  std::ofstream(path) << "s[2]\n";
  auto r = run("interpolate --degree 2 --params special --input " + path + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"([{"partition":[2],"coeff":"1"},{"partition":[1],"coeff":"1/2"}])"));
  std::ofstream(path) << R"([{"partition":[1],"coeff":"1"}])";
  EXPECT_EQ(run("interpolate --degree 1 --params zero --input " + path).code, 3);
  EXPECT_EQ(run("interpolate --degree 1 --params special --input /nonexistent/file").code, 2);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& mu : partitions_up_to(4)) {
    auto r = run("expand --mu '" + to_string(mu) + "' --params special --json");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(to_json(symfunc_from_json(j)).dump(), strip(r.out));
    EXPECT_EQ(symfunc_from_json(j), frobenius_schur(mu));
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("expand").code, 2);
  EXPECT_EQ(run("expand --mu 1,2 --params special").code, 2);
  EXPECT_EQ(run("expand --mu 2 --params weird").code, 2);
  EXPECT_EQ(run("eval --mu 1 --x a --y 1").code, 2);
  EXPECT_EQ(run("ribbon --shape 2,2 --params special").code, 2);
  EXPECT_EQ(run("verify --suite t99").code, 2);
  // strict window too small, then allowed with a warning
  EXPECT_EQ(run("expand --mu 3,1 --params custom:0=1,1=2").code, 3);
  EXPECT_EQ(run("--permissive expand --mu 3,1 --params custom:0=1,1=2").code, 0);
  EXPECT_EQ(run("eval --mu 1 --params special --x 1,1 --y 2,3 --method sp").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Verify) {
  auto r = run("verify --suite t5 --max-size 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  auto j = run("--json verify --suite t11 --max-size 3");
  EXPECT_EQ(j.code, 0);
  auto parsed = json::parse(j.out);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0]["suite"], "t11");
  EXPECT_TRUE(parsed[0]["passed"].get<bool>());
}

TEST(Cli, VerifyAllDefaultBound) {
  auto r = run("verify --suite all --max-size 5");
  EXPECT_EQ(r.code, 0) << r.out;
}
