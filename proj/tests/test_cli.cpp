#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(SUPERGRASS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, Closure) {
  const auto r = cli("closure --k 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "15");
  const auto j = nlohmann::json::parse(cli("closure --k 8 --json").out);
  EXPECT_EQ(j["dim"], 45);
  EXPECT_EQ(j["basis"].size(), 45u);
}

TEST(Cli, BerezinBox) {
  const auto r = cli("berezin \"th1*th2*x^2\" --box 0 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/3\n");
  EXPECT_EQ(cli("berezin \"th2*th1*y + x\"").out, "-y\n");
}

TEST(Cli, VerifyMinkowskiOctonions) {
  const auto r = cli("verify minkowski --k 8");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  minkowski.O.reduction"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  minkowski.O.lorentz_closure"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  minkowski.O.supercharge_brackets"), std::string::npos);
}

TEST(Cli, ExpandAndBracket) {
  EXPECT_EQ(cli("expand \"th1*th2 + 2*x\"").out, "2*x + th1*th2\n");
  EXPECT_EQ(cli("expand \"th1*th1\"").out, "0\n");
  EXPECT_EQ(cli("bracket D D").out, "-2*d/dt\n");
  EXPECT_EQ(cli("bracket tau tau").out, "2*d/dt\n");
  const auto j = nlohmann::json::parse(cli("expand \"2/3*x*th1\" --json").out);
  EXPECT_EQ(j["terms"][0]["coeff"], "2/3");
}

TEST(Cli, Tables) {
  EXPECT_EQ(first_line(cli("table --k 4").out), "  u1   u2   u3   u4");
  const auto j = nlohmann::json::parse(cli("brackets --k 2 --json").out);
  EXPECT_EQ(j.size(), 16u);
  EXPECT_EQ(j[0]["coeffs"]["R11"], "-2");
}

TEST(Cli, Pullback) {
  const std::string path = ::testing::TempDir() + "morphism.json";
  std::ofstream(path) << R"({"m":1,"k":0,"L":2,"n":1,"l":0,"phi":["x"],"chi":[],"xi":[{"index":[1,2],"field":["1"]}]})";
  EXPECT_EQ(cli("pullback " + path + " \"y^2\"").out, "x^2 + 2*x*et1*et2\n");
}

TEST(Cli, Models) {
  const auto r = cli("model sigma32 --h \"u^2 - 1/3*u^3\"");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  bps"), std::string::npos);
  EXPECT_EQ(cli("model superparticle").code, 0);
  EXPECT_EQ(cli("model sigma32 --h \"u^5\"").code, 2);
}

TEST(Cli, DeterministicJson) {
  const auto a = cli("verify kernel --seed 3 --cases 20 --json");
  const auto b = cli("verify kernel --seed 3 --cases 20 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_TRUE(nlohmann::json::parse(cli("verify divalg --cases 5 --json --timing").out).contains("wall_seconds"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("verify kernel --bogus").code, 2);
  EXPECT_EQ(cli("verify nosuchsuite").code, 2);
  EXPECT_EQ(cli("closure --k 3").code, 2);
  EXPECT_EQ(cli("expand \"x +\"").code, 2);
}
