#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SPINCALC_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SPINCALC_GOLDEN_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, D12Run) {
  const Outcome r = run("d12 run");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("b1": "9867")"));
  EXPECT_TRUE(contains(r.out, R"("b0": "1926")"));
  EXPECT_TRUE(contains(r.out, R"("a": "13245")"));
  EXPECT_TRUE(contains(r.out, R"("slope": "4415/642")"));
  EXPECT_TRUE(contains(r.out, R"("violates_slope_conjecture": true)"));
  EXPECT_TRUE(contains(r.out, R"("slope_minus_41_6": "14/321")"));
}

TEST(Cli, D12DumpMatchesGolden) {
  const Outcome r = run("d12 run --dump-intermediates");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("d12_dump.json"));
}

TEST(Cli, PushZ3MatchesGolden) {
  const Outcome r = run("pic push --g 3 --class zg");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("class": "308*lambda - 32*delta0 - 76*delta1")"));
  EXPECT_EQ(r.out, golden("push_z3.json"));
}

TEST(Cli, CertD12MatchesGolden) {
  const Outcome r = run("cert --g 12 --aux d12");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("cert_12_d12.json"));
}

TEST(Cli, CertBnAtTwelveRefused) {
  const Outcome r = run("cert --g 12 --aux bn", true);
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(contains(r.out, "for g = 12 there is no Brill-Noether divisor"));
}

TEST(Cli, CertBnPasses) {
  const Outcome r = run("cert --g 20 --aux bn");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("mu": "16/21")"));
  EXPECT_TRUE(contains(r.out, R"("verdict": "pass")"));
}

TEST(Cli, JsonIsByteIdentical) {
  for (const char* args : {"d12 run --dump-intermediates", "numbers --g 9", "pic solve-zg --g 5",
                           "ring eval --preset jac:g=11,d=14,r=4 \"c1*eta*theta^5\""}) {
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, FormatAfterSubcommand) {
  const Outcome r = run("numbers --g 8 --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "command: numbers"));
  EXPECT_TRUE(contains(r.out, "elapsed: "));
  const Outcome j = run("--format json numbers --g 8");
  EXPECT_EQ(j.out.front(), '{');
}

TEST(Cli, RingEval) {
  Outcome r = run("ring eval --preset jac:g=11,d=14,r=4 \"gamma^2*theta\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("normalized": "-2*eta*theta^2")"));
  r = run("ring eval --preset jac:g=11,d=14,r=4 \"eta*theta^6\"");
  EXPECT_TRUE(contains(r.out, R"("intersection_number": "332640")"));
  r = run("ring eval --preset jac:g=3,d=2,r=0 \"eta*theta^3 + 2*gamma^2*theta^2\"");
  EXPECT_TRUE(contains(r.out, R"("integral": "-18")"));
  r = run("ring eval --preset curve:g=5 \"omega^2 + omega*lambda\"");
  EXPECT_TRUE(contains(r.out, R"("pushforward": "20*lambda")"));
  r = run("ring eval --preset jac:g=11,d=14,r=4 \"k*eta\"");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, PicPair) {
  Outcome r = run("pic pair --g 10 --curve F:3 --class zg");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("pairing": "56")"));
  r = run("pic pair --g 10 --curve H0 --class zg");
  EXPECT_TRUE(contains(r.out, R"("pairing": "16")"));
  r = run("pic pair --g 12 --curve P --class k");
  EXPECT_TRUE(contains(r.out, R"("pairing": "0")"));
  r = run("pic pair --g 7 --curve F0 --class \"lambda - 12*alpha0 + alpha1\"");
  EXPECT_TRUE(contains(r.out, R"("pairing": "-144")"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("ring eval --preset jac:g=11,d=14,r=4 \"1/0\"").code, 2);
  EXPECT_EQ(run("ring eval --preset jac:g=11,d=14,r=4 \"eta + lambda\"").code, 2);
  EXPECT_EQ(run("pic pair --g 12 --curve C0 --class zg").code, 3);
  EXPECT_EQ(run("pic push --g 4 --class bn").code, 3);
  EXPECT_EQ(run("cert --g 12 --aux bn").code, 1);
  EXPECT_EQ(run("cert --g 12 --aux other").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, ParseErrorReportsOffset) {
  const Outcome r = run("ring eval --preset jac:g=11,d=14,r=4 \"1/0\"");
  EXPECT_TRUE(contains(r.out, R"("offset": 2)"));
  EXPECT_TRUE(contains(r.out, R"("kind": "parse")"));
}

TEST(Cli, Numbers) {
  const Outcome r = run("numbers --g 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("odd": "28")"));
  EXPECT_TRUE(contains(r.out, R"("scorza_genus": 19)"));
  EXPECT_TRUE(contains(r.out, R"("canonical_pairing": "-18")"));
}

TEST(Cli, PullAndSolve) {
  Outcome r = run("pic pull --g 3 \"9*lambda - delta0 - 3*delta1\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("class": "9*lambda - alpha0 - 3*alpha1 - 2*beta0 - 3*beta1")"));
  r = run("pic solve-zg --g 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, R"("degenerate": true)"));
  EXPECT_TRUE(contains(r.out, R"("matches_closed_form": true)"));
}
