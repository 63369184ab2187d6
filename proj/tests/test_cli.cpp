#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"

using namespace leavitt;
using namespace leavitt::testing;

namespace {

  struct Run {
    int         status = -1;
    std::string out;
  };

  // Runs the CLI with stderr folded into stdout.
  Run cli(std::string const& args) {
    std::string cmd = std::string("\"") + LEAVITT_CLI + "\" " + args + " 2>&1";
    Run         r;
    FILE*       p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int st   = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::string graph_arg(std::string const& name) {
    return "--graph \"" + fixture(name) + "\"";
  }

  std::string hom_arg(std::string const& name) {
    return "--hom \"" + fixture(name) + "\"";
  }

  std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) {
      s.pop_back();
    }
    return s;
  }

}  // namespace

TEST(Cli, CheckTrimmable) {
  auto ok = cli("check-trimmable " + graph_arg("display7.json") + " --v0 v0");
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_NE(ok.out.find("trimmable at v0"), std::string::npos);

  auto no = cli("check-trimmable " + graph_arg("display8.json") + " --v0 v0 --format json");
  EXPECT_EQ(no.status, 2) << no.out;
  auto j = json::parse(no.out);
  EXPECT_EQ(j["failure"], "new-sink");
  EXPECT_EQ(j["witness"], "v1");
}

TEST(Cli, NormalizeRoundTrips) {
  auto r = cli("normalize " + graph_arg("display7.json") + " --expr \"e1 . e1^*\"");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(trim(r.out), "[v1] - e2 . e2^*");

  // The printed form parses back to the same element.
  auto alg = make_algebra(display7());
  EXPECT_EQ(parse_element<Rational>(alg, trim(r.out)),
            parse_element<Rational>(alg, "e1 . e1^*"));

  auto rnd = cli("normalize " + graph_arg("display7.json")
                 + " --expr \"x0^* . x0 . e2^* . e2\" --random-order --seed 9");
  EXPECT_EQ(rnd.status, 0) << rnd.out;
  EXPECT_EQ(trim(rnd.out), "[v0]");
}

TEST(Cli, BasisAndOracleRank) {
  auto b = cli("basis " + graph_arg("single-loop.json") + " -L 2 --format json");
  ASSERT_EQ(b.status, 0) << b.out;
  auto j = json::parse(b.out);
  ASSERT_TRUE(j.contains("count"));
  EXPECT_EQ(j["count"], 5);

  auto o = cli("oracle-rank " + graph_arg("display7.json") + " -L 3");
  EXPECT_EQ(o.status, 0) << o.out;
  EXPECT_NE(o.out.find("24"), std::string::npos) << o.out;
}

TEST(Cli, ApplyHom) {
  auto ok = cli("apply-hom " + hom_arg("corrupt-delta-double-u.json") + " --expr e1");
  EXPECT_EQ(ok.status, 3) << ok.out;

  auto forced = cli("apply-hom " + hom_arg("corrupt-delta-double-u.json")
                    + " --expr e1 --allow-invalid --format json");
  auto j      = json::parse(forced.out);
  EXPECT_EQ(j["image"], "e1 (x) u^2");
}

TEST(Cli, VerifyPullbackExitCodes) {
  auto pass = cli("verify-pullback " + graph_arg("display7.json") + " --v0 v0");
  EXPECT_EQ(pass.status, 0) << pass.out;

  auto refuse = cli("verify-pullback " + graph_arg("display8.json") + " --v0 v0");
  EXPECT_EQ(refuse.status, 2) << refuse.out;

  for (auto const* f : {"corrupt-f-wrong-vertex.json", "corrupt-f-kills-loop.json",
                        "corrupt-delta-double-u.json"}) {
    auto r = cli("verify-pullback " + hom_arg(f) + " --no-rotated");
    EXPECT_EQ(r.status, 3) << f << "\n" << r.out;
  }
}

TEST(Cli, JsonOutputIsStableWithoutTimings) {
  std::string args = "verify-pullback " + graph_arg("display7.json")
                     + " --v0 v0 -L 3 --slack 5 -D 1 --format json --no-timings";
  auto a = cli(args);
  auto b = cli(args);
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto j = json::parse(a.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(Cli, UsageAndDataErrors) {
  EXPECT_EQ(cli("").status, 64);
  EXPECT_EQ(cli("no-such-command").status, 64);
  EXPECT_EQ(cli("normalize " + graph_arg("display7.json")).status, 64);
  EXPECT_EQ(cli("normalize " + graph_arg("display7.json") + " --expr \"e1 +\"").status, 64);
  EXPECT_EQ(cli("verify-pullback " + graph_arg("display7.json") + " --v0 v0 -L 4 --slack 2")
                .status,
            64);

  auto bad = std::filesystem::temp_directory_path() / "leavitt-cli-bad.json";
  std::ofstream(bad) << "{\"vertices\": [\"a\"], \"edges\": [{\"id\": 1}]}";
  EXPECT_EQ(cli("basis --graph \"" + bad.string() + "\" -L 1").status, 65);
}
