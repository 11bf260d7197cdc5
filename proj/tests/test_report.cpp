#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "powalt/report.hpp"

using namespace powalt;
using nlohmann::json;

#ifndef POWALT_CLI
#define POWALT_CLI "powalt"
#endif

namespace {
  struct Run {
    int         code = 0;
    std::string out;
  };

  Run run(std::string const& args, std::string const& env = "") {
    std::string out = ::testing::TempDir() + "powalt_cli_out.txt";
    std::string cmd = env + " " + POWALT_CLI + " " + args + " > " + out + " 2>&1";
    int         rc  = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
  }

  std::string data(char const* f) {
    return data_path(f);
  }
}  // namespace

TEST(Report, Shape) {
  auto r = make_report("exponent", "definite", {{"N", 6}}, {"note"});
  EXPECT_EQ(r["schema_version"], 1);
  EXPECT_EQ(r["command"], "exponent");
  EXPECT_EQ(r["status"], "definite");
  EXPECT_EQ(r["notes"][0], "note");
}

TEST(Report, TextRenderingRoundTrips) {
  json r = make_report("x", "unknown",
                       {{"b", {1, 2, {{"z", nullptr}, {"y", json::array()}}}},
                        {"a", {{"nested", {{"k", "v"}}}, {"empty", json::object()}}},
                        {"s", "text"}});
  std::string text = render_text(r);
  EXPECT_EQ(render_text(json::parse(r.dump())), text);
  EXPECT_EQ(render_text(json::parse(r.dump(2))), text);
  EXPECT_LT(text.find("a:"), text.find("b:"));
}

TEST(Cli, ExponentReport) {
  auto r = run("exponent --graph " + data("path34.gv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("N: 6"), std::string::npos);
}

TEST(Cli, ProbeReport) {
  auto r = run("probe-stabilisation --gog " + data("bs12.json") + " --ray b --window 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("strict_decrease"), std::string::npos);
  EXPECT_NE(r.out.find("<a^8>"), std::string::npos);
}

TEST(Cli, PairCheckCertificateVerifies) {
  std::string cert = ::testing::TempDir() + "powalt_cert.json";
  std::string js   = ::testing::TempDir() + "powalt_report.json";
  auto r = run("pair-check --gog " + data("trivial-amalgam.json") + " --g a --h b --cert-out "
               + cert + " --json " + js);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified_length: 10"), std::string::npos);
  // the JSON report re-renders to the printed text
  std::ifstream in(js);
  json          report = json::parse(in);
  EXPECT_EQ(render_text(report), r.out);
  EXPECT_EQ(run("certify-verify --cert " + cert).code, 0);
}

TEST(Cli, ArtinCertificateVerifies) {
  std::string cert = ::testing::TempDir() + "powalt_artin_cert.json";
  auto r = run("pair-check --graph " + data("path34.gv") + " --g a*c --h b --max-word-len 6"
               + " --cert-out " + cert);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run("certify-verify --cert " + cert).code, 0);
}

TEST(Cli, UnknownExitsTwo) {
  auto r = run("pair-check --gog " + data("bs12.json") + " --g a --h b --max-word-len 6");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("stabilisation-unverified"), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  auto r = run("pair-check --gog " + data("bs12.json") + " --g a*c --h b");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("'c'"), std::string::npos);
  EXPECT_NE(r.out.find("position 2"), std::string::npos);
  EXPECT_EQ(run("exponent --graph /nonexistent.gv").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("exponent --graph " + data("path34.gv"), "POWALT_PROFILE=bogus").code, 1);
}

TEST(Cli, ProfileChangesDefaults) {
  auto r = run("pair-check --gog " + data("trivial-amalgam.json") + " --g a --h b",
               "POWALT_PROFILE=quick");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified_length: 6"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run("classify-graph --graph " + data("star3.gv")).code, 0);
  EXPECT_EQ(run("split --graph " + data("cycle4.gv")).code, 0);
  EXPECT_EQ(run("reduce --graph " + data("path34.gv")).code, 0);
  EXPECT_EQ(run("dihedral --m 4").code, 0);
  EXPECT_EQ(run("upa-derive --facts " + data("facts/f2xf2.json")).code, 0);
  EXPECT_EQ(run("law-check --gog " + data("bs12.json") + " --law [[x1,x2],[x3,x4]] --samples 10")
                .code,
            0);
  EXPECT_EQ(run("growth --graph " + data("edge3.gv") + " --m 6").code, 1);
  EXPECT_EQ(run("bench --data " + std::string(POWALT_DATA_DIR)).code, 0);
}
