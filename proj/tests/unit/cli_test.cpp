#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POSETDIM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("posetdim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, GenerateAndMeasureDimension) {
  ASSERT_EQ(run("gen sd 3 -o " + path("s3.txt")).code, 0);
  const auto r = run("--json dim " + path("s3.txt"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("value"), 3);
}

TEST_F(Cli, VerifyRealizer) {
  ASSERT_EQ(run("gen sd 3 -o " + path("s3.txt")).code, 0);
  ASSERT_EQ(run("dim " + path("s3.txt") + " -o " + path("r.txt")).code, 0);
  EXPECT_EQ(run("verify " + path("s3.txt") + " --realizer " + path("r.txt")).code, 0);
  std::ifstream in(path("r.txt"));
  std::string first;
  std::getline(in, first);
  std::ofstream(path("short.txt")) << first << "\n";
  EXPECT_EQ(run("verify " + path("s3.txt") + " --realizer " + path("short.txt")).code, 1);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("dim " + path("missing.txt")).code, 2);
  EXPECT_EQ(run("gen nosuchkind 3").code, 2);
  EXPECT_EQ(run("").code, 2);
  std::ofstream(path("bad.txt")) << "elements 2\nrel 0 5\n";
  EXPECT_EQ(run("dim " + path("bad.txt")).code, 2);
  ASSERT_EQ(run("gen sd 6 -o " + path("s6.txt")).code, 0);
  EXPECT_EQ(run("--budget 1 dim " + path("s6.txt")).code, 3);
  EXPECT_EQ(run("gen plane 4").code, 2);
}

TEST_F(Cli, FractionalOutputIsExact) {
  ASSERT_EQ(run("gen antichain 2 -o " + path("a2.txt")).code, 0);
  const auto r = run("--json fdim " + path("a2.txt"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("value").at("exact"), "2");
}

TEST_F(Cli, CheckIsDeterministic) {
  const auto a = run("--json check sd-exact fano");
  const auto b = run("--json check sd-exact fano");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(run("check nosuchcheck").code, 2);
}

}  // namespace
