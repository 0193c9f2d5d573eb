#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(NUMRAD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CliBinary, ExitStatuses) {
  EXPECT_EQ(run("paper-examples"), 0);
  EXPECT_EQ(run("check --trials 0"), 2);
  EXPECT_EQ(run("check --trials 3 --inject-bug LEM16"), 1);
  EXPECT_EQ(run("check --trials 3"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("radius"), 2);
  EXPECT_EQ(run("check --trials lots"), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST(CliBinary, RadiusOnFile) {
  const auto path = std::filesystem::temp_directory_path() / "numrad_cli_binary.json";
  std::ofstream(path) << R"({"n": 2, "entries": [[2,0],[1,0],[0,0],[1,0]]})";
  EXPECT_EQ(run("radius " + path.string() + " --json"), 0);
  EXPECT_EQ(run("norms " + path.string() + " --all"), 0);
  std::ofstream(path) << "not json";
  EXPECT_EQ(run("radius " + path.string()), 2);
  std::filesystem::remove(path);
}
