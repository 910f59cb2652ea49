#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(STARKVQE_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "starkvqe_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, SelftestPasses) { EXPECT_EQ(run("selftest"), 0); }

TEST(Cli, BadConfigIsExitTwo) {
  const auto cfg = scratch() / "bad.json";
  std::ofstream(cfg) << R"({"molecule": "H2", "no_such_key": 1})";
  EXPECT_EQ(run("sweep --config " + cfg.string()), 2);
  EXPECT_EQ(run("sweep --molecule He2"), 2);
  EXPECT_EQ(run("point --d -0.5"), 2);
  EXPECT_EQ(run("sweep --d-step banana"), 2);
}

TEST(Cli, PointAndStarkRoundTrip) {
  const auto dir = scratch();
  const auto csv = dir / "mini.csv";
  ASSERT_EQ(run("sweep --molecule H2 --d-min 0.7 --d-max 0.7 --fields 0,0.01,-0.01 --solver exact --out " +
                csv.string()),
            0);
  EXPECT_TRUE(fs::exists(csv));
  EXPECT_TRUE(fs::exists(dir / "mini.json"));
  const auto table = dir / "stark.csv";
  EXPECT_EQ(run("stark --in " + csv.string() + " --out " + table.string()), 0);
  EXPECT_TRUE(fs::exists(table));
  EXPECT_EQ(run("point --molecule LiH --d 1.6 --field 0.001 --solver exact"), 0);
  EXPECT_EQ(run("integrals --molecule H2 --d 0.7 --out " + (dir / "ints.json").string()), 0);
  fs::remove_all(dir);
}
