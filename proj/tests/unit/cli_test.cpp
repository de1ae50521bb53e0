#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run hwinv(const std::string& args) {
  const std::string command = std::string(HWINV_PATH) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buffer{};
  for (std::size_t n; (n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) run.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

TEST(Cli, InfoJson) {
  const auto run = hwinv("info 'sp(6)' --format json");
  ASSERT_EQ(run.code, 0);
  const auto doc = json::parse(run.out);
  EXPECT_EQ(doc["r"], 6);
  EXPECT_EQ(doc["rho_beta"], 6);
  EXPECT_EQ(json::parse(hwinv("info e6 --format json").out)["rho_beta"], 11);
  EXPECT_EQ(json::parse(hwinv("info 'su(1,1)' --format json").out)["r"], 1);
}

TEST(Cli, AnalyzeWorkedExample) {
  const auto run = hwinv("analyze 'su(4,3)' --lambda0=eps:0,0,0,-20,8,6,6 --z 4 --format json");
  ASSERT_EQ(run.code, 0);
  const auto doc = json::parse(run.out);
  EXPECT_EQ(doc["k"], 2);
  EXPECT_EQ(doc["gk_dim"], 10);
  EXPECT_EQ(doc["verdict"], "unitary");
  EXPECT_EQ(doc["thresholds"].size(), 3u);
}

TEST(Cli, AnalyzeTextAndFwInput) {
  const auto run = hwinv("analyze 'sp(6)' --fw=0,0,0,4,5,-23/2");
  ASSERT_EQ(run.code, 0);
  EXPECT_NE(run.out.find("half_integral"), std::string::npos);
  EXPECT_NE(run.out.find("GKdim:         20"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const auto a = hwinv("analyze e7 --fw=1,0,2,0,0,0,-9 --format json");
  const auto b = hwinv("analyze e7 --fw=1,0,2,0,0,0,-9 --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(hwinv("analyze 'su(2,2)' --fw=-1,0,0 --strict").code, 3);
  EXPECT_EQ(hwinv("analyze 'su(2,2)' --fw=-1,0,0").code, 0);
  EXPECT_EQ(hwinv("analyze 'su(2,2)' --fw=1,x,0").code, 2);
  EXPECT_EQ(hwinv("analyze 'su(2,2)' --fw=1,0").code, 2);
  EXPECT_EQ(hwinv("analyze g2 --fw=0,0").code, 2);
  EXPECT_EQ(hwinv("analyze e6 --eps=0,0").code, 2);
  EXPECT_EQ(hwinv("analyze e6").code, 2);
  EXPECT_EQ(hwinv("info").code, 2);
  EXPECT_EQ(hwinv("frobnicate").code, 2);
  EXPECT_EQ(hwinv("--help").code, 0);
}

TEST(Cli, Antichains) {
  const auto run = hwinv("antichains e7 --format json");
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(json::parse(run.out)["antichains"].size(), 3u);
}

TEST(Cli, Hasse) {
  const auto run = hwinv("hasse 'su(3,2)'");
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(run.out.rfind("digraph hasse {", 0), 0u);
  const auto highlighted = hwinv("hasse 'sp(6)' --highlight fw:0,0,0,4,5,-15 --z 4");
  ASSERT_EQ(highlighted.code, 0);
  EXPECT_NE(highlighted.out.find("style=filled"), std::string::npos);
  EXPECT_EQ(hwinv("hasse 'su(3,2)' --highlight fw:0,0,0,0").out.find("style=filled"), std::string::npos);
}

TEST(Cli, Thresholds) {
  const auto run = hwinv("thresholds 'sp(6)' --lambda0=eps:-6,-6,-6,-6,-10,-15 --format json");
  ASSERT_EQ(run.code, 0);
  const auto doc = json::parse(run.out);
  EXPECT_EQ(doc["thresholds"][1], (json{{"num", 23}, {"den", 2}}));
  EXPECT_EQ(hwinv("thresholds 'sp(6)'").code, 2);
}

TEST(Cli, Batch) {
  const auto dir = std::filesystem::temp_directory_path() / "hwinv_cli_test";
  std::filesystem::create_directories(dir);
  const auto in = dir / "in.jsonl";
  const auto out = dir / "out.jsonl";
  {
    std::ofstream f(in);
    f << R"j({"family":"su(4,3)","lambda0":{"eps":[0,0,0,-20,8,6,6]},"z":4})j" << "\n";
    f << R"j({"family":"sp(6)","lambda0":{"eps":[-6,-6,-6,-6,-10,-15]},"z":3.5})j" << "\n";
  }
  ASSERT_EQ(hwinv("batch " + in.string() + " " + out.string()).code, 0);
  std::ifstream f(out);
  int lines = 0;
  for (std::string line; std::getline(f, line);) {
    EXPECT_EQ(json::parse(line)["verdict"], "unitary");
    ++lines;
  }
  EXPECT_EQ(lines, 2);

  { std::ofstream empty(in); }
  ASSERT_EQ(hwinv("batch " + in.string() + " " + out.string()).code, 0);
  EXPECT_EQ(std::filesystem::file_size(out), 0u);
  EXPECT_EQ(hwinv("batch " + (dir / "missing.jsonl").string() + " " + out.string()).code, 2);
  std::filesystem::remove_all(dir);
}

}  // namespace
