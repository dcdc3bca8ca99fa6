#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#ifndef LIGHTSOUT_CLI_PATH
#error "LIGHTSOUT_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LIGHTSOUT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), k);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

int count_lines(const std::string& text) { return static_cast<int>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("check") {
  const Run k2 = run("check --graph 'A_'");
  CHECK(k2.status == 1);
  CHECK(contains(k2.out, "verdict: unsolvable"));
  const Run k1 = run("check --graph '@'");
  CHECK(k1.status == 0);
  CHECK(contains(k1.out, "verdict: solvable"));
  const Run p3 = run("check --graph 'n=3; 0-1,1-2'");
  CHECK(p3.status == 0);
  CHECK(contains(p3.out, "odd dominating set: {1} size 1"));
  CHECK(run("check --graph 'n=3; 0-7'").status == 2);
  CHECK(run("check --graph '~~~'").status == 2);
  CHECK(run("check").status != 0);
}

TEST_CASE("solve") {
  const Run p3 = run("solve --graph 'n=3; 0-1,1-2' --on all");
  CHECK(p3.status == 0);
  CHECK(contains(p3.out, "press: {1}"));
  CHECK(contains(p3.out, "replay: all off"));
  const Run none = run("solve --graph 'n=4; 0-1,2-3' --on none");
  CHECK(none.status == 0);
  CHECK(contains(none.out, "press: {}"));
  const Run k2 = run("solve --graph 'n=2; 0-1' --on 0");
  CHECK(k2.status == 1);
  CHECK(contains(k2.out, "unsolvable configuration"));
}

TEST_CASE("sample is reproducible") {
  const Run a = run("sample --n 9 --e 12 --count 20 --seed 5");
  const Run b = run("sample --n 9 --e 12 --count 20 --seed 5");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "generator=mt19937_64"));
  CHECK(count_lines(a.out) == 22);
}

TEST_CASE("table") {
  const Run csv = run("table --n 8 --trials 200 --seed 1");
  CHECK(csv.status == 0);
  CHECK(count_lines(csv.out) == 28);
  CHECK(csv.out.rfind("n,e,trials,successes,p_hat,moe95\n", 0) == 0);
  const Run w1 = run("table --n 8 --trials 1000 --seed 42 --workers 1");
  const Run w8 = run("table --n 8 --trials 1000 --seed 42 --workers 8");
  CHECK(w1.out == w8.out);
  const Run exact = run("table --n 5 --exact");
  CHECK(exact.status == 0);
  CHECK(contains(exact.out, "5,2,2,1,1/2,0.500000"));
  const Run top = run("table --n 11 --trials 50 --seed 3");
  for (int e = 51; e <= 54; ++e) CHECK(contains(top.out, "11," + std::to_string(e) + ",50,0,0.000000,0.000000"));
}

TEST_CASE("exact") {
  const Run r = run("exact --n 8 --e 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "8,2,2,1,1/2,0.500000"));
  CHECK(run("exact --n 14 --e 40").status == 2);
}

TEST_CASE("census") {
  const Run d2 = run("census --d 2");
  CHECK(d2.status == 0);
  CHECK(contains(d2.out, "2,6,1\n"));
  const Run d4 = run("census --d 4 --n-max 15");
  CHECK(contains(d4.out, "4,12,4\n"));
  CHECK(contains(d4.out, "4,15,4\n"));
  const Run u = run("census --m 2 --n 8 --n-max 9");
  CHECK(contains(u.out, "2,8,4\n"));
  CHECK(contains(u.out, "2,9,6\n"));
}

TEST_CASE("validate-sampler") {
  const Run r = run("validate-sampler --n 6 --e 5 --samples 200000 --seed 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "dof=14"));
  CHECK(contains(r.out, "result: pass"));
}
