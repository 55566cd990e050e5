#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args) {
  Result r;
  FILE* pipe = popen((std::string("'") + TMEASURE_CLI_PATH + "' " + args + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& tag) {
  return std::filesystem::temp_directory_path() / ("tmeasure_cli_" + tag + "_" + std::to_string(::getpid()) + ".json");
}

}  // namespace

TEST_CASE("corollary4") {
  const Result r = cli("corollary4 --numeric");
  CHECK(r.status == 0);
  CHECK(r.out.find("2.5005955") != std::string::npos);
  CHECK(r.out.find("2.765537") != std::string::npos);
  CHECK(cli("corollary4 --precision 32").status == 2);
}

TEST_CASE("bound and verify") {
  const auto path = temp_file("bound");
  const Result b = cli("bound --alpha 3 --beta 1 --out " + path.string());
  CHECK(b.status == 0);
  CHECK(cli("verify --cert " + path.string()).status == 0);

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  in.close();
  std::string json = text.str();
  const auto at = json.find("\"K\": ");
  REQUIRE(at != std::string::npos);
  json.insert(at + 5, "1");  // K -> 1K
  std::ofstream(path) << json;
  const Result v = cli("verify --cert " + path.string());
  CHECK(v.status == 1);
  CHECK(v.out.find("FAILED") != std::string::npos);

  std::ofstream(path) << "{ not json";
  CHECK(cli("verify --cert " + path.string()).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("single cell") {
  const Result rejected = cli("bound --alpha 3 --beta 1 --K 2 --L 2 --E 2");
  CHECK(rejected.status == 1);
  CHECK(cli("bound --alpha 3 --beta 1 --K 31 --L 5 --E 37").status == 0);
}

TEST_CASE("usage errors") {
  CHECK(cli("bound --alpha 2i --beta 1").status == 2);
  CHECK(cli("bound --alpha 3 --beta 0 --K 31 --L 5 --E 37").status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("lemmas --suite nonsense").status == 2);
}

TEST_CASE("lemmas and tables") {
  const Result r = cli("lemmas --suite feldman");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const Result t = cli("hp-table --nodes 0,1 --params 1,1");
  CHECK(t.status == 0);
}

TEST_CASE("diagnose") {
  const Result r = cli("diagnose --alpha 3 --beta 1 --K 2 --L 3 --E 3 --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"mu\"") != std::string::npos);
}
