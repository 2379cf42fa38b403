// End-to-end tests that drive the built command line binary through a
// shell, checking byte-exact output and exit codes.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef SPECHT_CLI_BIN
#error "SPECHT_CLI_BIN must point at the built binary"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs `specht <args>` and captures stdout (or stdout+stderr).
RunResult run(const std::string& args, bool merge_stderr = false,
              const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(SPECHT_CLI_BIN) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("specht-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string cache_env() const {
    return "SPECHT_CACHE_DIR=" + path.string() + " ";
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("value queries print bare decimals", "[cli]") {
  RunResult r = run("char 4,4,4 5,5,2");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  r = run("dim 2,1,1/1");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run("char 1,1,1,1 2,2");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("border strips are listed with heights", "[cli]") {
  RunResult r = run("border-strips 4,4,4 5");
  CHECK(r.code == 0);
  CHECK(r.out == "4,3 ht=1\n3,3,1 ht=2\n");

  // nothing to remove: the whole shape is not one strip
  r = run("border-strips 4,4,4 12");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("straightening output is byte exact", "[cli]") {
  RunResult r = run("straighten 3,3,2 1,2,5/4,3,7/6,8");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "-1 1,4,5/2,6,7/3,8\n"
        "+1 1,3,5/2,6,7/4,8\n"
        "-1 1,3,5/2,4,7/6,8\n"
        "-1 1,2,5/3,6,7/4,8\n"
        "+1 1,2,5/3,4,7/6,8\n");

  // a standard filling straightens to itself
  r = run("straighten 2,2 1,2/3,4");
  CHECK(r.code == 0);
  CHECK(r.out == "+1 1,2/3,4\n");
}

TEST_CASE("skew characters agree between the two input forms", "[cli]") {
  RunResult by_type = run("skew-char 4,4,4/4,3 5");
  CHECK(by_type.code == 0);
  CHECK(by_type.out == "-1\n");

  RunResult by_perm = run("skew-char 4,4,4/4,3 '(1,2,3,4,5)'");
  CHECK(by_perm.code == 0);
  CHECK(by_perm.out == "-1\n");
}

TEST_CASE("malformed input exits 2 and names the offender", "[cli]") {
  RunResult r = run("char 4,x,4 5,5,2", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("'x'") != std::string::npos);

  r = run("dim 2,1,1//1", true);
  CHECK(r.code == 2);

  r = run("char 3,4 2", true);  // parts out of order
  CHECK(r.code == 2);

  r = run("verify bogus-suite", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("bogus-suite") != std::string::npos);

  r = run("border-strips 4,4,4 0", true);
  CHECK(r.code == 2);

  r = run("frobnicate 1", true);  // unknown subcommand
  CHECK(r.code == 2);

  r = run("char 4,4,4", true);  // missing required argument
  CHECK(r.code == 2);

  r = run("char 4,4,4 5,5,2 extra", true);
  CHECK(r.code == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
  RunResult r = run("--help", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("char") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);

  r = run("verify --help", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("--budget") != std::string::npos);
}

TEST_CASE("character tables print and cache transparently", "[cli]") {
  TempDir dir;
  const std::string golden =
      "label\t4\t3,1\t2,2\t2,1,1\t1,1,1,1\n"
      "4\t1\t1\t1\t1\t1\n"
      "3,1\t-1\t0\t-1\t1\t3\n"
      "2,2\t0\t-1\t2\t0\t2\n"
      "2,1,1\t1\t0\t-1\t-1\t3\n"
      "1,1,1,1\t-1\t1\t1\t-1\t1\n";

  RunResult cold = run("table 4", false, dir.cache_env());
  CHECK(cold.code == 0);
  CHECK(cold.out == golden);
  CHECK(fs::exists(dir.path / "s4.json"));

  RunResult warm = run("table 4", false, dir.cache_env());
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);
}

TEST_CASE("table json output matches the cached file byte for byte", "[cli]") {
  TempDir dir;
  RunResult cold =
      run("table 3 --format json --cache-dir " + dir.path.string());
  CHECK(cold.code == 0);
  CHECK(cold.out == slurp(dir.path / "s3.json"));

  RunResult warm =
      run("table 3 --format json --cache-dir " + dir.path.string());
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);

  nlohmann::json j = nlohmann::json::parse(cold.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["n"] == 3);
}

TEST_CASE("table validation flags", "[cli]") {
  TempDir dir;
  RunResult r =
      run("table 4 --check orthogonality --check trace", true, dir.cache_env());
  CHECK(r.code == 0);

  // the trace check refuses sizes past the limit with a usage error
  r = run("table 9 --check trace", true, dir.cache_env());
  CHECK(r.code == 2);
  CHECK(r.out.find("--trace-limit") != std::string::npos);

  r = run("--threads 2 table 5 --check orthogonality", true, dir.cache_env());
  CHECK(r.code == 0);
}

TEST_CASE("a corrupt cache entry is recomputed in place", "[cli]") {
  TempDir dir;
  {
    std::ofstream out(dir.path / "s4.json");
    out << "{ \"schema_version\": 2, \"garbage\": true";
  }
  RunResult r = run("table 4 --check orthogonality", false, dir.cache_env());
  CHECK(r.code == 0);

  nlohmann::json j = nlohmann::json::parse(slurp(dir.path / "s4.json"));
  CHECK(j["schema_version"] == 1);
  CHECK(j["n"] == 4);
}

TEST_CASE("verification runs from the command line", "[cli]") {
  RunResult r = run("verify --suite mn-vs-trace --budget 3 --format json");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "mn-vs-trace");
  CHECK(j["suites"][0]["budget"] == 3);
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["suites"][0]["failures"] == 0);

  r = run("verify mn-vs-trace garnir-zero --budget 3", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("all suites passed") != std::string::npos);

  r = run("verify --suite skew-ncycle --budget 4 --format text", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("skew-ncycle") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}
