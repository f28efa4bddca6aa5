#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(NCPOLY_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("single computations") {
  auto r = cli("ugb star --n 3");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["size"] == 3);
  CHECK(j["equals_claimed"] == true);
  CHECK(j["degree_bound"] == 6);  // 2 * 2 + 2

  r = cli("ugb pair --n 2");
  CHECK(json::parse(r.out)["degree_bound"] == 8);

  r = cli("code path --l 1");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["n"] == 3);

  r = cli("state-polytope pair --n 2 --method both");
  CHECK(r.status == 0);
  j = json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["alg35"]["f_vector"] == json({5, 5}));
  CHECK(j["fibers"]["f_vector"] == json({5, 5}));

  r = cli("pierced star --n 3 --k 0");
  CHECK(json::parse(r.out)["pierced"] == false);
  r = cli("nested --n 3");
  CHECK(json::parse(r.out)["count"] == 16);
  r = cli("gb star --n 2 --weight 1,2,3,4");
  CHECK(json::parse(r.out)["initial_ideal"] == json({"t2*t3"}));
  r = cli("graver pair --n 1 --pretty");
  CHECK(r.out.find("\n  ") != std::string::npos);
  CHECK(json::parse(r.out)["size"] == 1);
}

TEST_CASE("code files") {
  const auto path = std::filesystem::temp_directory_path() / "ncpoly_cli_venn.txt";
  std::ofstream(path) << "100\n010\n001\n110\n101\n011\n111\n";
  auto r = cli("gb --code-file " + path.string());
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["max_degree"] == 3);
  CHECK(j["pierced_1"] == false);
  r = cli("graver --code-file " + path.string());
  CHECK(r.status == 0);
  CHECK(cli("code --code-file /nonexistent/file").status == 1);
}

TEST_CASE("exit codes") {
  CHECK(cli("ugb star --n 6").status == 2);
  CHECK(json::parse(cli("ugb pair --n 5").out).contains("refused"));
  CHECK(cli("conjecture --l 7").status == 2);
  CHECK(cli("nested --n 9").status == 2);
  CHECK(cli("ugb").status == 1);
  CHECK(cli("nosuch").status == 1);
  CHECK(cli("verify-paper --suite star --n 6").status == 2);
}

TEST_CASE("verify-paper output") {
  const auto r = cli("verify-paper --suite star --n 2 --jobs 2");
  CHECK(r.status == 0);
  std::vector<std::string> ids;
  std::size_t start = 0;
  for (std::size_t nl; (nl = r.out.find('\n', start)) != std::string::npos; start = nl + 1) {
    const auto j = json::parse(r.out.substr(start, nl - start));
    ids.push_back(j["id"]);
    CHECK(j["status"] == "pass");
  }
  CHECK(ids == std::vector<std::string>{"AC01", "AC03", "AC04", "AC05", "AC08", "AC09", "AC11"});
  CHECK(cli("verify --suite pair --n 1").status == 0);

  const auto cache = std::filesystem::temp_directory_path() / "ncpoly_cli_cache";
  std::filesystem::remove_all(cache);
  const auto c = cli("conjecture --l 2 --cache-dir " + cache.string());
  CHECK(c.status == 0);
  CHECK(json::parse(c.out)["report"]["f_vector"] == json({6, 6, 1}));
  CHECK(!std::filesystem::is_empty(cache));
  CHECK(cli("conjecture --l 2 --cache-dir " + cache.string()).out == c.out);
}
