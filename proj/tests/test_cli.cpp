#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(DESPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> parse_lines(const std::string& out) {
  std::vector<json> lines;
  size_t pos = 0;
  while (pos < out.size()) {
    size_t nl = out.find('\n', pos);
    if (nl == std::string::npos) nl = out.size();
    std::string line = out.substr(pos, nl - pos);
    if (!line.empty()) lines.push_back(json::parse(line));
    pos = nl + 1;
  }
  return lines;
}

std::string strip_timing(const std::string& out) {
  auto lines = parse_lines(out);
  std::string res;
  for (auto& l : lines) {
    l.erase("ms");
    res += l.dump() + "\n";
  }
  return res;
}

}  // namespace

TEST_CASE("compute signed-des via the generating function route") {
  auto r = run_cli("compute signed-des 2 2 --route gf");
  CHECK(r.exit_code == 0);
  auto rep = parse_lines(r.out).at(0);
  CHECK(rep["coeffs"] == json::array({"1", "31", "55", "9"}));
  CHECK(rep["degree"] == 3);
  CHECK(rep["target"] == "signed-des");
}

TEST_CASE("compute routes agree") {
  for (std::string route : {"brute", "gf", "recurrence"}) {
    auto r = run_cli("compute signed-des 2 2 --route " + route);
    CHECK(r.exit_code == 0);
    CHECK(parse_lines(r.out).at(0)["coeffs"] == json::array({"1", "31", "55", "9"}));
  }
}

TEST_CASE("compute sv-signed by brute force") {
  auto r = run_cli("compute sv-signed 1 --route brute");
  CHECK(r.exit_code == 0);
  CHECK(parse_lines(r.out).at(0)["coeffs"] == json::array({"1", "3"}));
}

TEST_CASE("compute macmahon emits trivariate term tuples") {
  auto r = run_cli("compute macmahon 1 1 --route gf");
  CHECK(r.exit_code == 0);
  auto rep = parse_lines(r.out).at(0);
  // 1 + t q
  CHECK(rep["terms"] == json::parse("[[0,0,0,\"1\"],[1,1,0,\"1\"]]"));
}

TEST_CASE("qz-des specialization flags") {
  auto r = run_cli("compute qz-des 2 --route gf --q 1 --z 1");
  CHECK(r.exit_code == 0);
  CHECK(parse_lines(r.out).at(0)["coeffs"] == json::array({"1", "3"}));

  auto rz = run_cli("compute qz-des 1 --route brute --z 0");
  CHECK(rz.exit_code == 0);
  CHECK(parse_lines(rz.out).at(0)["terms"] == json::parse("[[0,0,0,\"1\"]]"));
}

TEST_CASE("verify equidistribution") {
  auto r = run_cli("verify equidistribution 2");
  CHECK(r.exit_code == 0);
  auto rep = parse_lines(r.out).at(0);
  CHECK(rep["equal"] == true);
  CHECK(rep["routes"].size() == 5);
}

TEST_CASE("verify qz-gf and ehrhart") {
  auto r = run_cli("verify qz-gf 1 1");
  CHECK(r.exit_code == 0);
  CHECK(parse_lines(r.out).at(0)["equal"] == true);

  auto re = run_cli("verify ehrhart 3");
  CHECK(re.exit_code == 0);
  auto rep = parse_lines(re.out).at(0);
  CHECK(rep["guard_ok"] == true);
  CHECK(rep["equal"] == true);
}

TEST_CASE("remaining verify targets") {
  CHECK(run_cli("verify unsigned-equidistribution 2").exit_code == 0);
  CHECK(run_cli("verify macmahon 2 1").exit_code == 0);
  CHECK(run_cli("verify signed-gf 2 2").exit_code == 0);
  CHECK(run_cli("verify nonsense 2").exit_code == 2);
}

TEST_CASE("inputs can be given through --m/--s/--n flags") {
  CHECK(strip_timing(run_cli("compute signed-des --m 2 2 --route gf").out) ==
        strip_timing(run_cli("compute signed-des 2 2 --route gf").out));
  CHECK(strip_timing(run_cli("compute asc-s --s 1 4").out) ==
        strip_timing(run_cli("compute asc-s 1 4").out));
  CHECK(strip_timing(run_cli("compute sv-signed --n 1").out) ==
        strip_timing(run_cli("compute sv-signed 1").out));
  CHECK(run_cli("verify equidistribution --n 2").exit_code == 0);
  CHECK(run_cli("verify qz-gf --m 1 1").exit_code == 0);
  // at most one input source
  CHECK(run_cli("compute signed-des 2 --m 2").exit_code == 2);
  // flags must match the target kind
  CHECK(run_cli("compute signed-des --s 2 2").exit_code == 2);
  CHECK(run_cli("compute asc-s --n 3").exit_code == 2);
}

TEST_CASE("certify by multiplicities and by explicit coefficients") {
  auto r = run_cli("certify --m 2 2");
  CHECK(r.exit_code == 0);
  auto rep = parse_lines(r.out).at(0);
  CHECK(rep["real_rooted"] == true);
  CHECK(rep["log_concave"] == true);
  CHECK(rep["unimodal"] == true);

  auto bad = run_cli("certify --coeffs 1 0 1");
  CHECK(bad.exit_code == 1);
  CHECK(parse_lines(bad.out).at(0)["real_rooted"] == false);

  auto lin = run_cli("certify --coeffs 1 1");
  CHECK(lin.exit_code == 0);
  CHECK(parse_lines(lin.out).at(0)["real_rooted"] == true);
}

TEST_CASE("compute/certify round trip") {
  auto computed = parse_lines(run_cli("compute signed-des 3 1 --route brute").out).at(0);
  std::string coeffs;
  for (const auto& c : computed["coeffs"]) coeffs += " " + c.get<std::string>();
  auto via_coeffs = run_cli("certify --coeffs" + coeffs);
  auto via_m = run_cli("certify --m 3 1");
  CHECK(via_coeffs.exit_code == 0);
  auto a = parse_lines(via_coeffs.out).at(0);
  auto b = parse_lines(via_m.out).at(0);
  for (auto key : {"real_rooted", "log_concave", "unimodal", "coeffs", "certificate"})
    CHECK(a[key] == b[key]);
}

TEST_CASE("sweep visits the canonical vectors and exits clean") {
  auto r = run_cli("sweep 4");
  CHECK(r.exit_code == 0);
  auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 12);  // 11 vectors + summary
  CHECK(lines.back()["vectors"] == 11);
  CHECK(lines.back()["failures"] == 0);
  for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i]["ok"] == true);

  auto single = run_cli("sweep 1");
  auto sl = parse_lines(single.out);
  REQUIRE(sl.size() == 2);
  CHECK(sl[0]["m"] == json::array({1}));
}

TEST_CASE("exit codes distinguish usage, verification, and cap errors") {
  CHECK(run_cli("compute nonsense 1").exit_code == 2);
  CHECK(run_cli("compute sv-unsigned 2 --route gf").exit_code == 2);
  CHECK(run_cli("compute signed-des 2 2 --route recurrence --q 1").exit_code == 2);
  CHECK(run_cli("certify --coeffs 1 --m 1").exit_code == 2);
  CHECK(run_cli("compute signed-des 2 2 --max-total 3").exit_code == 3);
  CHECK(run_cli("compute asc-s 1 4 3 8 --max-product 50").exit_code == 3);
  CHECK(run_cli("sweep 9 --max-total 8").exit_code == 3);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("negative coefficients are rejected by certify") {
  CHECK(run_cli("certify --coeffs -1 0 1").exit_code == 2);
}

TEST_CASE("output is deterministic apart from timing") {
  for (std::string args : {"compute signed-des 2 2 --route gf", "verify equidistribution 2",
                           "certify --m 2 1", "sweep 3"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
  }
}

TEST_CASE("pretty mode renders polynomials") {
  auto r = run_cli("compute signed-des 2 2 --route gf --pretty");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1 + 31t + 55t^2 + 9t^3") != std::string::npos);
}
