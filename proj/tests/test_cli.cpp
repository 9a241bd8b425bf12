#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + ROOTHEIGHT_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_canonical(const std::string& text) {
  const json j = json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
  return j;
}

}  // namespace

TEST_CASE("info as JSON") {
  const auto g2 = run("info G 2 --format json");
  REQUIRE(g2.code == 0);
  const json j = parse_canonical(g2.out);
  CHECK(j["h"] == 6);
  CHECK(j["exponents"] == json::array({1, 5}));
  CHECK(j["b"] == json::array({2, 1, 1, 1, 1}));
  CHECK(j["m"] == json::array({0, 1, 0, 0, 0, 1}));
  CHECK(j["e"] == json({{"1", 1}, {"2", -1}, {"3", -1}, {"6", 1}}));
  CHECK(j["weyl_order"] == "12");
  CHECK(j["B"]["coeffs"] == json::array({"2", "1", "1", "1", "1"}));
  CHECK(j["C_factored"] == "(q^6-1)(q-1)/((q^3-1)(q^2-1))");
  CHECK_FALSE(j.contains("singularity"));

  const json a1 = parse_canonical(run("info A 1 --format json").out);
  CHECK(a1["b"] == json::array({1}));

  const json e8 = parse_canonical(run("info E 8 --format json").out);
  CHECK(e8["positive_roots"] == 120);
  CHECK(e8["singularity"]["a"] == "6");
  CHECK(e8["singularity"]["g"] == 120);
}

TEST_CASE("JSON never contains floats") {
  for (const char* args : {"info F 4 --format json", "verify B 3 --format json", "munagi 1/2,0,3 --h 4 --format json"}) {
    const json j = json::parse(run(args).out);
    std::function<void(const json&)> walk = [&](const json& x) {
      CHECK_FALSE(x.is_number_float());
      if (x.is_structured())
        for (const auto& y : x) walk(y);
    };
    walk(j);
  }
}

TEST_CASE("info as a table") {
  const auto r = run("info E 8");
  CHECK(r.code == 0);
  CHECK(r.out.find("positive roots  120") != std::string::npos);
}

TEST_CASE("verify") {
  const auto one = run("verify G 2 --props prop15");
  CHECK(one.code == 0);
  CHECK(one.out.find("prop15") != std::string::npos);
  CHECK(one.out.find("pass") != std::string::npos);

  const auto js = run("verify G 2 --props prop15,eq1 --format json");
  REQUIRE(js.code == 0);
  const json j = parse_canonical(js.out);
  CHECK(j["system"] == "G2");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "eq1");
  CHECK(j["checks"][1]["id"] == "prop15");
  for (const auto& c : j["checks"]) CHECK(c["verdict"] == "pass");

  const auto all = run("verify --all all --format json --jobs 2");
  CHECK(all.code == 0);
  const json a = parse_canonical(all.out);
  CHECK(a.is_array());
  CHECK(a.size() == 34);
  CHECK(a[0]["system"] == "A1");
}

TEST_CASE("BFS cap from flag and environment") {
  auto note_of = [](const Run& r) {
    const json j = json::parse(r.out);
    return j["checks"][0].value("note", std::string());
  };
  const auto dflt = run("verify A 4 --props eq5 --format json");
  CHECK(note_of(dflt) == "BFS over 120 elements");
  const auto env = run("verify A 4 --props eq5 --format json", "ROOTHEIGHT_BFS_CAP=10");
  CHECK(note_of(env).find("exceeds BFS cap 10") != std::string::npos);
  const auto flag = run("verify A 4 --props eq5 --format json --bfs-cap 1000", "ROOTHEIGHT_BFS_CAP=10");
  CHECK(note_of(flag) == "BFS over 120 elements");
  CHECK(run("verify A 4 --props eq5", "ROOTHEIGHT_BFS_CAP=abc").code == 2);
}

TEST_CASE("munagi") {
  const auto g2 = run("munagi 0,1,0,0,0,1 --h 6 --roundtrip --format json");
  REQUIRE(g2.code == 0);
  const json j = parse_canonical(g2.out);
  CHECK(j["all_constant"] == true);
  CHECK(j["roundtrip"] == true);
  std::map<int, std::string> parts;
  for (const auto& p : j["parts"]) parts[p["d"].get<int>()] = p["coeffs"][0].get<std::string>();
  CHECK(parts == std::map<int, std::string>{{1, "1"}, {2, "-1"}, {3, "-1"}, {6, "1"}});

  const json one = parse_canonical(run("munagi 1 --h 1 --format json").out);
  CHECK(one["parts"].size() == 1);
  CHECK(one["parts"][0]["coeffs"] == json::array({"1"}));

  const json nc = parse_canonical(run("munagi 0,1,0,0 --h 4 --format json").out);
  CHECK(nc["all_constant"] == false);

  const auto table = run("munagi 0,1,0,0,0,1 --h 6 --roundtrip");
  CHECK(table.out.find("H_6(q) = 1") != std::string::npos);
  CHECK(table.out.find("roundtrip: ok") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify A 99999 --props prop2").code == 2);
  CHECK(run("info A 501").code == 2);
  CHECK(run("info X 2").code == 2);
  CHECK(run("info E 9").code == 2);
  CHECK(run("info A two").code == 2);
  CHECK(run("verify G 2 --props nope").code == 2);
  CHECK(run("verify G 2 --props prop1 --all").code == 2);
  CHECK(run("verify G").code == 2);
  CHECK(run("munagi 0,1,0,0,1 --h 4").code == 2);
  CHECK(run("munagi 1,x --h 4").code == 2);
  CHECK(run("munagi 1 --h 0").code == 2);
  CHECK(run("info G 2 --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("munagi --help").code == 0);
}

TEST_CASE("ranks well past the catalog are accepted") {
  const auto r = run("verify A 30 --props prop2,eq1");
  CHECK(r.code == 0);
}
