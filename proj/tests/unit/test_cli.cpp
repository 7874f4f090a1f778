#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bifurcato_cli/cli.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
  json doc;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = bifurcato::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (r.code == 0 && !r.out.empty() && r.out.front() == '{') r.doc = json::parse(r.out);
  return r;
}

json load(const fs::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  return json::parse(f);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Structural equality with a relative tolerance on numbers.
bool same(const json& a, const json& b, double rel, const std::string& path = "") {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    if (std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)) + 1e-300) return true;
    MESSAGE("mismatch at " << path << ": " << x << " vs " << y);
    return false;
  }
  if (a.type() != b.type()) {
    MESSAGE("type mismatch at " << path);
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      MESSAGE("key count mismatch at " << path);
      return false;
    }
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !same(it.value(), b.at(it.key()), rel, path + "/" + it.key())) return false;
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      MESSAGE("length mismatch at " << path);
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same(a[i], b[i], rel, path + "/" + std::to_string(i))) return false;
    return true;
  }
  return a == b;
}

const fs::path golden_dir{BIFURCATO_GOLDEN_DIR};

const std::vector<std::string> ex51 = {"--a", "-0.35", "--b", "1", "--c", "0.0988432", "--m", "0.0292698",
                                       "--n", "0.05"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "bifurcato_cli_tests";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
  struct Case {
    const char* file;
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {"equilibria_ex51.json", with({"equilibria"}, ex51)},
      {"critical_fig8.json", {"critical", "--a", "-0.3", "--b", "0.5", "--m", "0.4", "--c", "0.1253449", "--n",
                              "0.3173105"}},
      {"normal_form_fig7a.json", {"normal-form", "--a", "-1.5", "--b", "1.8045924", "--c", "0.330275", "--m", "0.05",
                                  "--n", "0.172824"}},
      {"focus_ex51.json", with(with({"focus"}, ex51), {"--vanish-tol", "1e-3"})},
      {"repro_fig5a.json", {"repro", "fig5a"}},
      {"cycles_ex51.json", with({"cycles"}, ex51)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const auto r = run_cli(c.args);
    REQUIRE(r.code == 0);
    CHECK(same(r.doc, load(golden_dir / c.file), 1e-9));
  }
}

TEST_CASE("golden outputs carry the published numbers") {
  const json eq = load(golden_dir / "equilibria_ex51.json").at("results").at("equilibria");
  REQUIRE(eq.size() == 3);
  CHECK(eq[1].at("x").get<double>() == doctest::Approx(0.22727).epsilon(1e-4));
  CHECK(eq[1].at("y").get<double>() == doctest::Approx(4.5454).epsilon(1e-4));
  CHECK(eq[2].at("x").get<double>() == doctest::Approx(0.400544).epsilon(1e-5));
  CHECK(eq[2].at("y").get<double>() == doctest::Approx(8.01088).epsilon(1e-5));
  CHECK(eq[1].at("tag") == "Saddle");

  const json cr = load(golden_dir / "critical_fig8.json").at("results").at("sn_critical");
  CHECK(cr.at("n_star").get<double>() == doctest::Approx(0.3173105).epsilon(1e-6));
  CHECK(cr.at("c_star").get<double>() == doctest::Approx(0.1253449).epsilon(1e-6));

  const json fo = load(golden_dir / "focus_ex51.json").at("results");
  CHECK(120.0 * fo.at("report").at("B").at("B5").get<double>() == doctest::Approx(15668.7).epsilon(0.01));

  CHECK(load(golden_dir / "repro_fig5a.json").at("results").at("all_checks_pass") == true);
  const json cy = load(golden_dir / "cycles_ex51.json").at("results");
  REQUIRE(cy.size() == 1);
  CHECK(cy[0].at("x0").get<double>() == doctest::Approx(0.419893).epsilon(1e-5));
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> cases = {
      with({"equilibria"}, ex51),
      with({"critical"}, ex51),
      {"critical", "--Lambda", "1", "--d", "0.1", "--mu", "0.5", "--delta", "0.2", "--kappa", "1", "--beta", "0.1",
       "--gamma", "1"},
      {"normal-form", "--a", "-0.3", "--b", "0.5", "--m", "0.4", "--at", "sn"},
      {"unfold-bt2", "--a", "-0.3", "--b", "0.5", "--m", "0.4", "--eps-count", "11"},
      {"unfold-bt3", "--mu1-count", "5", "--mu3-count", "5", "--u-count", "5", "--v-count", "5"},
      with({"focus"}, ex51),
      with({"simulate", "--t-end", "5", "--starts", "3", "--seed", "9"}, ex51),
      {"geometry", "--grid", "20"},
      {"repro", "fig7a"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    const auto r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.doc.at("schema_version") == "1");
    CHECK(r.doc.at("command") == args[0]);
    CHECK(r.doc.contains("results"));
  }
}

TEST_CASE("runs are deterministic and replay from their own output") {
  const auto d = scratch_dir();
  const auto args = with({"simulate", "--t-end", "3", "--starts", "4", "--seed", "11"}, ex51);
  const auto a = run_cli(args), b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  const fs::path first = d / "first.json", second = d / "second.json";
  REQUIRE(run_cli(with(args, {"--out", first.string()})).code == 0);
  REQUIRE(run_cli({"simulate", "--config", first.string(), "--out", second.string()}).code == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(slurp(first) == a.out);
}

TEST_CASE("flags override the config file") {
  const auto d = scratch_dir();
  const fs::path cfg = d / "cfg.json";
  {
    std::ofstream f(cfg);
    f << R"({"params": {"dimensionless": {"a": 0.1, "n": 0.3}}, "options": {"classify_tol": 1e-6}})";
  }
  const auto r = run_cli({"equilibria", "--config", cfg.string(), "--n", "0.4"});
  REQUIRE(r.code == 0);
  const json& c = r.doc.at("config");
  CHECK(c.at("params").at("dimensionless").at("a").get<double>() == 0.1);
  CHECK(c.at("params").at("dimensionless").at("n").get<double>() == 0.4);
  CHECK(c.at("params").at("dimensionless").at("b").get<double>() == 1.0);  // default
  CHECK(c.at("options").at("classify_tol").get<double>() == 1e-6);
}

TEST_CASE("no endemic equilibrium gives an empty cycle list") {
  const auto r = run_cli({"cycles", "--a", "0", "--b", "1", "--c", "0.9", "--m", "2", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc.at("results") == json::array());
}

TEST_CASE("cusp CSV has one row per grid point") {
  const fs::path csv = scratch_dir() / "cusp.csv";
  REQUIRE(run_cli({"geometry", "--surface", "cusp", "--grid", "37", "--csv", csv.string()}).code == 0);
  const std::string text = slurp(csv);
  std::size_t rows = 0;
  for (char ch : text) rows += ch == '\n';
  CHECK(rows == 37 + 1);
  CHECK(text.rfind("label,x,y,z\r\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"equilibria", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"equilibria", "--a", "abc"}).code == 2);
  CHECK(run_cli({"repro", "fig99"}).code == 2);
  CHECK(run_cli({"equilibria", "--a", "1", "--Lambda", "1"}).code == 2);
  // a below its lower bound is a domain error
  const auto bad = run_cli({"equilibria", "--a", "-5", "--b", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run_cli({"equilibria", "--config", "/nonexistent/cfg.json"}).code == 1);
}

}  // TEST_SUITE
