#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "artinsum/cli.hpp"
#include "artinsum/ideal.hpp"
#include "json.hpp"

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;
namespace cli = artinsum::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

/// Runs the front end inside the test data directory so reports carry
/// relative paths.
class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = fs::current_path();
    fs::current_path(ARTINSUM_DATA);
  }
  void TearDown() override { fs::current_path(saved_); }

  static Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  static Json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
  }

  static std::string golden(const std::string& name) {
    std::ifstream in(std::string(ARTINSUM_GOLDEN) + "/" + name + ".json");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

 private:
  fs::path saved_;
};

std::vector<std::string> strings(const Json& a) { return a.get<std::vector<std::string>>(); }
std::vector<std::size_t> sizes(const Json& a) { return a.get<std::vector<std::size_t>>(); }

}  // namespace

TEST_F(Cli, AnalyzeExamples) {
  Json s = run_json({"analyze", "stretched.txt"});
  EXPECT_EQ(s["schema"], 1);
  EXPECT_EQ(sizes(s["invariants"]["hilbert_function"]), (std::vector<std::size_t>{1, 2, 1, 1}));
  EXPECT_EQ(s["graded"]["stretched"], true);
  EXPECT_EQ(s["graded"]["gls"], true);
  EXPECT_EQ(strings(s["graded"]["presentation"]["groebner_basis"]), (std::vector<std::string>{"Z^2", "Y*Z", "Y^4"}));
  EXPECT_EQ(sizes(s["iarrobino"]["q0_hilbert_function"]), (std::vector<std::size_t>{1, 1, 1, 1}));

  Json y = run_json({"analyze", "y3.txt"});
  EXPECT_EQ(y["invariants"]["gorenstein"], true);
  EXPECT_EQ(sizes(y["invariants"]["hilbert_function"]), (std::vector<std::size_t>{1, 1, 1}));

  Json g = run_json({"analyze", "graded_type2.txt"});
  EXPECT_EQ(g["invariants"]["type"], 2);
  EXPECT_EQ(sizes(g["invariants"]["hilbert_function"]), (std::vector<std::size_t>{1, 3, 3, 2, 1}));
  EXPECT_FALSE(g.contains("iarrobino"));
}

TEST_F(Cli, ConnectExamples) {
  Json a = run_json({"connect", "y3.txt", "z3.txt"});
  EXPECT_EQ(strings(a["presentation"]["generators"]), (std::vector<std::string>{"Y*Z", "Y^2-Z^2"}));
  EXPECT_EQ(a["checks"]["h2_bound"], true);
  EXPECT_EQ(a["checks"]["length_identity"], true);

  Json b = run_json({"connect", "y3.txt", "z3.txt", "--unit", "2"});
  EXPECT_EQ(strings(b["presentation"]["generators"]), (std::vector<std::string>{"Y*Z", "Y^2-2*Z^2"}));

  Json c = run_json({"connect", "y4.txt", "z3.txt", "--verify-series", "6"});
  EXPECT_EQ(sizes(c["invariants"]["hilbert_function"]), (std::vector<std::size_t>{1, 2, 1, 1}));
  EXPECT_EQ(c["checks"]["series"]["holds"], true);
  EXPECT_EQ(c["checks"]["series"]["inverse_poincare"], "1 - 2t + t^2");

  fs::path out = fs::temp_directory_path() / "artinsum_cli_connect.txt";
  ASSERT_EQ(run({"connect", "y3.txt", "z3.txt", "--output", out.string()}).code, 0);
  std::ifstream in(out);
  std::ostringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "field QQ;\nvars Y Z;\nideal Y*Z, Y^2-Z^2, Z^3;\n");
  fs::remove(out);
}

TEST_F(Cli, DecomposeExamples) {
  Json a = run_json({"decompose", "stretched.txt", "--structure"});
  EXPECT_EQ(a["status"], "decomposed");
  EXPECT_EQ(strings(a["components"]["r"]["groebner_basis"]), (std::vector<std::string>{"Y1^4"}));
  EXPECT_EQ(a["components"]["s"]["loewy_length"], 2);
  EXPECT_EQ(strings(a["coordinate_change"]["new_vars"]), (std::vector<std::string>{"Y1", "Z1"}));

  Json b = run_json({"decompose", "offending.txt", "--partition", "Y1|Z1,Z2"});
  EXPECT_EQ(b["status"], "not-split");
  EXPECT_EQ(strings(b["offending"]), (std::vector<std::string>{"Y1*Z1", "Y1*Z2"}));
  EXPECT_EQ(b["reasons"].size(), 2U);

  Json c = run_json({"decompose", "ci.txt"});
  EXPECT_EQ(c["status"], "indecomposable-certified");
  EXPECT_EQ(c["certificates"][0]["kind"], "COMPLETE_INTERSECTION");

  Json d = run_json({"decompose", "sum_y3_z3.txt", "--partition", "Y|Z"});
  EXPECT_EQ(d["status"], "decomposed");
  EXPECT_EQ(strings(d["components"]["r"]["groebner_basis"]), (std::vector<std::string>{"Y^3"}));
}

TEST_F(Cli, ApolarBettiFibre) {
  Json a = run_json({"apolar", "--poly", "Z1^2+Z2^2"});
  EXPECT_EQ(strings(a["presentation"]["generators"]), (std::vector<std::string>{"X1*X2", "X1^2-X2^2"}));
  EXPECT_EQ(strings(a["input"]["dual_vars"]), (std::vector<std::string>{"Z1", "Z2"}));

  Json b = run_json({"betti", "y3.txt", "--max", "6"});
  EXPECT_EQ(sizes(b["betti"]), (std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(b["inverse_poincare"], "1 - t");

  Json c = run_json({"fibre", "y2.txt", "z2.txt"});
  EXPECT_EQ(strings(c["presentation"]["generators"]), (std::vector<std::string>{"Z^2", "Y*Z", "Y^2"}));
}

TEST_F(Cli, GoldenJson) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"analyze_stretched", {"--json", "analyze", "stretched.txt"}},
      {"connect_y3_z3", {"--json", "connect", "y3.txt", "z3.txt"}},
      {"decompose_stretched", {"--json", "decompose", "stretched.txt", "--structure"}},
      {"decompose_offending", {"--json", "decompose", "offending.txt", "--partition", "Y1|Z1,Z2"}},
      {"apolar_quadric", {"--json", "apolar", "--poly", "Z1^2+Z2^2"}},
      {"betti_y3", {"--json", "betti", "y3.txt"}},
      {"fibre_y2_z2", {"--json", "fibre", "y2.txt", "z2.txt"}},
      {"error_not_gorenstein", {"--json", "decompose", "not_gorenstein.txt"}},
  };
  for (const auto& [name, args] : cases) {
    Result r = run(args);
    EXPECT_EQ(r.out, golden(name)) << name;
  }
}

TEST_F(Cli, Deterministic) {
  Result a = run({"--json", "analyze", "graded_type2.txt"});
  Result b = run({"--json", "analyze", "graded_type2.txt"});
  EXPECT_EQ(a.out, b.out);
  Result serial = run({"--json", "analyze", "corpus", "--jobs", "1"});
  Result parallel = run({"--json", "analyze", "corpus", "--jobs", "4"});
  EXPECT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(Json::parse(serial.out)["results"].size(), 4U);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "missing.txt"}).code, cli::IO);
  EXPECT_EQ(run({"analyze", "bad_parse.txt"}).code, cli::PARSE);
  EXPECT_EQ(run({"analyze", "not_artinian.txt"}).code, cli::NOT_ARTINIAN);
  EXPECT_EQ(run({"analyze", "not_local.txt"}).code, cli::NOT_ARTINIAN);
  EXPECT_EQ(run({"connect", "not_gorenstein.txt", "x3.txt"}).code, cli::NOT_GORENSTEIN);
  EXPECT_EQ(run({"decompose", "not_gorenstein.txt"}).code, cli::NOT_GORENSTEIN);
  EXPECT_EQ(run({"connect", "y3.txt", "z3.txt", "--socle-r", "Y"}).code, cli::BAD_SOCLE);
  EXPECT_EQ(run({"connect", "y3.txt", "z3.txt", "--socle-r", "Y^"}).code, cli::BAD_SOCLE);
  EXPECT_EQ(run({"decompose", "sum_y3_z3.txt", "--structure"}).code, cli::PRECONDITION);
  EXPECT_EQ(run({"frobnicate"}).code, cli::USAGE);
  EXPECT_EQ(run({"betti", "y3.txt", "--max", "1"}).code, cli::USAGE);

  Result e = run({"--json", "decompose", "sum_y3_z3.txt", "--structure"});
  Json j = Json::parse(e.out);
  EXPECT_EQ(j["error"]["kind"], "precondition");
  EXPECT_EQ(j["exit_code"], 6);
}

TEST_F(Cli, DegreeGuardFromEnvironment) {
  const unsigned before = artinsum::default_max_degree();
  setenv("ARTINSUM_MAX_DEGREE", "2", 1);
  Result r = run({"analyze", "stretched.txt"});
  unsetenv("ARTINSUM_MAX_DEGREE");
  EXPECT_EQ(r.code, cli::RESOURCE) << r.err;
  EXPECT_EQ(artinsum::default_max_degree(), before);
  EXPECT_EQ(run({"analyze", "stretched.txt"}).code, 0);
}

TEST_F(Cli, TableOutput) {
  Result r = run({"analyze", "stretched.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hilbert_function: (1, 2, 1, 1)"), std::string::npos);
  EXPECT_NE(r.out.find("stretched: true"), std::string::npos);
}

TEST_F(Cli, Executable) {
  const std::string tool = ARTINSUM_TOOL;
  EXPECT_EQ(std::system((tool + " analyze y3.txt > /dev/null").c_str()), 0);
  int status = std::system((tool + " analyze bad_parse.txt > /dev/null 2>&1").c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), cli::PARSE);
}
