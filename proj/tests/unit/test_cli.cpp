#include "landau/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "landau");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = landau::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("coeffs as CSV") {
  const Run r = invoke({"coeffs", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == "k,alpha_numerator,alpha_denominator");
  CHECK(rows[1] == "1,-1,4");
  CHECK(rows[12] == "12,-568756771963,281406257233920");
}

TEST_CASE("coeffs as JSON with K and an override") {
  const Run r = invoke({"coeffs", "--format", "json", "--K", "4", "--override-alpha", "2=1/3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["K"] == 4);
  CHECK(j["alpha"][1]["numerator"] == "1");
  CHECK(j["alpha"][1]["denominator"] == "3");
  CHECK(j["alpha"][2]["denominator"] == "128");
}

TEST_CASE("gn lists exact constants") {
  const Run r = invoke({"gn", "--n-max", "3", "--format", "csv", "--digits", "12"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "n,gn_numerator,gn_denominator,pi_gn_midpoint,digits");
  CHECK(rows[2].rfind("1,5,4,3.9269908169", 0) == 0);
  CHECK(rows[4].rfind("3,381,256,", 0) == 0);
}

TEST_CASE("verification commands exit 0 when proven and 1 on a counterexample") {
  CHECK(invoke({"verify-theorem", "--n-max", "20", "--l-max", "6", "--format", "csv"}).code == 0);
  CHECK(invoke({"verify-bounds", "--n-max", "20", "--pair", "1:3"}).code == 0);
  CHECK(invoke({"verify-lemma3", "--n-max", "20", "--l-max", "3"}).code == 0);
  // The displayed O_l + E_l values disagree with exact computation.
  const Run s5 = invoke({"verify-section5", "--l-max", "3", "--j-span", "10"});
  CHECK(s5.code == 1);
  CHECK(s5.out.find("even-residual-sign: proven") != std::string::npos);
  CHECK(s5.out.find("gap-values: proven") != std::string::npos);
  const Run bad = invoke({"verify-theorem", "--n-max", "20", "--l-max", "4", "--override-alpha", "1=0"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("counterexample") != std::string::npos);
  // Coefficient bounds include the odd upper bound, which fails.
  CHECK(invoke({"verify-lemma4", "--k-max", "20"}).code == 1);
}

TEST_CASE("usage errors exit 3") {
  CHECK(invoke({}).code == 3);
  CHECK(invoke({"coeffs", "--K", "0"}).code == 3);
  CHECK(invoke({"coeffs", "--format", "xml"}).code == 3);
  CHECK(invoke({"frobnicate"}).code == 3);
  CHECK(invoke({"verify-bounds", "--pair", "3:4"}).code == 3);
  CHECK(invoke({"verify-bounds", "--pair", "three"}).code == 3);
  CHECK(invoke({"coeffs", "--override-alpha", "=5"}).code == 3);
  CHECK(invoke({"verify-theorem", "--precision-ceiling", "8"}).code == 3);
  const Run help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("LANDAU_MAX_N") != std::string::npos);
}

TEST_CASE("environment ceilings are enforced") {
  ::setenv("LANDAU_MAX_N", "10", 1);
  const Run r = invoke({"gn", "--n-max", "11"});
  ::unsetenv("LANDAU_MAX_N");
  CHECK(r.code == 3);
  CHECK(r.err.find("LANDAU_MAX_N") != std::string::npos);
  CHECK(invoke({"gn", "--n-max", "11"}).code == 0);
}

TEST_CASE("output files are byte-identical across runs and get a metadata sidecar") {
  const auto dir = std::filesystem::temp_directory_path() / "landau_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  CHECK(invoke({"table1", "--format", "csv", "--output", a.string()}).code == 0);
  CHECK(invoke({"table1", "--format", "csv", "--output", b.string()}).code == 0);
  const std::string body = slurp(a);
  CHECK_FALSE(body.empty());
  CHECK(body == slurp(b));
  CHECK(body.rfind("row,k1,", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(a.string() + ".meta.json"));
  CHECK(meta["command"] == "table1");
  CHECK(meta["exit_status"] == 0);
  CHECK(meta.contains("finished_utc"));
  std::filesystem::remove_all(dir);
}
