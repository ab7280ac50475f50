#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "affrep/error.hpp"
#include "affrep/geomstrat.hpp"

namespace affrep::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = fs::path(AFFREP_TEST_DATA_DIR) / "table1.csv";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("affrep_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Json parsed(const Report& r) { return Json::parse(render(r, OutputFormat::Json)); }

void strip_elapsed(Json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_elapsed(v);
  }
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a64_hex("foobar"), "85944171f73967e8");
}

TEST(Golden, LoadsAllCellsWithValidChecksum) {
  const auto g = load_golden(kGolden);
  EXPECT_EQ(g.cells.size(), 24U);
  EXPECT_EQ(g.expected_checksum, g.actual_checksum);
  EXPECT_EQ(g.cells.back().count, Integer("84217678403958"));
}

TEST(Count, NineElementFieldGenusTwo) {
  const Report r = cmd_count("3^2", 2, count::Engine::Semi, {});
  const Json j = parsed(r);
  EXPECT_EQ(j["count"], "2991816");
  EXPECT_EQ(j["q"], 9);
  EXPECT_EQ(j["engine"], "semi");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(cmd_count("3^2", 2, count::Engine::Closed, {}).results["count"], "2991816");
}

TEST(Count, OutputFormats) {
  const Report r = cmd_count("5", 1, count::Engine::Naive, {});
  EXPECT_EQ(render(r, OutputFormat::Csv), "q,count\n5,100\n");
  EXPECT_NE(render(r, OutputFormat::Pretty).find("100"), std::string::npos);
  const Json j = parsed(r);
  for (const char* key : {"command", "version", "p", "n", "q", "genus", "count", "engine", "elapsed_ms", "checks", "caveat"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Epoly, GenusOne) {
  const Report r = cmd_epoly(1, std::nullopt, count::Engine::Semi, std::nullopt, {});
  EXPECT_EQ(r.results["epoly"], "q^3 - q^2");
  EXPECT_EQ(r.results["degree"], 3);
  EXPECT_TRUE(r.ok());
}

TEST(Epoly, CsvRoundTrip) {
  const Report counted = cmd_epoly(2, std::nullopt, count::Engine::Semi, std::nullopt, {});
  const fs::path csv = scratch_dir() / "counts.csv";
  std::ofstream(csv) << render(counted, OutputFormat::Csv);
  const Report ingested = cmd_epoly(2, std::nullopt, count::Engine::Semi, csv, {});
  EXPECT_EQ(ingested.results["epoly"], counted.results["epoly"]);
  EXPECT_EQ(ingested.results["counts"][0]["engine"], "csv");
  EXPECT_TRUE(ingested.ok());
}

TEST(Tqft, GenusFourMatchesGeometry) {
  const Report r = cmd_tqft(4, true, true);
  EXPECT_EQ(r.results["virtual_class"], geom::rep_class(4).to_string());
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.checks.size(), 10U);
  EXPECT_EQ(r.results["matrix"].size(), 2U);
  EXPECT_EQ(cmd_tqft(1, false, false, true).csv.size(), 6U);
}

TEST(Classes, GenusTwo) {
  const Report r = cmd_classes(2);
  EXPECT_EQ(r.results["rep_class"], "q^7 - 4*q^6 + 6*q^5 - 3*q^4");
  EXPECT_EQ(r.results["moduli_class"], "q^4 - 4*q^3 + 6*q^2 - 4*q + 1");
  EXPECT_TRUE(r.ok());
}

TEST(Verify, GenusThreeAndTen) {
  const Report three = cmd_verify(3, {});
  EXPECT_FALSE(three.checks.empty());
  for (const auto& c : three.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.details;
  const Report ten = cmd_verify(10, {});
  EXPECT_TRUE(ten.ok());
}

TEST(Verify, GenusZeroIsUsageError) {
  try {
    cmd_verify(0, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GenusOutOfRange);
  }
}

TEST(Table, TamperedDigitFailsThatCell) {
  std::string text = slurp(kGolden);
  // g=2, q=9 row.
  const auto pos = text.find("2,9,2991816");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 10] = '7';
  const fs::path dir = scratch_dir();
  const fs::path tampered = dir / "table1.csv";
  std::ofstream(tampered, std::ios::binary) << text;
  fs::copy_file(kGolden.string() + ".fnv1a64", tampered.string() + ".fnv1a64", fs::copy_options::overwrite_existing);

  const Report r = cmd_table(tampered, false, {});
  EXPECT_FALSE(r.ok());
  std::vector<std::string> failed;
  for (const auto& c : r.checks) {
    if (!c.pass) failed.push_back(c.name);
  }
  EXPECT_EQ(failed, (std::vector<std::string>{"golden checksum", "g=2 q=9 (golden)"}));
}

TEST(Table, ExtendFillsBlankCells) {
  // A golden file with only the genus-one cells keeps the run short; the
  // extension then covers the rest of that row and the genus-two row.
  const fs::path dir = scratch_dir();
  const fs::path small = dir / "small.csv";
  const std::string body = "genus,q,count\n1,2,4\n1,3,18\n1,4,48\n1,5,100\n";
  std::ofstream(small, std::ios::binary) << body;
  std::ofstream(small.string() + ".fnv1a64") << fnv1a64_hex(body) << '\n';

  count::CountOptions opts;
  opts.threads = 4;
  const Report r = cmd_table(small, true, opts);
  std::set<std::pair<unsigned, std::uint64_t>> closed;
  for (const auto& row : r.results["rows"]) {
    if (row["source"] == "closed") closed.emplace(row["genus"].get<unsigned>(), row["q"].get<std::uint64_t>());
  }
  for (std::uint64_t q : {7U, 8U, 9U, 11U}) EXPECT_TRUE(closed.count({1, q})) << q;
  for (std::uint64_t q : {13U, 16U, 17U, 19U}) EXPECT_TRUE(closed.count({2, q})) << q;
  EXPECT_FALSE(closed.count({1, 5}));
}

TEST(Determinism, JsonIsByteIdenticalModuloElapsed) {
  count::CountOptions one;
  count::CountOptions four;
  four.threads = 4;
  Json a = parsed(cmd_epoly(2, std::nullopt, count::Engine::Semi, std::nullopt, one));
  Json b = parsed(cmd_epoly(2, std::nullopt, count::Engine::Semi, std::nullopt, four));
  strip_elapsed(a);
  strip_elapsed(b);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(render(cmd_verify(4, one), OutputFormat::Json), render(cmd_verify(4, four), OutputFormat::Json));
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(AFFREP_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  const fs::path out = scratch_dir() / "out.txt";
  EXPECT_EQ(run_cli("count --field 3^2 --genus 2 --engine semi", out), 0);
  EXPECT_EQ(Json::parse(slurp(out))["count"], "2991816");
  EXPECT_EQ(run_cli("epoly --genus 1 --pretty", out), 0);
  EXPECT_NE(slurp(out).find("q^3 - q^2"), std::string::npos);
  EXPECT_EQ(run_cli("classes --genus 1 --output csv", out), 0);
  EXPECT_EQ(run_cli("verify --genus 0", out), 2);
  EXPECT_EQ(run_cli("count --field 6 --genus 1", out), 1);
  EXPECT_EQ(run_cli("count --field 2 --genus 3 --engine naive --guard 10", out), 1);
  EXPECT_EQ(run_cli("bogus", out), 2);
  EXPECT_EQ(run_cli("count --field 2", out), 2);
}

}  // namespace
}  // namespace affrep::cli
