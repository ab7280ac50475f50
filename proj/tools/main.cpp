#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "affrep/error.hpp"
#include "commands.hpp"

namespace {

using namespace affrep;

unsigned default_threads() {
  if (const char* env = std::getenv("AFFREP_THREADS")) {
    try {
      const unsigned long t = std::stoul(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
    std::cerr << "affrep: ignoring invalid AFFREP_THREADS=" << env << '\n';
  }
  return 1;
}

std::vector<std::uint64_t> parse_plan(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad --plan entry '" + item + "'");
    }
  }
  return out;
}

bool usage_error(ErrorKind kind) {
  return kind == ErrorKind::GenusOutOfRange || kind == ErrorKind::InvalidArgument || kind == ErrorKind::ParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual classes and point counts of affine-group representation varieties"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  unsigned genus = 1;
  std::string field = "2";
  std::string engine_name = "semi";
  std::uint64_t guard = count::CountOptions{}.guard;
  unsigned threads = default_threads();
  std::string plan_text;
  std::string counts_path;
  std::string golden_path = cli::default_golden_path().string();
  std::string output = "json";
  bool pretty = false;
  bool extend = false;
  bool verify_eigen = false;
  bool reconstruct = false;
  bool show_matrix = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", pretty, "Human-readable table instead of JSON");
    sub->add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_counting = [&](CLI::App* sub) {
    sub->add_option("--guard", guard, "Refuse enumerations larger than this many tuples");
    sub->add_option("--threads", threads, "Worker threads (default from AFFREP_THREADS, else 1)")
        ->check(CLI::PositiveNumber);
  };

  auto* count_cmd = app.add_subcommand("count", "Count representations of a genus-g surface group into Aff(1, F_q)");
  count_cmd->add_option("--field", field, "Field as p or p^n")->required();
  count_cmd->add_option("--genus", genus, "Surface genus")->required();
  count_cmd->add_option("--engine", engine_name, "naive, semi, closed or generic");
  add_counting(count_cmd);
  add_common(count_cmd);

  auto* epoly_cmd = app.add_subcommand("epoly", "Interpolate the E-polynomial from point counts");
  epoly_cmd->add_option("--genus", genus, "Surface genus")->required();
  epoly_cmd->add_option("--plan", plan_text, "Comma-separated prime powers to sample");
  epoly_cmd->add_option("--engine", engine_name, "naive, semi, closed or generic");
  epoly_cmd->add_option("--counts", counts_path, "Read q,count rows from a CSV file instead of counting");
  add_counting(epoly_cmd);
  add_common(epoly_cmd);

  auto* tqft_cmd = app.add_subcommand("tqft", "Virtual class from the transfer matrix");
  tqft_cmd->add_option("--genus", genus, "Surface genus")->required();
  tqft_cmd->add_flag("--verify-eigen", verify_eigen, "Check eigenvectors, trace and determinant");
  tqft_cmd->add_flag("--show-matrix", show_matrix, "Include the transfer matrix in csv and pretty output");
  tqft_cmd->add_flag("--reconstruct", reconstruct, "Rebuild the reduced matrix from genus 1..3");
  add_common(tqft_cmd);

  auto* classes_cmd = app.add_subcommand("classes", "Representation, moduli and character classes");
  classes_cmd->add_option("--genus", genus, "Surface genus")->required();
  add_common(classes_cmd);

  auto* table_cmd = app.add_subcommand("table", "Recompute the golden point-count table");
  table_cmd->add_option("--golden", golden_path, "Golden CSV (genus,q,count) with .fnv1a64 sidecar");
  table_cmd->add_flag("--extend", extend, "Also fill the blank cells, checked against the closed count");
  add_counting(table_cmd);
  add_common(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check that all three methods agree up to a genus");
  verify_cmd->add_option("--genus", genus, "Largest genus to check")->required();
  add_counting(verify_cmd);
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    count::CountOptions options;
    options.guard = guard;
    options.threads = threads;
    const auto engine = count::parse_engine(engine_name);

    cli::Report report;
    if (*count_cmd) {
      report = cli::cmd_count(field, genus, engine, options);
    } else if (*epoly_cmd) {
      std::optional<std::vector<std::uint64_t>> plan;
      if (!plan_text.empty()) plan = parse_plan(plan_text);
      std::optional<std::filesystem::path> counts;
      if (!counts_path.empty()) counts = counts_path;
      report = cli::cmd_epoly(genus, plan, engine, counts, options);
    } else if (*tqft_cmd) {
      report = cli::cmd_tqft(genus, verify_eigen, reconstruct, show_matrix);
    } else if (*classes_cmd) {
      report = cli::cmd_classes(genus);
    } else if (*table_cmd) {
      report = cli::cmd_table(golden_path, extend, options);
    } else {
      report = cli::cmd_verify(genus, options);
    }

    const auto format = pretty ? cli::OutputFormat::Pretty
                               : (output == "csv" ? cli::OutputFormat::Csv : cli::OutputFormat::Json);
    std::cout << cli::render(report, format);
    return report.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "affrep: " << e.what() << '\n';
    return usage_error(e.kind()) ? 2 : 1;
  }
}
