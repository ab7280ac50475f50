#pragma once

// Subcommands of the affrep tool. Each returns a Report; the binary renders it
// and exits 0 iff every check passed.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "affrep/affcount.hpp"

namespace affrep::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = AFFREP_VERSION;

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

struct Report {
  std::string command;
  // Command-specific payload; keys are emitted in insertion order.
  Json results = Json::object();
  std::vector<Check> checks;
  // Optional rows for --output csv, first row is the header.
  std::vector<std::vector<std::string>> csv;

  bool ok() const;
};

enum class OutputFormat { Json, Csv, Pretty };

std::string render(const Report& report, OutputFormat format);

struct GoldenCell {
  unsigned genus = 0;
  std::uint64_t q = 0;
  Integer count;
};

struct GoldenTable {
  std::vector<GoldenCell> cells;
  std::string expected_checksum;  // from the sidecar file, may be empty
  std::string actual_checksum;
};

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

// Reads "genus,q,count" rows and the "<path>.fnv1a64" sidecar.
GoldenTable load_golden(const std::filesystem::path& path);

std::filesystem::path default_golden_path();

Report cmd_count(std::string_view field, unsigned genus, count::Engine engine, const count::CountOptions& options);

Report cmd_epoly(unsigned genus, const std::optional<std::vector<std::uint64_t>>& plan, count::Engine engine,
                 const std::optional<std::filesystem::path>& counts_csv, const count::CountOptions& options);

// JSON always carries the matrix; show_matrix adds it to the tabular formats.
Report cmd_tqft(unsigned genus, bool verify_eigen, bool reconstruct, bool show_matrix = false);

Report cmd_classes(unsigned genus);

// Recomputes every golden cell with the semi engine. With extend, also fills
// the blank cells of the genus 1..3 x column grid and checks them against the
// closed count.
Report cmd_table(const std::filesystem::path& golden, bool extend, const count::CountOptions& options);

// Three-method agreement up to genus_max. Throws Error(GenusOutOfRange) for 0.
Report cmd_verify(unsigned genus_max, const count::CountOptions& options);

}  // namespace affrep::cli
