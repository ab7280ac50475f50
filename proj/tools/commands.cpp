#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "affrep/error.hpp"
#include "affrep/finitefield.hpp"
#include "affrep/geomstrat.hpp"
#include "affrep/katz.hpp"
#include "affrep/tqft.hpp"

namespace affrep::cli {

namespace {

// Column set of the published table.
constexpr std::uint64_t kTableColumns[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19};

ff::FieldRef field_for(std::uint64_t q) {
  const auto pn = ff::prime_power_decompose(q);
  if (!pn) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  ff::FieldLimits limits;
  limits.max_order = std::max<std::uint64_t>(limits.max_order, q);
  return ff::make_field(pn->first, pn->second, limits);
}

Json record_json(const count::CountRecord& rec) {
  Json j;
  j["p"] = rec.p;
  j["n"] = rec.n;
  j["q"] = rec.q;
  j["genus"] = rec.genus;
  j["count"] = rec.count.get_str();
  j["engine"] = std::string(count::to_string(rec.engine));
  j["elapsed_ms"] = std::round(rec.elapsed.count() * 1000.0) / 1000.0;
  return j;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

void add_equal(Report& report, std::string name, const IntPoly& lhs, const IntPoly& rhs) {
  const bool pass = lhs == rhs;
  report.checks.push_back({std::move(name), pass, pass ? lhs.to_string() : lhs.to_string() + " != " + rhs.to_string()});
}

void add_equal(Report& report, std::string name, const Integer& lhs, const Integer& rhs) {
  const bool pass = lhs == rhs;
  report.checks.push_back({std::move(name), pass, pass ? lhs.get_str() : lhs.get_str() + " != " + rhs.get_str()});
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string render(const Report& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      Json out;
      out["command"] = report.command;
      out["version"] = std::string(kVersion);
      for (const auto& [key, value] : report.results.items()) out[key] = value;
      Json checks = Json::array();
      for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
      out["checks"] = checks;
      out["caveat"] = tqft::kLocalizationCaveat;
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      if (report.csv.empty()) {
        os << "key,value\n";
        for (const auto& [key, value] : report.results.items()) {
          if (value.is_primitive()) os << key << ',' << scalar_text(value) << '\n';
        }
      }
      for (const auto& row : report.csv) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
      }
      break;
    }
    case OutputFormat::Pretty: {
      os << "affrep " << report.command << '\n';
      for (const auto& [key, value] : report.results.items()) {
        if (value.is_primitive()) os << "  " << std::left << std::setw(18) << key << scalar_text(value) << '\n';
      }
      if (!report.csv.empty()) {
        std::vector<std::size_t> width;
        for (const auto& row : report.csv) {
          width.resize(std::max(width.size(), row.size()), 0);
          for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        os << '\n';
        for (const auto& row : report.csv) {
          os << ' ';
          for (std::size_t i = 0; i < row.size(); ++i) os << ' ' << std::right << std::setw(static_cast<int>(width[i])) << row[i];
          os << '\n';
        }
      }
      if (!report.checks.empty()) {
        os << '\n';
        for (const auto& c : report.checks) {
          os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
          if (!c.details.empty()) os << "  (" << c.details << ')';
          os << '\n';
        }
        os << '\n' << (report.ok() ? "all checks passed" : "CHECK FAILURES") << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::filesystem::path default_golden_path() { return AFFREP_GOLDEN_PATH; }

GoldenTable load_golden(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open golden table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  GoldenTable table;
  table.actual_checksum = fnv1a64_hex(bytes);
  std::ifstream sidecar(path.string() + ".fnv1a64");
  if (sidecar) sidecar >> table.expected_checksum;

  std::istringstream lines(bytes);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || line.rfind("genus,", 0) == 0) continue;
    std::istringstream fields(line);
    std::string g, q, c;
    GoldenCell cell;
    if (!std::getline(fields, g, ',') || !std::getline(fields, q, ',') || !std::getline(fields, c) ||
        cell.count.set_str(c, 10) != 0) {
      throw Error(ErrorKind::ParseError, path.string() + ":" + std::to_string(lineno) + ": expected genus,q,count");
    }
    try {
      cell.genus = static_cast<unsigned>(std::stoul(g));
      cell.q = std::stoull(q);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, path.string() + ":" + std::to_string(lineno) + ": bad genus or q");
    }
    table.cells.push_back(std::move(cell));
  }
  return table;
}

Report cmd_count(std::string_view field, unsigned genus, count::Engine engine, const count::CountOptions& options) {
  Report report;
  report.command = "count";
  const auto [p, n] = ff::parse_field_descriptor(field);
  count::CountRecord rec;
  if (engine == count::Engine::Closed) {
    if (!ff::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, n);
    rec.p = p;
    rec.n = n;
    rec.q = q.fits_ulong_p() ? q.get_ui() : 0;
    rec.genus = genus;
    rec.engine = engine;
    rec.count = count::count_closed(q, genus);
  } else {
    rec = count::run_engine(engine, ff::make_field(p, n), genus, options);
  }
  report.results = record_json(rec);
  report.csv = {{"q", "count"}, {std::to_string(rec.q), rec.count.get_str()}};
  return report;
}

Report cmd_epoly(unsigned genus, const std::optional<std::vector<std::uint64_t>>& plan, count::Engine engine,
                 const std::optional<std::filesystem::path>& counts_csv, const count::CountOptions& options) {
  Report report;
  report.command = "epoly";
  IntPoly epoly;
  Json counts = Json::array();
  Json plan_json = Json::array();
  report.csv = {{"q", "count"}};

  if (counts_csv) {
    std::ifstream in(*counts_csv);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + counts_csv->string());
    const auto points = katz::read_counts_csv(in);
    epoly = katz::epoly_from_counts(genus, points);
    for (const auto& pt : points) {
      plan_json.push_back(pt.x.get_str());
      Json j;
      j["q"] = pt.x.get_str();
      j["genus"] = genus;
      j["count"] = pt.y.get_str();
      j["engine"] = "csv";
      counts.push_back(j);
      report.csv.push_back({pt.x.get_str(), pt.y.get_str()});
    }
  } else {
    const auto sample_plan = plan ? katz::SamplePlan(genus, *plan) : katz::SamplePlan::default_for(genus);
    const auto result = katz::katz_epoly(sample_plan, engine, options);
    epoly = result.epoly;
    for (auto q : sample_plan.prime_powers()) plan_json.push_back(q);
    for (const auto& rec : result.counts) {
      counts.push_back(record_json(rec));
      report.csv.push_back({std::to_string(rec.q), rec.count.get_str()});
    }
  }

  report.results["genus"] = genus;
  report.results["plan"] = plan_json;
  report.results["counts"] = counts;
  report.results["epoly"] = epoly.to_string();
  report.results["degree"] = epoly.degree().value_or(0);
  add_equal(report, "interpolant equals the stratification class", epoly, geom::rep_class(genus));
  return report;
}

Report cmd_tqft(unsigned genus, bool verify_eigen, bool reconstruct, bool show_matrix) {
  Report report;
  report.command = "tqft";
  const auto data = tqft::build_transfer();
  const IntPoly closed = tqft::close_surface(genus, data);
  report.results["genus"] = genus;
  report.results["virtual_class"] = closed.to_string();
  report.results["matrix"] = matrix_json(data.transfer);
  report.results["group_class"] = data.group_class.to_string();
  add_equal(report, "matrix power agrees with iterated transfer and cap", closed,
            tqft::close_surface_by_iteration(genus, data));

  if (verify_eigen) {
    for (const auto& c : tqft::eigen_verify(data)) report.checks.push_back({c.name, c.pass, c.details});
  }
  if (reconstruct) {
    const auto r = tqft::reconstruct_transfer(tqft::close_surface(1, data), tqft::close_surface(2, data),
                                              tqft::close_surface(3, data));
    report.results["reconstructed"] = matrix_json(r.matrix());
    const unsigned upto = std::max(genus, 6U);
    for (unsigned g = 1; g <= upto; ++g) {
      add_equal(report, "reconstructed matrix reproduces genus " + std::to_string(g),
                tqft::close_with_matrix(r.matrix(), g), tqft::close_surface(g, data));
    }
  }
  report.csv = {{"genus", "virtual_class"}, {std::to_string(genus), closed.to_string()}};
  if (show_matrix) {
    for (std::size_t r = 0; r < data.transfer.rows(); ++r) {
      for (std::size_t c = 0; c < data.transfer.cols(); ++c) {
        report.csv.push_back({"Z[" + std::to_string(r) + "," + std::to_string(c) + "]", data.transfer.at(r, c).to_string()});
      }
    }
  }
  return report;
}

Report cmd_classes(unsigned genus) {
  Report report;
  report.command = "classes";
  const IntPoly rep = geom::rep_class(genus);
  const IntPoly moduli = geom::moduli_class(genus);
  const IntPoly character = geom::character_class(genus);
  report.results["genus"] = genus;
  report.results["rep_class"] = rep.to_string();
  report.results["moduli_class"] = moduli.to_string();
  report.results["character_class"] = character.to_string();
  add_equal(report, "closed form equals stratification recursion", rep, geom::xs_recursive(2 * genus));
  add_equal(report, "moduli space equals character variety", moduli, character);
  report.csv = {{"class", "polynomial"},
                {"rep", rep.to_string()},
                {"moduli", moduli.to_string()},
                {"character", character.to_string()}};
  return report;
}

Report cmd_table(const std::filesystem::path& golden_path, bool extend, const count::CountOptions& options) {
  Report report;
  report.command = "table";
  const GoldenTable golden = load_golden(golden_path);
  report.checks.push_back({"golden checksum", golden.expected_checksum == golden.actual_checksum,
                           "expected " + (golden.expected_checksum.empty() ? "<missing>" : golden.expected_checksum) +
                               ", got " + golden.actual_checksum});
  report.checks.push_back({"golden table has 24 cells", golden.cells.size() == 24,
                           std::to_string(golden.cells.size()) + " cells"});

  Json rows = Json::array();
  report.csv = {{"genus", "q", "count", "expected", "source", "status"}};
  auto emit = [&](unsigned genus, std::uint64_t q, const Integer& count, const Integer& expected,
                  const char* source) {
    const bool pass = count == expected;
    const std::string name = "g=" + std::to_string(genus) + " q=" + std::to_string(q);
    report.checks.push_back({name + " (" + source + ")", pass, count.get_str()});
    Json row;
    row["genus"] = genus;
    row["q"] = q;
    row["count"] = count.get_str();
    row["expected"] = expected.get_str();
    row["source"] = source;
    row["pass"] = pass;
    rows.push_back(row);
    report.csv.push_back({std::to_string(genus), std::to_string(q), count.get_str(), expected.get_str(), source,
                          pass ? "pass" : "FAIL"});
  };

  std::set<std::pair<unsigned, std::uint64_t>> filled;
  for (const auto& cell : golden.cells) {
    filled.emplace(cell.genus, cell.q);
    emit(cell.genus, cell.q, count::count_semi(field_for(cell.q), cell.genus, options).count, cell.count, "golden");
  }
  if (extend) {
    for (unsigned genus = 1; genus <= 3; ++genus) {
      for (auto q : kTableColumns) {
        if (filled.count({genus, q})) continue;
        emit(genus, q, count::count_semi(field_for(q), genus, options).count,
             count::count_closed(Integer(std::to_string(q)), genus), "closed");
      }
    }
  }
  report.results["golden"] = golden_path.string();
  report.results["rows"] = rows;
  return report;
}

Report cmd_verify(unsigned genus_max, const count::CountOptions& options) {
  if (genus_max == 0) throw Error(ErrorKind::GenusOutOfRange, "verify needs --genus >= 1");
  Report report;
  report.command = "verify";
  const auto data = tqft::build_transfer();
  Json classes = Json::array();
  for (unsigned g = 1; g <= genus_max; ++g) {
    const IntPoly geometric = geom::rep_class(g);
    const IntPoly quantum = tqft::close_surface(g, data);
    add_equal(report, "g=" + std::to_string(g) + ": stratification = transfer matrix", geometric, quantum);
    Json entry;
    entry["genus"] = g;
    entry["virtual_class"] = geometric.to_string();
    if (g <= 3) {
      const auto arithmetic = katz::katz_epoly(katz::SamplePlan::default_for(g), count::Engine::Semi, options);
      add_equal(report, "g=" + std::to_string(g) + ": stratification = point-count interpolation", geometric,
                arithmetic.epoly);
    }
    if (g <= 2) {
      for (std::uint64_t q : {2U, 3U, 4U, 5U}) {
        const auto field = field_for(q);
        const std::string tag = "g=" + std::to_string(g) + " q=" + std::to_string(q);
        const auto naive = count::count_naive(field, g, options).count;
        add_equal(report, tag + ": naive = semi", naive, count::count_semi(field, g, options).count);
        if (g == 1) {
          add_equal(report, tag + ": generic table = naive",
                    count::count_group_generic(count::aff_group_table(field), g, options), naive);
        }
      }
    }
    classes.push_back(entry);
  }
  for (const auto& c : tqft::eigen_verify(data)) report.checks.push_back({c.name, c.pass, c.details});
  report.results["genus_max"] = genus_max;
  report.results["classes"] = classes;
  return report;
}

}  // namespace affrep::cli
