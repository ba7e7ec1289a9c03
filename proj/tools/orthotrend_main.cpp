// orthotrend: paired-orthant trend analysis from the command line.
//
//   orthotrend analyze data.csv [--columns a,b,c] [--no-header] [--delimiter ';']
//                               [--format table|json|csv] [--permutation K] [--seed S]
//                               [--alpha A]
//   orthotrend orthants N
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "orthotrend/errors.hpp"
#include "orthotrend/io.hpp"
#include "orthotrend/iota.hpp"
#include "orthotrend/permutation.hpp"
#include "orthotrend/sign_pattern.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct RunConfig {
  std::string input = "-";
  std::string format = "table";
  std::vector<std::string> columns;
  bool no_header = false;
  std::string delimiter = ",";
  std::optional<std::uint32_t> permutations;
  std::uint64_t seed = 0;
  double alpha = 0.05;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool color_enabled() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && *no_color != '\0') return false;
  return ::isatty(STDOUT_FILENO) == 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw orthotrend::Error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_analyze(const RunConfig& cfg) {
  static const std::map<std::string, orthotrend::ReportFormat> formats{
      {"table", orthotrend::ReportFormat::table},
      {"json", orthotrend::ReportFormat::json},
      {"csv", orthotrend::ReportFormat::csv}};
  if (cfg.delimiter.size() != 1) throw UsageError("--delimiter must be a single character");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (cfg.permutations && *cfg.permutations < orthotrend::kMinReplicates) {
    throw UsageError("--permutation must be at least " + std::to_string(orthotrend::kMinReplicates));
  }

  orthotrend::CsvOptions options;
  options.has_header = !cfg.no_header;
  options.columns = cfg.columns;
  options.delimiter = cfg.delimiter.front();
  if (options.delimiter == '"') throw UsageError("--delimiter cannot be a quote");

  const auto data = orthotrend::parse_csv(read_input(cfg.input), options);
  std::optional<orthotrend::PermutationSettings> perm;
  if (cfg.permutations) perm = orthotrend::PermutationSettings{*cfg.permutations, cfg.seed};
  const auto report = orthotrend::analyze(data, perm);

  orthotrend::TableStyle style;
  style.alpha = cfg.alpha;
  style.color = color_enabled();
  std::cout << orthotrend::serialize_report(report, formats.at(cfg.format), style);
  return 0;
}

int cmd_orthants(int dimension) {
  try {
    orthotrend::check_dimension(dimension);
  } catch (const orthotrend::DimensionError& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  for (const auto& po : orthotrend::enumerate_paired_orthants(dimension)) {
    os << po.index << ": " << po.label() << "\n";
  }
  std::cout << os.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired-orthant data-trend coefficients for N jointly observed variables"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "Compute delta, iota, Z and p for every trend");
  analyze->add_option("input", cfg.input, "CSV file, or - for standard input")->required();
  analyze->add_option("--columns", cfg.columns, "Columns to use, by label or 1-based number")
      ->delimiter(',');
  analyze->add_flag("--no-header", cfg.no_header, "First record is data; columns become S1..SN");
  analyze->add_option("--delimiter", cfg.delimiter, "Field delimiter")->capture_default_str();
  analyze->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  analyze->add_option("--permutation", cfg.permutations, "Permutation replicates K (>= 99)");
  analyze->add_option("--seed", cfg.seed, "Permutation seed")->capture_default_str();
  analyze->add_option("--alpha", cfg.alpha, "Significance level marked with '*' in tables")
      ->capture_default_str();

  int dimension = 0;
  auto* orthants = app.add_subcommand("orthants", "List the paired orthants for N variables");
  orthants->add_option("N", dimension, "Number of variables (2..16)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    return cmd_orthants(dimension);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const orthotrend::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
