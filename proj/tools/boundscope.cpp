// Command-line front end: bound, table, grid and verify verbs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "boundscope/cli.hpp"
#include "boundscope/corpus.hpp"
#include "boundscope/errors.hpp"

namespace bs = boundscope;
namespace cli = boundscope::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitTolerance = 3;

struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    options[name] = app->add_option("--" + name, values[name], help);
  }

  [[nodiscard]] cli::Settings given() const {
    cli::Settings settings;
    for (const auto& [name, option] : options) {
      if (option->count() > 0) settings[name] = values.at(name);
    }
    return settings;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bs::InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Config-file values sit beneath explicit flags.
cli::Settings resolve_settings(const FlagSet& flags, const std::string& config_path) {
  cli::Settings settings = flags.given();
  if (!config_path.empty()) settings = cli::merge_settings(cli::parse_settings(read_file(config_path)), settings);
  return settings;
}

template <typename Writer>
void write_output(const std::string& path, bool append, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout, true);
    return;
  }
  const bool fresh = !append || !std::ifstream(path).good();
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw bs::InputError("cannot write '" + path + "'");
  writer(out, fresh);
}

void add_function_flags(CLI::App* app, FlagSet& flags) {
  flags.add(app, "function", "builtin function: booth, matyas, motzkin, camel3");
  flags.add(app, "expr", "polynomial expression in x1..xn");
  flags.add(app, "n", "number of variables for --expr (default 2)");
  flags.add(app, "box", "domain as lo:hi,lo:hi,... (default [-1,1]^n)");
  flags.add(app, "r", "hierarchy level");
  flags.add(app, "t", "temperature");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure-based and Boltzmann upper bounds for polynomial minimization over a box"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;

  auto* bound = app.add_subcommand("bound", "compute bounds and append CSV rows");
  FlagSet bound_flags;
  add_function_flags(bound, bound_flags);
  bound_flags.add(bound, "method", "lasserre | sa | taylor | chain");
  bound_flags.add(bound, "r-max", "last level of a range starting at --r");
  bound_flags.add(bound, "basis", "monomial | orthonormal");
  bound_flags.add(bound, "fhat", "printed | computed");
  bound_flags.add(bound, "timing", "include runtime column (true/false)");
  bound_flags.add(bound, "out", "CSV file to append to (stdout if absent)");
  bound->add_option("--config", config_path, "key=value file; flags override it");

  auto* table = app.add_subcommand("table", "reproduce a published table and report deviations");
  std::string which = "table2";
  std::string reference_path;
  std::string table_basis = "orthonormal";
  table->add_option("which", which, "table1 | table2")->check(CLI::IsMember({"table1", "table2"}));
  table->add_option("--out", out_path, "comparison CSV (stdout if absent)");
  table->add_option("--reference", reference_path, "reference CSV replacing the embedded table 2");
  table->add_option("--basis", table_basis, "monomial | orthonormal");

  auto* grid = app.add_subcommand("grid", "emit density values on a 2-D grid");
  FlagSet grid_flags;
  add_function_flags(grid, grid_flags);
  std::string kind = "boltzmann";
  std::size_t grid_m = 201;
  grid->add_option("--kind", kind, "boltzmann | sos | taylor");
  grid->add_option("--grid-m", grid_m, "points per axis");
  grid->add_option("--out", out_path, "CSV output (stdout if absent)");
  grid->add_option("--config", config_path, "key=value file; flags override it");

  auto* verify = app.add_subcommand("verify", "run the inequality-chain and property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bound) {
      const cli::RunConfig config = cli::make_run_config(resolve_settings(bound_flags, config_path));
      const auto reports = cli::run_bound(config);
      write_output(config.out, true, [&](std::ostream& out, bool fresh) {
        if (fresh) out << bs::bound_csv_header(config.with_runtime) << '\n';
        for (const auto& report : reports) bs::write_csv_row(out, report, config.with_runtime);
      });
      return kExitOk;
    }
    if (*table) {
      cli::ComparisonReport report;
      if (which == "table1") {
        report = cli::reproduce_table1();
      } else {
        cli::TableOptions options;
        options.basis = bs::parse_basis_kind(table_basis);
        if (!reference_path.empty()) options.reference_csv = read_file(reference_path);
        report = cli::reproduce_table2(options);
      }
      write_output(out_path, false, [&](std::ostream& out, bool) { cli::write_comparison_csv(out, report); });
      cli::print_comparison_summary(std::cerr, report);
      return report.ok() ? kExitOk : kExitTolerance;
    }
    if (*grid) {
      const cli::RunConfig config = cli::make_run_config(resolve_settings(grid_flags, config_path));
      cli::GridSpec spec;
      spec.kind = cli::parse_density_kind(kind);
      spec.grid_m = grid_m;
      spec.t = config.t;
      spec.r = config.r;
      const auto values = cli::density_grid(config.objective(), config.box, spec);
      write_output(out_path, false, [&](std::ostream& out, bool) { cli::write_grid_csv(out, values); });
      return kExitOk;
    }
    if (*verify) {
      const auto results = cli::run_verification_suite(&std::cout);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return ok ? kExitOk : kExitTolerance;
    }
  } catch (const bs::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bs::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
