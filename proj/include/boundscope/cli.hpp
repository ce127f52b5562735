#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "boundscope/lasserre.hpp"
#include "boundscope/moments.hpp"
#include "boundscope/poly.hpp"
#include "boundscope/report.hpp"

namespace boundscope::cli {

/// Flat key=value settings; keys are the long CLI flag names without "--".
using Settings = std::map<std::string, std::string>;

/// Parses a config file: one key=value per line, '#' starts a comment.
Settings parse_settings(std::string_view text);
/// Entries of `overrides` replace those of `base`.
Settings merge_settings(Settings base, const Settings& overrides);

enum class FhatMode { printed, computed };

struct RunConfig {
  /// Builtin key; empty when `expression` is used.
  std::string function;
  std::string expression;
  std::size_t n = 2;
  Box box = Box::cube(2, -1.0, 1.0);
  Method method = Method::lasserre;
  std::uint32_t r = 1;
  std::optional<std::uint32_t> r_max;
  std::optional<double> t;
  BasisKind basis = BasisKind::orthonormal;
  FhatMode fhat = FhatMode::printed;
  std::string out;
  bool with_runtime = false;

  [[nodiscard]] Polynomial objective() const;
  [[nodiscard]] std::string label() const;
};

/// Parses "lo:hi,lo:hi,..." with exactly n axes.
Box parse_box(std::string_view text, std::size_t n);

/// Validates settings and builds a configuration; throws InputError.
RunConfig make_run_config(const Settings& settings);

/// One report per r in [r, r_max].
std::vector<BoundReport> run_bound(const RunConfig& config);

/// |computed - reference| <= max(abs, rel * |reference|).
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;

  [[nodiscard]] double allowed(double reference) const;
};

inline constexpr Tolerance kSaTolerance{1e-2, 2e-3};
inline constexpr Tolerance kLasserreTolerance{5e-3, 5e-3};
inline constexpr Tolerance kFhatTolerance{0.0, 1e-3};
inline constexpr Tolerance kDegreeTolerance{0.0, 0.0};

struct ComparisonRow {
  std::string function;
  /// lasserre, sa, fhat_max or degree.
  std::string quantity;
  std::optional<std::uint32_t> r;
  double computed = 0.0;
  double reference = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double allowed = 0.0;
  bool ok = false;
  std::string note;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] double max_abs_dev(std::string_view quantity) const;
  [[nodiscard]] double max_rel_dev(std::string_view quantity) const;
};

struct TableOptions {
  /// Reference CSV text; the embedded table when empty.
  std::string reference_csv;
  BasisKind basis = BasisKind::orthonormal;
  /// 0 means BOUNDSCOPE_THREADS or the hardware concurrency.
  std::size_t threads = 0;
};

ComparisonReport reproduce_table1();
ComparisonReport reproduce_table2(const TableOptions& options = {});

void write_comparison_csv(std::ostream& out, const ComparisonReport& report);
void print_comparison_summary(std::ostream& out, const ComparisonReport& report);

enum class DensityKind { boltzmann, sos, taylor };
DensityKind parse_density_kind(std::string_view text);

struct GridSpec {
  DensityKind kind = DensityKind::boltzmann;
  std::optional<double> t;
  std::uint32_t r = 1;
  std::size_t grid_m = 201;
};

/// Density values on a uniform grid_m x grid_m lattice spanning the box,
/// including its boundary; values[i * m + j] sits at (x1[i], x2[j]).
struct DensityGrid {
  std::vector<double> x1;
  std::vector<double> x2;
  std::vector<double> values;

  /// Trapezoidal-rule integral of the grid values.
  [[nodiscard]] double trapezoid_mass() const;
};

/// Throws UnsupportedDimension unless f has two variables.
DensityGrid density_grid(const Polynomial& f, const Box& box, const GridSpec& spec);
void write_grid_csv(std::ostream& out, const DensityGrid& grid);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Truncated-exponential, inequality-chain and property checks over the
/// builtin corpus. Progress lines go to `progress` when given.
std::vector<CheckResult> run_verification_suite(std::ostream* progress = nullptr);

/// BOUNDSCOPE_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
std::size_t worker_count();

}  // namespace boundscope::cli
