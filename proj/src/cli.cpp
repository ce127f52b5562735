#include "boundscope/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "boundscope/annealing.hpp"
#include "boundscope/corpus.hpp"
#include "boundscope/errors.hpp"
#include "boundscope/parser.hpp"
#include "boundscope/taylor.hpp"

namespace boundscope::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view key, const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError("--" + std::string(key) + ": expected a number, got '" + text + "'");
  }
  return value;
}

std::uint32_t parse_uint(std::string_view key, const std::string& text) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("--" + std::string(key) + ": expected a nonnegative integer, got '" + text + "'");
  }
  return value;
}

// Runs task(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& task) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

ComparisonRow compare(std::string function, std::string quantity, std::optional<std::uint32_t> r, double computed,
                      double reference, Tolerance tolerance) {
  ComparisonRow row{std::move(function), std::move(quantity), r, computed, reference, 0.0, 0.0, 0.0, false, {}};
  row.abs_dev = std::abs(computed - reference);
  row.rel_dev = reference != 0.0 ? row.abs_dev / std::abs(reference) : row.abs_dev;
  row.allowed = tolerance.allowed(reference);
  row.ok = row.abs_dev <= row.allowed;
  return row;
}

ComparisonRow failed_row(std::string function, std::string quantity, std::optional<std::uint32_t> r,
                         double reference, const std::exception& error) {
  ComparisonRow row{std::move(function), std::move(quantity), r, NAN, reference, 0.0, 0.0, 0.0, false, {}};
  row.abs_dev = row.rel_dev = NAN;
  row.ok = false;
  row.note = std::string("error: ") + error.what();
  return row;
}

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

Settings parse_settings(std::string_view text) {
  Settings settings;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_number) + ": expected key=value");
    }
    std::string key = trim(std::string_view(content).substr(0, eq));
    if (key.starts_with("--")) key.erase(0, 2);
    if (key.empty()) throw InputError("config line " + std::to_string(line_number) + ": empty key");
    settings[key] = trim(std::string_view(content).substr(eq + 1));
  }
  return settings;
}

Settings merge_settings(Settings base, const Settings& overrides) {
  for (const auto& [key, value] : overrides) base[key] = value;
  return base;
}

Polynomial RunConfig::objective() const {
  if (!function.empty()) {
    const BuiltinFunction* builtin = find_builtin(function);
    if (builtin == nullptr) throw InputError("unknown builtin function '" + function + "'");
    return builtin->polynomial();
  }
  return parse_polynomial(expression, n);
}

std::string RunConfig::label() const { return function.empty() ? expression : function; }

Box parse_box(std::string_view text, std::size_t n) {
  std::vector<Interval> intervals;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string part = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("--box: each axis must be written lo:hi, got '" + part + "'");
    intervals.push_back({parse_double("box", trim(std::string_view(part).substr(0, colon))),
                         parse_double("box", trim(std::string_view(part).substr(colon + 1)))});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (intervals.size() != n) {
    throw InputError("--box has " + std::to_string(intervals.size()) + " axes but n = " + std::to_string(n));
  }
  return Box(std::move(intervals));
}

RunConfig make_run_config(const Settings& settings) {
  static const std::vector<std::string> known = {"function", "expr", "n",     "box", "method", "r",
                                                 "r-max",    "t",    "basis", "fhat", "out",   "timing"};
  for (const auto& [key, value] : settings) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw InputError("unknown setting '" + key + "'");
  }
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return it->second;
  };

  RunConfig config;
  const auto function = get("function");
  const auto expr = get("expr");
  if (function.has_value() == expr.has_value()) {
    throw InputError("exactly one of --function and --expr must be given");
  }
  if (function) {
    if (find_builtin(*function) == nullptr) {
      throw InputError("unknown builtin function '" + *function + "' (expected booth, matyas, motzkin or camel3)");
    }
    config.function = *function;
    config.n = 2;
    if (const auto n = get("n"); n && parse_uint("n", *n) != 2) throw InputError("builtin functions have n = 2");
  } else {
    config.expression = *expr;
    if (const auto n = get("n")) config.n = parse_uint("n", *n);
    if (config.n == 0) throw InputError("--n must be positive");
  }
  config.box = Box::cube(config.n, -1.0, 1.0);
  if (const auto box = get("box")) config.box = parse_box(*box, config.n);
  if (const auto method = get("method")) config.method = parse_method(*method);
  if (const auto r = get("r")) config.r = parse_uint("r", *r);
  if (const auto r_max = get("r-max")) {
    config.r_max = parse_uint("r-max", *r_max);
    if (*config.r_max < config.r) throw InputError("--r-max must be >= --r");
  }
  if (const auto t = get("t")) {
    config.t = parse_double("t", *t);
    if (!(*config.t > 0.0)) throw InputError("--t must be positive");
  }
  if (const auto basis = get("basis")) config.basis = parse_basis_kind(*basis);
  if (const auto fhat = get("fhat")) {
    if (*fhat == "printed") config.fhat = FhatMode::printed;
    else if (*fhat == "computed") config.fhat = FhatMode::computed;
    else throw InputError("--fhat must be printed or computed");
  }
  if (const auto out = get("out")) config.out = *out;
  if (const auto timing = get("timing")) config.with_runtime = (*timing == "true" || *timing == "1" || *timing == "yes");

  if (config.method != Method::lasserre && config.method != Method::taylor && config.r == 0) {
    throw InputError("--r must be >= 1 for this method");
  }
  if (config.method == Method::taylor && !config.t) throw InputError("--method taylor needs --t");
  // Validate the expression now so usage errors surface before any numerics.
  (void)config.objective();
  return config;
}

std::vector<BoundReport> run_bound(const RunConfig& config) {
  const Polynomial f = config.objective();
  if (f.dimension() != config.box.dimension()) throw InputError("objective dimension does not match the box");
  const BuiltinFunction* builtin = config.function.empty() ? nullptr : find_builtin(config.function);
  const std::uint32_t last = config.r_max.value_or(config.r);

  std::optional<double> fhat;
  auto resolve_fhat = [&]() {
    if (!fhat) {
      fhat = (config.fhat == FhatMode::printed && builtin) ? builtin->fhat_max_printed : fhat_max(f, config.box);
    }
    return *fhat;
  };

  std::vector<BoundReport> reports;
  for (std::uint32_t r = config.r; r <= last; ++r) {
    switch (config.method) {
      case Method::lasserre:
        reports.push_back(lasserre_upper_bound(f, config.box, r, config.basis, config.label()));
        break;
      case Method::sa: {
        if (config.t) {
          BoundReport report;
          report.method = Method::sa;
          report.function = config.label();
          report.r = r;
          report.t = config.t;
          report.value = boltzmann_expectation(f, config.box, *config.t);
          report.notes.emplace_back("fixed temperature");
          reports.push_back(std::move(report));
        } else {
          reports.push_back(sa_bound(f, config.box, r, f.is_constant() ? std::nullopt : std::optional(resolve_fhat()),
                                     config.label()));
        }
        break;
      }
      case Method::taylor: {
        BoundReport report;
        report.method = Method::taylor;
        report.function = config.label();
        report.r = r;
        report.t = config.t;
        report.value = taylor_density_bound(f, config.box, r, *config.t);
        report.basis_size = MonomialBasis(f.dimension(), r * f.degree()).size();
        reports.push_back(std::move(report));
        break;
      }
      case Method::chain: {
        ChainOptions options;
        options.fhat_max = resolve_fhat();
        if (builtin) options.f_min = builtin->f_min;
        const double t = config.t ? *config.t : std::numbers::e * *options.fhat_max / r;
        const ChainReport chain = verify_chain(f, config.box, r, t, options);
        BoundReport report;
        report.method = Method::chain;
        report.function = config.label();
        report.r = r;
        report.t = t;
        report.value = chain.lasserre_value;
        report.basis_size = MonomialBasis(f.dimension(), chain.lasserre_order).size();
        report.notes = {"taylor=" + format_number(chain.taylor_value),
                        "boltzmann=" + format_number(chain.boltzmann_value),
                        "error_term=" + format_number(chain.error_term),
                        "theorem_bound=" + format_number(chain.theorem_bound),
                        std::string("schedule_ok=") + (chain.schedule_ok ? "yes" : "no"),
                        std::string("holds=") + (chain.holds() ? "yes" : "no")};
        reports.push_back(std::move(report));
        break;
      }
    }
  }
  return reports;
}

double Tolerance::allowed(double reference) const { return std::max(abs, rel * std::abs(reference)); }

bool ComparisonReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& row) { return row.ok; });
}

double ComparisonReport::max_abs_dev(std::string_view quantity) const {
  double worst = 0.0;
  for (const auto& row : rows) {
    if (row.quantity == quantity) worst = std::max(worst, std::isnan(row.abs_dev) ? INFINITY : row.abs_dev);
  }
  return worst;
}

double ComparisonReport::max_rel_dev(std::string_view quantity) const {
  double worst = 0.0;
  for (const auto& row : rows) {
    if (row.quantity == quantity) worst = std::max(worst, std::isnan(row.rel_dev) ? INFINITY : row.rel_dev);
  }
  return worst;
}

ComparisonReport reproduce_table1() {
  ComparisonReport report;
  for (const auto& builtin : builtin_corpus()) {
    try {
      const Polynomial f = builtin.polynomial();
      report.rows.push_back(compare(builtin.key, "degree", std::nullopt, f.degree(), builtin.degree_printed,
                                    kDegreeTolerance));
      ComparisonRow fhat_row =
          compare(builtin.key, "fhat_max", std::nullopt, fhat_max(f, builtin.box()), builtin.fhat_max_printed,
                  kFhatTolerance);
      if (fhat_row.abs_dev > 1e-6 * std::abs(fhat_row.reference)) fhat_row.note = "printed value is rounded";
      report.rows.push_back(std::move(fhat_row));
    } catch (const Error& error) {
      report.rows.push_back(failed_row(builtin.key, "fhat_max", std::nullopt, builtin.fhat_max_printed, error));
    }
  }
  return report;
}

ComparisonReport reproduce_table2(const TableOptions& options) {
  const std::vector<ReferenceRow> reference =
      parse_reference_csv(options.reference_csv.empty() ? embedded_table2_csv() : options.reference_csv);

  // Two cells per reference row: lasserre at 2i, sa at 2i + 1.
  std::vector<ComparisonRow> cells(2 * reference.size());
  parallel_for(cells.size(), options.threads == 0 ? worker_count() : options.threads, [&](std::size_t cell) {
    const ReferenceRow& row = reference[cell / 2];
    const bool lasserre = cell % 2 == 0;
    const std::string quantity = lasserre ? "lasserre" : "sa";
    const double expected = lasserre ? row.lasserre : row.sa;
    try {
      const BuiltinFunction* builtin = find_builtin(row.function);
      if (builtin == nullptr) throw InputError("reference names unknown function '" + row.function + "'");
      const Polynomial f = builtin->polynomial();
      const double computed = lasserre
                                  ? lasserre_upper_bound(f, builtin->box(), row.r, options.basis).value
                                  : sa_bound(f, builtin->box(), row.r, builtin->fhat_max_printed).value;
      cells[cell] = compare(row.function, quantity, row.r, computed, expected,
                            lasserre ? kLasserreTolerance : kSaTolerance);
    } catch (const Error& error) {
      cells[cell] = failed_row(row.function, quantity, row.r, expected, error);
    }
  });
  return {std::move(cells)};
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
  out << "function,quantity,r,computed,reference,abs_dev,rel_dev,allowed,status,note\n";
  for (const auto& row : report.rows) {
    out << row.function << ',' << row.quantity << ',' << (row.r ? std::to_string(*row.r) : "") << ','
        << format_number(row.computed) << ',' << format_number(row.reference) << ',' << format_number(row.abs_dev)
        << ',' << format_number(row.rel_dev) << ',' << format_number(row.allowed) << ','
        << (row.ok ? "ok" : "FAIL") << ',' << csv_field(row.note) << '\n';
  }
}

void print_comparison_summary(std::ostream& out, const ComparisonReport& report) {
  std::vector<std::string> quantities;
  for (const auto& row : report.rows) {
    if (std::find(quantities.begin(), quantities.end(), row.quantity) == quantities.end()) {
      quantities.push_back(row.quantity);
    }
  }
  for (const auto& q : quantities) {
    const auto failures = std::count_if(report.rows.begin(), report.rows.end(),
                                        [&](const ComparisonRow& row) { return row.quantity == q && !row.ok; });
    out << q << ": max abs dev " << format_number(report.max_abs_dev(q)) << ", max rel dev "
        << format_number(report.max_rel_dev(q)) << ", " << failures << " outside tolerance\n";
  }
  for (const auto& row : report.rows) {
    if (!row.ok) {
      out << "  FAIL " << row.function << ' ' << row.quantity << (row.r ? " r=" + std::to_string(*row.r) : "")
          << ": computed " << format_number(row.computed) << ", reference " << format_number(row.reference)
          << (row.note.empty() ? "" : " (" + row.note + ")") << '\n';
    }
  }
}

DensityKind parse_density_kind(std::string_view text) {
  if (text == "boltzmann") return DensityKind::boltzmann;
  if (text == "sos") return DensityKind::sos;
  if (text == "taylor") return DensityKind::taylor;
  throw InputError("unknown density kind '" + std::string(text) + "' (expected boltzmann, sos or taylor)");
}

double DensityGrid::trapezoid_mass() const {
  const std::size_t m1 = x1.size();
  const std::size_t m2 = x2.size();
  auto trapezoid_weight = [](const std::vector<double>& x, std::size_t i) {
    const double left = i > 0 ? x[i] - x[i - 1] : 0.0;
    const double right = i + 1 < x.size() ? x[i + 1] - x[i] : 0.0;
    return 0.5 * (left + right);
  };
  std::vector<double> rows(m1);
  for (std::size_t i = 0; i < m1; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m2; ++j) s += trapezoid_weight(x2, j) * values[i * m2 + j];
    rows[i] = trapezoid_weight(x1, i) * s;
  }
  return pairwise_sum(rows);
}

DensityGrid density_grid(const Polynomial& f, const Box& box, const GridSpec& spec) {
  if (f.dimension() != 2 || box.dimension() != 2) {
    throw UnsupportedDimension("density grids are only emitted for n = 2");
  }
  if (spec.grid_m < 2) throw InputError("grid needs at least 2 points per axis");

  std::function<double(std::span<const double>)> density;
  Polynomial poly_density(2);
  std::optional<BoltzmannIntegrals> boltzmann;
  switch (spec.kind) {
    case DensityKind::boltzmann:
      if (!spec.t) throw InputError("Boltzmann density needs --t");
      boltzmann = boltzmann_integrals(f, box, *spec.t);
      density = [&](std::span<const double> x) {
        return std::exp(-(f(x) - boltzmann->shift) / boltzmann->t) / boltzmann->denominator;
      };
      break;
    case DensityKind::sos:
      poly_density = optimal_density(f, box, spec.r);
      density = [&](std::span<const double> x) { return poly_density(x); };
      break;
    case DensityKind::taylor:
      if (!spec.t) throw InputError("truncated exponential density needs --t");
      poly_density = taylor_density(f, box, spec.r, *spec.t);
      density = [&](std::span<const double> x) { return poly_density(x); };
      break;
  }

  DensityGrid grid;
  const std::size_t m = spec.grid_m;
  for (std::size_t i = 0; i < m; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(m - 1);
    grid.x1.push_back(i + 1 == m ? box[0].hi : box[0].lo + s * box[0].length());
    grid.x2.push_back(i + 1 == m ? box[1].hi : box[1].lo + s * box[1].length());
  }
  grid.values.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double point[2] = {grid.x1[i], grid.x2[j]};
      grid.values[i * m + j] = density(point);
    }
  }
  return grid;
}

void write_grid_csv(std::ostream& out, const DensityGrid& grid) {
  out << "x1,x2,density\n";
  const std::size_t m2 = grid.x2.size();
  for (std::size_t i = 0; i < grid.x1.size(); ++i) {
    for (std::size_t j = 0; j < m2; ++j) {
      out << format_number(grid.x1[i]) << ',' << format_number(grid.x2[j]) << ','
          << format_number(grid.values[i * m2 + j]) << '\n';
    }
  }
}

std::vector<CheckResult> run_verification_suite(std::ostream* progress) {
  std::vector<CheckResult> results;
  auto record = [&](CheckResult result) {
    if (progress) *progress << (result.passed ? "PASS " : "FAIL ") << result.name << ": " << result.detail << '\n';
    results.push_back(std::move(result));
  };
  auto guarded = [&](const std::string& name, const std::function<CheckResult()>& body) {
    try {
      record(body());
    } catch (const std::exception& error) {
      record(check(name, false, std::string("error: ") + error.what()));
    }
  };

  guarded("truncated exponential sandwich", [] {
    double worst = -INFINITY;
    bool ok = true;
    for (std::uint32_t r = 1; r <= 10; ++r) {
      const TruncatedExp phi = truncated_exp(r);
      for (int i = 0; i < 200; ++i) {
        const double lambda = i == 0 ? 0.0 : 1e-3 * std::pow(5e4, (i - 1) / 198.0);
        const double excess = phi.log_excess(lambda);
        const double bound = log_remainder_bound(r, lambda);
        if (std::isnan(excess)) ok = false;
        if (lambda > 0.0) worst = std::max(worst, excess - bound);
      }
    }
    ok = ok && worst <= 1e-12;
    return check("truncated exponential sandwich", ok,
                 "max log(excess) - log(bound) = " + format_number(worst) + " for r = 1..10");
  });

  guarded("truncated exponential positivity", [] {
    double smallest = INFINITY;
    for (std::uint32_t r = 1; r <= 10; ++r) {
      const TruncatedExp phi = truncated_exp(r);
      for (int i = 0; i <= 2000; ++i) smallest = std::min(smallest, phi(-50.0 + 0.05 * i));
    }
    return check("truncated exponential positivity", smallest > 0.0,
                 "min over [-50, 50] = " + format_number(smallest));
  });

  const BuiltinFunction& motzkin = *find_builtin("motzkin");
  for (std::uint32_t r = 1; r <= 4; ++r) {
    const std::string name = "inequality chain motzkin r=" + std::to_string(r);
    guarded(name, [&] {
      const double t = std::numbers::e * motzkin.fhat_max_printed / r;
      const ChainReport chain = verify_chain(motzkin.polynomial(), motzkin.box(), r, t,
                                             {.f_min = motzkin.f_min, .fhat_max = motzkin.fhat_max_printed});
      return check(name, chain.holds() && chain.schedule_ok,
                   "lasserre " + format_number(chain.lasserre_value) + " <= taylor " +
                       format_number(chain.taylor_value) + " <= E + T " +
                       format_number(chain.boltzmann_value + chain.error_term) + "; theorem bound " +
                       format_number(chain.theorem_bound));
    });
  }

  guarded("lifted identity", [] {
    double worst = 0.0;
    const Polynomial x = Polynomial::variable(1, 0);
    for (double t : {0.1, 1.0}) {
      const LiftedIdentity id = lifted_identity_check(x, Box::cube(1, 0.0, 1.0), t);
      worst = std::max(worst, id.gap / (1.0 + std::abs(id.expectation)));
    }
    for (const char* key : {"booth", "matyas", "motzkin", "camel3"}) {
      const BuiltinFunction& fn = *find_builtin(key);
      for (double t : {0.5, 5.0}) {
        const LiftedIdentity id = lifted_identity_check(fn.polynomial(), fn.box(), t);
        worst = std::max(worst, id.gap / (1.0 + std::abs(id.expectation)));
      }
    }
    return check("lifted identity", worst <= 1e-7, "max gap / (1 + |E|) = " + format_number(worst));
  });

  guarded("convex temperature rate", [] {
    double worst = -INFINITY;
    for (const char* key : {"booth", "matyas"}) {
      const BuiltinFunction& fn = *find_builtin(key);
      for (double t : {0.05, 0.5, 5.0, 50.0}) {
        const double gap = boltzmann_expectation(fn.polynomial(), fn.box(), t) - fn.f_min;
        worst = std::max(worst, gap - 2.0 * t);
      }
    }
    return check("convex temperature rate", worst <= 0.0, "max (E - f_min) - n t = " + format_number(worst));
  });

  guarded("boltzmann monotone in t", [] {
    double worst = -INFINITY;
    for (const auto& fn : builtin_corpus()) {
      const Polynomial f = fn.polynomial();
      double previous = -INFINITY;
      for (int k = -6; k <= 8; ++k) {
        const double e = boltzmann_expectation(f, fn.box(), std::pow(2.0, k) * fn.fhat_max_printed / 64.0);
        worst = std::max(worst, previous - e);
        previous = e;
      }
    }
    return check("boltzmann monotone in t", worst <= 1e-9, "largest decrease = " + format_number(worst));
  });

  guarded("lasserre monotone in r", [] {
    double worst = -INFINITY;
    double lowest_margin = INFINITY;
    for (const auto& fn : builtin_corpus()) {
      const Polynomial f = fn.polynomial();
      double previous = INFINITY;
      for (std::uint32_t r = 0; r <= 20; ++r) {
        const double value = lasserre_upper_bound(f, fn.box(), r).value;
        worst = std::max(worst, value - previous);
        lowest_margin = std::min(lowest_margin, value - fn.f_min);
        previous = value;
      }
    }
    return check("lasserre monotone in r", worst <= 1e-9 && lowest_margin >= 0.0,
                 "largest increase = " + format_number(worst) + ", min(value - f_min) = " +
                     format_number(lowest_margin));
  });

  guarded("basis invariance", [] {
    double worst = 0.0;
    for (const auto& fn : builtin_corpus()) {
      const Polynomial f = fn.polynomial();
      for (std::uint32_t r = 0; r <= 6; ++r) {
        const double a = lasserre_upper_bound(f, fn.box(), r, BasisKind::monomial).value;
        const double b = lasserre_upper_bound(f, fn.box(), r, BasisKind::orthonormal).value;
        worst = std::max(worst, std::abs(a - b));
      }
    }
    return check("basis invariance", worst <= 1e-8, "max |monomial - orthonormal| = " + format_number(worst));
  });

  return results;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("BOUNDSCOPE_THREADS")) {
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
}

}  // namespace boundscope::cli
