#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boundscope/cli.hpp"
#include "boundscope/corpus.hpp"
#include "boundscope/errors.hpp"

using namespace boundscope;
using namespace boundscope::cli;

namespace {

RunConfig config_from(std::initializer_list<std::pair<const std::string, std::string>> entries) {
  return make_run_config(Settings(entries));
}

}  // namespace

TEST_CASE("settings files") {
  const auto settings = parse_settings("# comment\n function = motzkin\n--r=7   # trailing\n\nmethod=lasserre\n");
  CHECK(settings.size() == 3);
  CHECK(settings.at("function") == "motzkin");
  CHECK(settings.at("r") == "7");
  CHECK_THROWS_AS(parse_settings("r 7"), InputError);
  CHECK_THROWS_AS(parse_settings("=7"), InputError);

  const auto merged = merge_settings(settings, {{"r", "9"}, {"basis", "monomial"}});
  CHECK(merged.at("r") == "9");
  CHECK(merged.at("basis") == "monomial");
  CHECK(merged.at("function") == "motzkin");
}

TEST_CASE("make_run_config validation") {
  const auto config = config_from({{"expr", "x1 + x2^2 - x3"}, {"n", "3"}, {"box", "0:1, -2:2, 1:3"}, {"r", "2"}});
  CHECK(config.n == 3);
  CHECK(config.box[1].lo == -2.0);
  CHECK(config.box[2].hi == 3.0);
  CHECK(config.label() == "x1 + x2^2 - x3");

  CHECK_THROWS_AS(config_from({{"method", "lasserre"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"expr", "x1"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "rosenbrock"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"colour", "blue"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"method", "taylor"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"method", "sa"}, {"r", "0"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"r", "5"}, {"r-max", "4"}}), InputError);
  CHECK_THROWS_AS(config_from({{"expr", "x1"}, {"n", "2"}, {"box", "0:1"}}), InputError);
  CHECK_THROWS_AS(config_from({{"expr", "x1"}, {"n", "1"}, {"box", "1:0"}}), InputError);
  CHECK_THROWS_AS(config_from({{"expr", "2x1"}}), ParseError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"t", "-1"}}), InputError);
  CHECK_THROWS_AS(config_from({{"function", "motzkin"}, {"basis", "chebyshev"}}), InputError);
}

TEST_CASE("run_bound examples") {
  auto reports = run_bound(config_from({{"function", "motzkin"}, {"method", "lasserre"}, {"r", "7"}}));
  REQUIRE(reports.size() == 1);
  CHECK(std::abs(reports[0].value - 0.7088) <= 1e-3);
  CHECK(reports[0].basis_size == 36);

  reports = run_bound(config_from({{"function", "matyas"}, {"method", "sa"}, {"r", "10"}}));
  REQUIRE(reports.size() == 1);
  CHECK(std::abs(reports[0].value - 12.0390) <= 1e-2);

  reports = run_bound(config_from({{"expr", "1"}, {"method", "lasserre"}, {"r", "3"}}));
  CHECK(reports[0].value == doctest::Approx(1.0));

  reports = run_bound(config_from({{"function", "motzkin"}, {"r", "2"}, {"r-max", "5"}}));
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i].value <= reports[i - 1].value + 1e-12);

  reports = run_bound(config_from({{"expr", "x1"}, {"n", "1"}, {"box", "0:1"}, {"method", "taylor"}, {"t", "1"}}));
  CHECK(reports[0].value == doctest::Approx(0.4375));

  reports = run_bound(config_from({{"expr", "x1"}, {"n", "1"}, {"box", "0:1"}, {"method", "chain"}, {"t", "1"}}));
  REQUIRE(reports.size() == 1);
  CHECK(std::find(reports[0].notes.begin(), reports[0].notes.end(), "holds=yes") != reports[0].notes.end());
}

TEST_CASE("bound CSV output") {
  BoundReport report;
  report.method = Method::sa;
  report.function = "a,b";
  report.r = 3;
  report.t = 0.5;
  report.value = 1.0 / 3.0;
  report.basis_size = 10;
  report.notes = {"x=1", "y=2"};
  std::ostringstream out;
  write_csv_row(out, report);
  CHECK(out.str() == "sa,\"a,b\",3,0.5,0.3333333333,10,,x=1; y=2\n");
  CHECK(bound_csv_header() == "method,function,r,t,value,basis_size,condition,notes");
  CHECK(bound_csv_header(true) == "method,function,r,t,value,basis_size,condition,notes,runtime_s");
}

TEST_CASE("table1 metadata") {
  const auto report = reproduce_table1();
  CHECK(report.ok());
  std::size_t rounded = 0;
  for (const auto& row : report.rows) {
    if (row.note == "printed value is rounded") {
      ++rounded;
      CHECK(row.function == "camel3");
    }
  }
  CHECK(rounded == 1);
  CHECK(report.max_abs_dev("degree") == 0.0);
}

TEST_CASE("table2 comparison flags deviations and is thread independent") {
  const std::string reference = "function,r,lasserre,sa\nbooth,3,118.383,367.834\nmotzkin,7,0.7088,3.8118\n";
  const auto serial = reproduce_table2({reference, BasisKind::orthonormal, 1});
  REQUIRE(serial.rows.size() == 4);
  CHECK(serial.ok());

  const auto parallel = reproduce_table2({reference, BasisKind::orthonormal, 3});
  std::ostringstream a, b;
  write_comparison_csv(a, serial);
  write_comparison_csv(b, parallel);
  CHECK(a.str() == b.str());

  const std::string perturbed = "function,r,lasserre,sa\nbooth,3,118.383,367.834\nmotzkin,7,0.7188,3.8118\n";
  const auto bad = reproduce_table2({perturbed, BasisKind::orthonormal, 2});
  CHECK_FALSE(bad.ok());
  std::size_t failures = 0;
  for (const auto& row : bad.rows) failures += row.ok ? 0 : 1;
  CHECK(failures == 1);
  std::ostringstream summary;
  print_comparison_summary(summary, bad);
  CHECK(summary.str().find("FAIL motzkin lasserre r=7") != std::string::npos);

  CHECK_FALSE(reproduce_table2({"function,r,lasserre,sa\nrosenbrock,3,1,1\n", BasisKind::orthonormal, 1}).ok());
}

TEST_CASE("density grids integrate to one") {
  const auto* motzkin = find_builtin("motzkin");
  const auto boltzmann = density_grid(motzkin->polynomial(), motzkin->box(), {DensityKind::boltzmann, 0.5, 1, 201});
  CHECK(boltzmann.values.size() == 201 * 201);
  CHECK(boltzmann.x1.front() == -1.0);
  CHECK(boltzmann.x2.back() == 1.0);
  CHECK(std::abs(boltzmann.trapezoid_mass() - 1.0) <= 1e-3);

  const auto sos = density_grid(motzkin->polynomial(), motzkin->box(), {DensityKind::sos, std::nullopt, 7, 201});
  CHECK(std::abs(sos.trapezoid_mass() - 1.0) <= 1e-3);
  for (double v : sos.values) CHECK(v >= -1e-12);

  const Box box({{0.0, 2.0}, {-1.0, 0.5}});
  const auto flat = density_grid(Polynomial::constant(2, 4.0), box, {DensityKind::boltzmann, 1.0, 1, 11});
  for (double v : flat.values) CHECK(v == doctest::Approx(1.0 / 3.0));

  std::ostringstream out;
  write_grid_csv(out, density_grid(Polynomial::constant(2, 4.0), box, {DensityKind::sos, std::nullopt, 0, 2}));
  CHECK(out.str().starts_with("x1,x2,density\n0,-1,0.3333333333\n"));

  CHECK_THROWS_AS(density_grid(Polynomial::variable(1, 0), Box::cube(1, 0.0, 1.0), {}), UnsupportedDimension);
  CHECK_THROWS_AS(density_grid(Polynomial::variable(3, 0), Box::cube(3, 0.0, 1.0), {}), UnsupportedDimension);
  CHECK_THROWS_AS(density_grid(motzkin->polynomial(), motzkin->box(), {DensityKind::taylor, std::nullopt, 1, 11}), InputError);
}
