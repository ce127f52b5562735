#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace boundscope {

enum class Method { lasserre, sa, taylor, chain };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// One computed bound; the unit of CSV output.
struct BoundReport {
  Method method = Method::lasserre;
  std::string function;
  std::uint32_t r = 0;
  std::optional<double> t;
  double value = 0.0;
  std::size_t basis_size = 0;
  std::optional<double> condition;
  double runtime_seconds = 0.0;
  std::vector<std::string> notes;
};

/// Formats with 10 significant digits, the precision used in every CSV file.
std::string format_number(double value);

/// Header line matching write_csv_row. Runtime is only included when asked
/// for, since it would make otherwise identical runs differ.
std::string bound_csv_header(bool with_runtime = false);
void write_csv_row(std::ostream& out, const BoundReport& report, bool with_runtime = false);

/// Quotes a CSV field if it contains a separator, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace boundscope
