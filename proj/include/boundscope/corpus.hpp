#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boundscope/moments.hpp"
#include "boundscope/poly.hpp"

namespace boundscope {

/// A published test function with its printed metadata.
struct BuiltinFunction {
  std::string key;
  std::string name;
  std::string expression;
  double fhat_max_printed = 0.0;
  std::uint32_t degree_printed = 0;
  bool convex = false;
  double f_min = 0.0;

  [[nodiscard]] Polynomial polynomial() const;
  [[nodiscard]] Box box() const { return Box::cube(2, -1.0, 1.0); }
};

/// One row of the published comparison table.
struct ReferenceRow {
  std::string function;
  std::uint32_t r = 0;
  double lasserre = 0.0;
  double sa = 0.0;
};

/// The data files compiled into the binary.
std::string_view embedded_table1_csv();
std::string_view embedded_table2_csv();

std::vector<BuiltinFunction> parse_corpus_csv(std::string_view csv);
std::vector<ReferenceRow> parse_reference_csv(std::string_view csv);

/// booth, matyas, motzkin, camel3 in table order.
const std::vector<BuiltinFunction>& builtin_corpus();
/// nullptr if no builtin has this key.
const BuiltinFunction* find_builtin(std::string_view key);

}  // namespace boundscope
