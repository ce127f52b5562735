#include "boundscope/report.hpp"

#include <cstdio>

#include "boundscope/errors.hpp"

namespace boundscope {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::lasserre: return "lasserre";
    case Method::sa: return "sa";
    case Method::taylor: return "taylor";
    case Method::chain: return "chain";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "lasserre") return Method::lasserre;
  if (text == "sa") return Method::sa;
  if (text == "taylor") return Method::taylor;
  if (text == "chain") return Method::chain;
  throw InputError("unknown method '" + std::string(text) + "' (expected lasserre, sa, taylor or chain)");
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string bound_csv_header(bool with_runtime) {
  std::string header = "method,function,r,t,value,basis_size,condition,notes";
  if (with_runtime) header += ",runtime_s";
  return header;
}

void write_csv_row(std::ostream& out, const BoundReport& report, bool with_runtime) {
  std::string notes;
  for (const auto& note : report.notes) notes += (notes.empty() ? "" : "; ") + note;
  out << to_string(report.method) << ',' << csv_field(report.function) << ',' << report.r << ','
      << (report.t ? format_number(*report.t) : "") << ',' << format_number(report.value) << ','
      << report.basis_size << ',' << (report.condition ? format_number(*report.condition) : "") << ','
      << csv_field(notes);
  if (with_runtime) out << ',' << format_number(report.runtime_seconds);
  out << '\n';
}

}  // namespace boundscope
