#include "boundscope/corpus.hpp"

#include <charconv>
#include <sstream>

#include "boundscope/errors.hpp"
#include "boundscope/parser.hpp"

namespace boundscope {

namespace {

std::vector<std::vector<std::string>> split_csv(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

double to_double(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw InputError("bad number in data file: '" + text + "'");
  return value;
}

std::uint32_t to_uint(const std::string& text) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw InputError("bad integer in data file: '" + text + "'");
  return value;
}

}  // namespace

Polynomial BuiltinFunction::polynomial() const { return parse_polynomial(expression, 2); }

std::vector<BuiltinFunction> parse_corpus_csv(std::string_view csv) {
  std::vector<BuiltinFunction> corpus;
  for (auto& f : split_csv(csv)) {
    if (f.size() != 7) throw InputError("corpus rows need 7 fields");
    corpus.push_back({f[0], f[1], f[2], to_double(f[3]), to_uint(f[4]), f[5] == "yes", to_double(f[6])});
  }
  return corpus;
}

std::vector<ReferenceRow> parse_reference_csv(std::string_view csv) {
  std::vector<ReferenceRow> rows;
  for (auto& f : split_csv(csv)) {
    if (f.size() != 4) throw InputError("reference rows need 4 fields: function,r,lasserre,sa");
    rows.push_back({f[0], to_uint(f[1]), to_double(f[2]), to_double(f[3])});
  }
  return rows;
}

const std::vector<BuiltinFunction>& builtin_corpus() {
  static const std::vector<BuiltinFunction> corpus = parse_corpus_csv(embedded_table1_csv());
  return corpus;
}

const BuiltinFunction* find_builtin(std::string_view key) {
  for (const auto& f : builtin_corpus()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

}  // namespace boundscope
