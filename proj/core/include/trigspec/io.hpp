#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "trigspec/signal_model.hpp"
#include "trigspec/trig_spline.hpp"

namespace trigspec {

/// Shortest text with 17 significant digits ('.' decimal, no locale).
std::string format_number(double value);
std::string format_number(long long value);

/// Comma-separated table with LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  template <typename... Cells>
  void add(const Cells&... cells) {
    std::vector<std::string> row;
    row.reserve(sizeof...(cells));
    (row.push_back(cell(cells)), ...);
    add_row(std::move(row));
  }

  void add_row(std::vector<std::string> row);
  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;
  /// {"columns": [...], "rows": [[...], ...]}; non-finite numbers become strings.
  std::string json() const;

 private:
  static std::string cell(double v) { return format_number(v); }
  static std::string cell(int v) { return format_number(static_cast<long long>(v)); }
  static std::string cell(long v) { return format_number(static_cast<long long>(v)); }
  static std::string cell(long long v) { return format_number(v); }
  static std::string cell(bool v) { return v ? "true" : "false"; }
  static std::string cell(const std::string& v) { return v; }
  static std::string cell(const char* v) { return v; }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// {"kind": "HarmonicSum"|"PowerDecayCosine"|"PowerDecaySine",
///  "terms": [[k,a,b],...], "p": ..., "r": ..., "variation": ...}
/// Malformed text or missing fields throw DomainError.
AnalyticSignal parse_signal_json(std::string_view text);
std::string signal_to_json(const AnalyticSignal& signal);

/// {"r", "variant", "N", "J", "a0", "coeffs": [[j,a,b],...]}; only nonzero
/// coefficient pairs are listed.
std::string spline_to_json(const TrigSpline& spline);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace trigspec
