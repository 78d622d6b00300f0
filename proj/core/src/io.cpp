#include "trigspec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "trigspec/errors.hpp"

namespace trigspec {

namespace {

using nlohmann::json;

std::string_view kind_tag(SignalKind kind) {
  switch (kind) {
    case SignalKind::HarmonicSum: return "HarmonicSum";
    case SignalKind::PowerDecayCosine: return "PowerDecayCosine";
    case SignalKind::PowerDecaySine: return "PowerDecaySine";
  }
  return "?";
}

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw DomainError(std::string("signal JSON is missing \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(std::string("signal JSON field \"") + key + "\" has the wrong type");
  }
}

// JSON numbers are written as raw text so the 17-digit formatting is kept.
json raw_number(double v) { return json::parse(format_number(v)); }

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_number(long long value) { return std::to_string(value); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw DomainError("CSV row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

std::string CsvTable::json() const {
  nlohmann::json doc = nlohmann::json::object();
  doc["columns"] = header_;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& cell : r) {
      const nlohmann::json parsed = nlohmann::json::parse(cell, nullptr, false);
      row.push_back(parsed.is_discarded() ? nlohmann::json(cell) : parsed);
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

AnalyticSignal parse_signal_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed signal JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("signal JSON must be an object");
  const auto kind = required<std::string>(doc, "kind");
  if (kind == "HarmonicSum") {
    std::vector<Harmonic> terms;
    for (const auto& t : required<json>(doc, "terms")) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() || !t[2].is_number()) {
        throw DomainError("HarmonicSum terms must be [k,a,b] triples with integer k");
      }
      terms.push_back({t[0].get<int>(), t[1].get<double>(), t[2].get<double>()});
    }
    const int r = doc.contains("r") ? required<int>(doc, "r") : 1;
    std::optional<double> variation;
    if (doc.contains("variation")) variation = required<double>(doc, "variation");
    return AnalyticSignal::harmonic_sum(std::move(terms), r, variation);
  }
  if (kind == "PowerDecayCosine" || kind == "PowerDecaySine") {
    const double p = required<double>(doc, "p");
    const SmoothnessInfo sm{required<int>(doc, "r"), required<double>(doc, "variation")};
    return kind == "PowerDecayCosine" ? AnalyticSignal::power_decay_cosine(p, sm)
                                      : AnalyticSignal::power_decay_sine(p, sm);
  }
  throw UnsupportedSignalError("unknown signal kind '" + kind + "'");
}

std::string signal_to_json(const AnalyticSignal& signal) {
  json doc = json::object();
  doc["kind"] = std::string(kind_tag(signal.kind()));
  if (signal.kind() == SignalKind::HarmonicSum) {
    json terms = json::array();
    for (const auto& h : signal.terms()) terms.push_back({h.k, raw_number(h.a), raw_number(h.b)});
    doc["terms"] = terms;
  } else {
    doc["p"] = raw_number(signal.p());
  }
  doc["r"] = signal.smoothness().r;
  doc["variation"] = raw_number(signal.smoothness().variation);
  return doc.dump() + "\n";
}

std::string spline_to_json(const TrigSpline& spline) {
  json doc = json::object();
  doc["r"] = spline.config().r;
  doc["variant"] = std::string(variant_tag(spline.config().variant));
  doc["N"] = spline.spectrum().grid.size();
  doc["J"] = spline.J();
  doc["a0"] = raw_number(spline.a0());
  json coeffs = json::array();
  for (long long j = 1; j <= spline.J(); ++j) {
    const CoeffPair c = spline.coeffs()[j - 1];
    if (c.a != 0.0 || c.b != 0.0) coeffs.push_back({j, raw_number(c.a), raw_number(c.b)});
  }
  doc["coeffs"] = coeffs;
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DomainError("write failed for " + path.string());
}

}  // namespace trigspec
