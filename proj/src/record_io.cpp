#include "trustcal/record_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trustcal/error.hpp"
#include "trustcal/numfmt.hpp"

namespace trustcal {

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line,
                          const std::string& message) {
  throw InputError(path.string() + ":" + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

double parse_double(std::string_view token, const std::filesystem::path& path,
                    std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail_at(path, line, "cannot parse number '" + std::string(token) + "'");
  }
  return value;
}

int parse_label(std::string_view token, const std::filesystem::path& path,
                std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail_at(path, line, "cannot parse label '" + std::string(token) + "'");
  }
  return value;
}

RecordSet read_csv(std::ifstream& in, const std::filesystem::path& path,
                   std::optional<RecordKind> forced) {
  std::string line;
  std::size_t line_no = 0;
  // Header row determines arity and variant.
  if (!std::getline(in, line)) throw EmptyInputError{};
  ++line_no;
  const auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "label") {
    fail_at(path, line_no, "expected header 'label,prob_0,...' or 'label,logit_0,...'");
  }
  const int class_count = static_cast<int>(header.size()) - 1;
  RecordKind kind;
  const std::string_view first = header[1];
  if (first.starts_with("prob_")) {
    kind = RecordKind::Probabilities;
  } else if (first.starts_with("logit_")) {
    kind = RecordKind::Logits;
  } else {
    fail_at(path, line_no, "unrecognized value column '" + std::string(first) + "'");
  }
  const std::string_view prefix = kind == RecordKind::Probabilities ? "prob_" : "logit_";
  for (int c = 0; c < class_count; ++c) {
    const std::string expected = std::string(prefix) + std::to_string(c);
    if (header[c + 1] != expected) {
      fail_at(path, line_no, "expected column '" + expected + "', got '" +
                                 std::string(header[c + 1]) + "'");
    }
  }
  if (forced) kind = *forced;

  RecordSet records(kind, class_count);
  std::vector<double> row(class_count);
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      fail_at(path, line_no, "expected " + std::to_string(header.size()) +
                                 " fields, got " + std::to_string(fields.size()));
    }
    const int label = parse_label(fields[0], path, line_no);
    for (int c = 0; c < class_count; ++c) {
      row[c] = parse_double(fields[c + 1], path, line_no);
    }
    try {
      records.append(row, label);
    } catch (const InputError& e) {
      fail_at(path, line_no, e.what());
    }
  }
  return records;
}

RecordSet read_jsonl(std::ifstream& in, const std::filesystem::path& path,
                     std::optional<RecordKind> forced) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<RecordSet> records;
  RecordKind kind = RecordKind::Probabilities;
  const char* key = nullptr;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail_at(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("label")) {
      fail_at(path, line_no, "expected an object with a 'label' key");
    }
    if (key == nullptr) {
      const bool has_probs = obj.contains("probs");
      const bool has_logits = obj.contains("logits");
      if (forced) {
        kind = *forced;
        key = kind == RecordKind::Probabilities ? "probs" : "logits";
      } else if (has_probs && !has_logits) {
        kind = RecordKind::Probabilities;
        key = "probs";
      } else if (has_logits && !has_probs) {
        kind = RecordKind::Logits;
        key = "logits";
      } else if (has_probs && has_logits) {
        fail_at(path, line_no, "record has both 'probs' and 'logits'");
      } else {
        fail_at(path, line_no, "record has neither 'probs' nor 'logits'");
      }
    }
    if (!obj.contains(key) || !obj[key].is_array()) {
      fail_at(path, line_no, std::string("missing value array '") + key + "'");
    }
    std::vector<double> row;
    row.reserve(obj[key].size());
    for (const auto& v : obj[key]) {
      if (!v.is_number()) fail_at(path, line_no, "value array holds a non-number");
      row.push_back(v.get<double>());
    }
    if (!obj["label"].is_number_integer()) {
      fail_at(path, line_no, "label must be an integer");
    }
    if (!records) {
      if (row.empty()) fail_at(path, line_no, "value array is empty");
      records.emplace(kind, static_cast<int>(row.size()));
    }
    try {
      records->append(row, obj["label"].get<int>());
    } catch (const InputError& e) {
      fail_at(path, line_no, e.what());
    }
  }
  if (!records) throw EmptyInputError{};
  return std::move(*records);
}

}  // namespace

FileFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".jsonl" || ext == ".ndjson" ? FileFormat::Jsonl : FileFormat::Csv;
}

RecordSet read_records(const std::filesystem::path& path, std::optional<RecordKind> forced) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  // Sniff the container format: a leading '{' means JSONL.
  int ch;
  while ((ch = in.peek()) != EOF && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')) {
    in.get();
  }
  if (ch == EOF) {
    throw EmptyInputError("empty input: '" + path.string() + "'");
  }
  return ch == '{' ? read_jsonl(in, path, forced) : read_csv(in, path, forced);
}

void write_records(const RecordSet& records, const std::filesystem::path& path,
                   FileFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  const char* prefix = records.kind() == RecordKind::Probabilities ? "prob_" : "logit_";
  const char* key = records.kind() == RecordKind::Probabilities ? "probs" : "logits";
  if (format == FileFormat::Csv) {
    out << "label";
    for (int c = 0; c < records.class_count(); ++c) out << ',' << prefix << c;
    out << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << records.label(i);
      for (double v : records.row(i)) out << ',' << format_g12(v);
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << "{\"label\":" << records.label(i) << ",\"" << key << "\":[";
      const auto row = records.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) out << ',';
        out << format_g12(row[j]);
      }
      out << "]}\n";
    }
  }
  if (!out.good()) {
    throw InputError("write failed for '" + path.string() + "'");
  }
}

void write_truth_csv(const std::vector<double>& truth, int class_count,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  for (int c = 0; c < class_count; ++c) out << (c == 0 ? "" : ",") << "truth_" << c;
  out << '\n';
  const std::size_t rows = truth.size() / static_cast<std::size_t>(class_count);
  for (std::size_t i = 0; i < rows; ++i) {
    for (int c = 0; c < class_count; ++c) {
      if (c > 0) out << ',';
      out << format_g12(truth[i * static_cast<std::size_t>(class_count) + c]);
    }
    out << '\n';
  }
}

}  // namespace trustcal
