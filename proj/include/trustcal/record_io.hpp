#pragma once

#include <filesystem>
#include <optional>

#include "trustcal/records.hpp"

namespace trustcal {

enum class FileFormat { Csv, Jsonl };

// Chosen by extension: .jsonl/.ndjson mean JSONL, anything else CSV.
FileFormat format_for_path(const std::filesystem::path& path);

// Reads a prediction log. The container format is sniffed from the content
// (a leading '{' means JSONL) and the variant from the CSV header prefix
// (prob_/logit_) or the JSONL key (probs/logits). `forced` overrides the
// variant the values are interpreted as. Errors carry the path and the
// offending line number.
//
// CSV: mandatory header "label,prob_0,..." or "label,logit_0,...".
// JSONL: one object per line, {"label": 3, "probs": [...]} or
// {"label": 3, "logits": [...]}.
RecordSet read_records(const std::filesystem::path& path,
                       std::optional<RecordKind> forced = std::nullopt);

void write_records(const RecordSet& records, const std::filesystem::path& path,
                   FileFormat format);

// Ground-truth sidecar for synthetic logs (header "truth_0,..."); diagnostic
// output, never accepted back as an input.
void write_truth_csv(const std::vector<double>& truth, int class_count,
                     const std::filesystem::path& path);

}  // namespace trustcal
