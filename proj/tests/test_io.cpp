#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "testutil.hpp"
#include "trustcal/error.hpp"
#include "trustcal/record_io.hpp"
#include "trustcal/report_io.hpp"
#include "trustcal/synth.hpp"
#include "trustcal/temperature.hpp"

using namespace trustcal;
using testutil::near;

namespace {

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("trustcal_io_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter_++));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }
  std::filesystem::path file(const std::string& name) const { return dir_ / name; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path dir_;
};

std::filesystem::path write_text(const TempDir& dir, const std::string& name,
                                 const std::string& content) {
  const auto path = dir.file(name);
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TrustReport golden_report() {
  RecordSet records(RecordKind::Probabilities, 2);
  records.append(std::vector<double>{0.9, 0.1}, 0);
  records.append(std::vector<double>{0.8, 0.2}, 0);
  records.append(std::vector<double>{0.6, 0.4}, 1);
  records.append(std::vector<double>{0.2, 0.8}, 1);
  QuantifierConfig config;
  config.bin_count = 2;
  return quantify(records, config);
}

}  // namespace

TEST_CASE("csv probability logs parse, renormalize, and reject bad rows") {
  TempDir dir;
  SUBCASE("round numbers parse into records") {
    const auto path = write_text(dir, "p.csv", "label,prob_0,prob_1\n0,0.7,0.3\n1,0.5,0.5\n");
    const RecordSet records = read_records(path);
    CHECK(records.kind() == RecordKind::Probabilities);
    CHECK(records.class_count() == 2);
    CHECK(records.size() == 2);
    CHECK(records.row(0)[0] == 0.7);
    CHECK(records.label(1) == 1);
  }
  SUBCASE("a row slightly off the simplex is renormalized") {
    const auto path = write_text(dir, "p.csv", "label,prob_0,prob_1\n0,0.7000004,0.3\n");
    const RecordSet records = read_records(path);
    CHECK(near(records.row(0)[0] + records.row(0)[1], 1.0, 1e-12));
  }
  SUBCASE("a row far off the simplex names its line") {
    const auto path = write_text(dir, "p.csv", "label,prob_0,prob_1\n0,0.5,0.5\n0,0.7,0.2\n");
    CHECK_THROWS_WITH_AS(read_records(path), doctest::Contains(":3:"), InputError);
  }
  SUBCASE("header and field errors carry line numbers") {
    CHECK_THROWS_AS(read_records(write_text(dir, "a.csv", "prob_0,prob_1\n0.5,0.5\n")),
                    InputError);
    CHECK_THROWS_WITH_AS(
        read_records(write_text(dir, "b.csv", "label,prob_0,prob_1\n0,0.5\n")),
        doctest::Contains(":2:"), InputError);
    CHECK_THROWS_WITH_AS(
        read_records(write_text(dir, "c.csv", "label,prob_0,prob_1\n0,abc,0.5\n")),
        doctest::Contains("abc"), InputError);
    CHECK_THROWS_AS(read_records(write_text(dir, "d.csv", "label,prob_0,prob_1\n7,0.5,0.5\n")),
                    InputError);
    CHECK_THROWS_AS(read_records(write_text(dir, "e.csv", "label,value_0,value_1\n0,1,2\n")),
                    InputError);
  }
  SUBCASE("missing and empty files") {
    CHECK_THROWS_AS(read_records(dir.file("absent.csv")), InputError);
    CHECK_THROWS_AS(read_records(write_text(dir, "empty.csv", "")), EmptyInputError);
  }
}

TEST_CASE("jsonl logs parse with per-line errors") {
  TempDir dir;
  SUBCASE("logit records") {
    const auto path =
        write_text(dir, "l.jsonl",
                   "{\"label\":1,\"logits\":[2.0,-1.0,0.5]}\n"
                   "{\"label\":0,\"logits\":[0.1,0.2,0.3]}\n");
    const RecordSet records = read_records(path);
    CHECK(records.kind() == RecordKind::Logits);
    CHECK(records.class_count() == 3);
    CHECK(records.size() == 2);
    CHECK(records.row(0)[1] == -1.0);
  }
  SUBCASE("invalid json names the line") {
    const auto path = write_text(dir, "bad.jsonl",
                                 "{\"label\":1,\"logits\":[1,2]}\n{oops}\n");
    CHECK_THROWS_WITH_AS(read_records(path), doctest::Contains(":2:"), InputError);
  }
  SUBCASE("missing keys are rejected") {
    CHECK_THROWS_AS(read_records(write_text(dir, "k.jsonl", "{\"label\":1}\n")), InputError);
    CHECK_THROWS_AS(
        read_records(write_text(dir, "m.jsonl",
                                "{\"label\":1,\"probs\":[0.5,0.5],\"logits\":[1,0]}\n")),
        InputError);
  }
  SUBCASE("forcing the variant overrides detection") {
    const auto path = write_text(dir, "f.jsonl", "{\"label\":0,\"logits\":[5.0,1.0]}\n");
    const RecordSet records = read_records(path, RecordKind::Logits);
    CHECK(records.kind() == RecordKind::Logits);
    CHECK_THROWS_AS(read_records(path, RecordKind::Probabilities), InputError);
  }
}

TEST_CASE("write then read then write is byte-identical") {
  TempDir dir;
  SynthSpec spec;
  spec.sample_count = 300;
  spec.class_count = 4;
  spec.sharpening = 1.5;
  spec.seed = 7;
  const RecordSet logits = synth_generate(spec).records;

  for (FileFormat format : {FileFormat::Csv, FileFormat::Jsonl}) {
    const char* name = format == FileFormat::Csv ? "z.csv" : "z.jsonl";
    write_records(logits, dir.file(name), format);
    const RecordSet reread = read_records(dir.file(name));
    CHECK(reread.labels() == logits.labels());
    write_records(reread, dir.file(std::string("again_") + name), format);
    CHECK(slurp(dir.file(std::string("again_") + name)) == slurp(dir.file(name)));
  }

  SUBCASE("probability variant round trip") {
    const RecordSet probs = apply_temperature(logits, 1.0);
    write_records(probs, dir.file("probs.csv"), FileFormat::Csv);
    const RecordSet reread = read_records(dir.file("probs.csv"));
    write_records(reread, dir.file("probs2.csv"), FileFormat::Csv);
    CHECK(slurp(dir.file("probs2.csv")) == slurp(dir.file("probs.csv")));
  }
}

TEST_CASE("truth sidecar is a plain csv") {
  TempDir dir;
  write_truth_csv({0.25, 0.75, 0.5, 0.5}, 2, dir.file("truth.csv"));
  CHECK(slurp(dir.file("truth.csv")) == "truth_0,truth_1\n0.25,0.75\n0.5,0.5\n");
}

TEST_CASE("trust report serializes to the versioned document") {
  TempDir dir;
  const TrustReport report = golden_report();
  write_report(report, dir.file("report.json"));
  const auto doc = nlohmann::json::parse(slurp(dir.file("report.json")));

  CHECK(doc["version"] == 1);
  CHECK(doc["config"]["bins"] == 2);
  CHECK(doc["config"]["alpha"] == 1.0);
  CHECK(doc["config"]["prior_weight"] == 2.0);
  CHECK(near(doc["network"]["opinion"]["belief"].get<double>(), 4.0 / 7.0, 1e-10));
  CHECK(near(doc["network"]["opinion"]["projected"].get<double>(),
             4.0 / 7.0 + 2.0 / 7.0 * 0.5, 1e-10));
  REQUIRE(doc["classes"].size() == 2);
  CHECK(doc["classes"][0]["class"] == 0);
  CHECK(doc["classes"][0]["vacuous"] == false);
  REQUIRE(doc["classes"][0]["clusters"].size() == 2);
  CHECK(doc["classes"][0]["clusters"][1]["n"] == 3);
  CHECK(doc["classes"][0]["clusters"][1]["t"] == 2);
  CHECK(doc["classes"][0]["clusters"][1]["r"] == 2.0);
  CHECK(doc["classes"][0]["clusters"][1]["s"] == 0.25);
  CHECK(doc["classes"][0]["clusters"][1]["representative"] == 0.75);
  CHECK(doc["ece"].contains("bins"));

  SUBCASE("serialization is deterministic") {
    write_report(report, dir.file("report2.json"));
    CHECK(slurp(dir.file("report2.json")) == slurp(dir.file("report.json")));
  }
}

TEST_CASE("fit summary serializes the documented keys") {
  TempDir dir;
  TemperatureFit fit;
  fit.temperature = 1.9871;
  fit.nll_before = 2.31;
  fit.nll_after = 2.05;
  fit.boundary = false;
  write_fit(fit, dir.file("fit.json"));
  const auto doc = nlohmann::json::parse(slurp(dir.file("fit.json")));
  CHECK(doc.size() == 4);
  CHECK(doc["temperature"] == 1.9871);
  CHECK(doc["nll_before"] == 2.31);
  CHECK(doc["nll_after"] == 2.05);
  CHECK(doc["boundary"] == false);
}

TEST_CASE("curve emission") {
  TempDir dir;
  const TrustReport report = golden_report();

  SUBCASE("zero reports give a header-only file") {
    write_curves({}, dir.file("curves.csv"));
    CHECK(slurp(dir.file("curves.csv")) ==
          "tag,class,belief,disbelief,uncertainty,projected\n");
  }
  SUBCASE("one tag emits a row per class plus the network row") {
    const std::vector<TaggedReport> tagged{{"epoch_1", report}};
    write_curves(tagged, dir.file("curves.csv"));
    const std::string text = slurp(dir.file("curves.csv"));
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 2 classes + network
    CHECK(text.find("epoch_1,0,") != std::string::npos);
    CHECK(text.find("epoch_1,network,") != std::string::npos);
  }
  SUBCASE("tags stay grouped in input order") {
    const std::vector<TaggedReport> tagged{{"b", report}, {"a", report}};
    write_curves(tagged, dir.file("curves.csv"));
    const std::string text = slurp(dir.file("curves.csv"));
    CHECK(text.find("b,0,") < text.find("a,0,"));
    // Identical reports produce identical metric rows.
    const auto row_of = [&](const std::string& prefix) {
      const auto start = text.find(prefix) + prefix.size();
      return text.substr(start, text.find('\n', start) - start);
    };
    CHECK(row_of("b,network,") == row_of("a,network,"));
  }
}
