// End-to-end checks of the command-line tool. Takes the binary path as
// argv[1], works in a scratch directory, and verifies exit codes, file
// outputs, and determinism.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int checks = 0;
int failures = 0;

void check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::fprintf(stderr, "FAIL: %s\n", what.c_str());
  }
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Run {
  int exit_code;
  std::string output;  // stdout + stderr
};

Run run(const std::string& command) {
  const fs::path log = fs::temp_directory_path() / ("trustcal_cli_out_" +
                                                    std::to_string(::getpid()) + ".log");
  const int status = std::system((command + " > " + log.string() + " 2>&1").c_str());
  Run result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(log);
  fs::remove(log);
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-trustcal-binary>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path dir =
      fs::temp_directory_path() / ("trustcal_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto in_dir = [&](const std::string& name) { return (dir / name).string(); };

  // synth: seeded generation, records plus ground-truth sidecar
  {
    const Run r = run(cli + " synth --output " + in_dir("logits.csv") +
                      " --samples 2000 --classes 5 --sharpen 2 --seed 11 --truth-out " +
                      in_dir("truth.csv"));
    check(r.exit_code == 0, "synth exits 0: " + r.output);
    check(fs::exists(dir / "logits.csv"), "synth wrote records");
    check(slurp(dir / "truth.csv").rfind("truth_0,", 0) == 0, "truth sidecar has header");

    const Run again = run(cli + " synth --output " + in_dir("logits2.csv") +
                          " --samples 2000 --classes 5 --sharpen 2 --seed 11");
    check(again.exit_code == 0, "second synth exits 0");
    check(slurp(dir / "logits.csv") == slurp(dir / "logits2.csv"),
          "same seed gives byte-identical records");
  }

  // quantify: logits are accepted (softmax applied), report echoes the config
  {
    const Run r = run(cli + " quantify --input " + in_dir("logits.csv") + " --output " +
                      in_dir("report.json") + " --bins 10 --alpha 2 --beta 1");
    check(r.exit_code == 0, "quantify exits 0: " + r.output);
    check(r.output.find("network: belief=") != std::string::npos, "summary prints network");
    check(r.output.find("ece: ") != std::string::npos, "summary prints ece");
    const auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
    check(doc["version"] == 1, "report is versioned");
    check(doc["config"]["alpha"] == 2.0 && doc["config"]["beta"] == 1.0,
          "report echoes alpha/beta");
    check(doc["classes"].size() == 5, "report has one entry per class");

    const Run again = run(cli + " quantify --input " + in_dir("logits.csv") + " --output " +
                          in_dir("report2.json") + " --bins 10 --alpha 2 --beta 1");
    check(again.exit_code == 0, "repeat quantify exits 0");
    check(slurp(dir / "report.json") == slurp(dir / "report2.json"),
          "identical invocations give byte-identical reports");
  }

  // quantify: validation failures exit 2
  {
    std::ofstream(dir / "empty.csv") << "";
    check(run(cli + " quantify --input " + in_dir("empty.csv")).exit_code == 2,
          "empty input exits 2");
    const Run r = run(cli + " quantify --input " + in_dir("empty.csv"));
    check(r.output.find("empty input") != std::string::npos, "empty input is named");

    std::ofstream(dir / "bad.csv") << "label,prob_0,prob_1\n0,0.7,0.2\n";
    const Run bad = run(cli + " quantify --input " + in_dir("bad.csv"));
    check(bad.exit_code == 2, "off-simplex row exits 2");
    check(bad.output.find(":2:") != std::string::npos, "error names the row");

    check(run(cli + " quantify --input " + in_dir("logits.csv") + " --bins 0").exit_code == 2,
          "bad flag value exits 2");
    check(run(cli + " quantify").exit_code == 2, "missing required flag exits 2");
    check(run(cli + " --help").exit_code == 0, "--help exits 0");
  }

  // ece subcommand
  {
    const Run r = run(cli + " ece --input " + in_dir("logits.csv") + " --output " +
                      in_dir("ece.json") + " --bins 10");
    check(r.exit_code == 0, "ece exits 0: " + r.output);
    const auto doc = nlohmann::json::parse(slurp(dir / "ece.json"));
    check(doc.contains("ece") && doc["bins"].size() == 10, "ece json has the two keys");
  }

  // calibrate: fit summary, emitted records, probability input rejected
  {
    const Run r = run(cli + " calibrate --input " + in_dir("logits.csv") + " --output " +
                      in_dir("fit.json") + " --emit-calibrated " + in_dir("calibrated.csv"));
    check(r.exit_code == 0, "calibrate exits 0: " + r.output);
    const auto doc = nlohmann::json::parse(slurp(dir / "fit.json"));
    check(doc.contains("temperature") && doc.contains("nll_before") &&
              doc.contains("nll_after") && doc.contains("boundary"),
          "fit json has the documented keys");
    const double t = doc["temperature"].get<double>();
    check(t > 1.5 && t < 2.5, "fitted temperature is near the sharpening factor");
    check(doc["nll_after"].get<double>() <= doc["nll_before"].get<double>(),
          "nll does not get worse");

    const Run q = run(cli + " quantify --input " + in_dir("calibrated.csv"));
    check(q.exit_code == 0, "quantify accepts the calibrated records");

    const Run rejected = run(cli + " calibrate --input " + in_dir("calibrated.csv"));
    check(rejected.exit_code == 2, "calibrate on probabilities exits 2");
    check(rejected.output.find("logits") != std::string::npos, "rejection is explained");
  }

  // sweep: tagged curves, partial failure keeps going but exits 1
  {
    const Run r = run(cli + " sweep e1=" + in_dir("logits.csv") +
                      " e2=" + in_dir("calibrated.csv") + " --output " + in_dir("curves.csv"));
    check(r.exit_code == 0, "sweep exits 0: " + r.output);
    const std::string curves = slurp(dir / "curves.csv");
    check(curves.rfind("tag,class,belief,disbelief,uncertainty,projected\n", 0) == 0,
          "curves header");
    check(curves.find("e1,network,") != std::string::npos &&
              curves.find("e2,network,") != std::string::npos,
          "curves cover both tags");
    check(curves.find("e1,0,") < curves.find("e2,0,"), "tags stay in input order");

    const Run partial = run(cli + " sweep ok=" + in_dir("logits.csv") +
                            " missing=" + in_dir("absent.csv") + " --output " +
                            in_dir("curves2.csv"));
    check(partial.exit_code == 1, "sweep with a broken input exits 1");
    const std::string partial_curves = slurp(dir / "curves2.csv");
    check(partial_curves.find("ok,network,") != std::string::npos,
          "working inputs are still processed");

    check(run(cli + " sweep nodelimiter --output " + in_dir("x.csv")).exit_code == 2,
          "malformed tag=path exits 2");
  }

  fs::remove_all(dir);
  std::printf("%d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
