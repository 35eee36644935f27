#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kvv/repro.hpp"

namespace {

constexpr int kInvalidInput = 2;

struct OutputOptions {
  std::string format = "text";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
}

int emit(const kvv::Report& report, const OutputOptions& o) {
  const auto format = o.format == "json" ? kvv::ReportFormat::Json : kvv::ReportFormat::Text;
  try {
    kvv::emit_report(report, format, o.out, std::cout);
  } catch (const kvv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  if (const auto failure = report.first_failure()) std::cerr << "FAIL " << *failure << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory on blown-up quadrics: scenario checks and reproduction"};
  app.require_subcommand(1);

  OutputOptions output;
  std::string scenario_path;
  int p = 3;
  int points = 3;

  auto* repro = app.add_subcommand("repro", "run the bundled characteristic-three scenario");
  repro->add_option("--scenario", scenario_path, "run this scenario file instead of the bundled one");
  add_output_options(repro, output);

  auto* run = app.add_subcommand("run", "run the checks of a scenario file");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  add_output_options(run, output);

  auto* explore = app.add_subcommand("explore", "build the generalized construction for (p, points)");
  explore->add_option("--p", p, "characteristic")->required();
  explore->add_option("--points", points, "number of fibres")->required();
  add_output_options(explore, output);

  auto* export_scenario = app.add_subcommand("export-scenario", "print the bundled scenario as JSON");
  export_scenario->add_option("--out", output.out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (export_scenario->parsed()) {
      const std::string text = kvv::to_json(kvv::keel_mckernan_scenario()).dump(2) + "\n";
      if (output.out.empty()) {
        std::cout << text;
        return 0;
      }
      std::ofstream file(output.out, std::ios::binary);
      if (!(file << text) || !file.flush()) {
        std::cerr << "error: cannot write '" << output.out << "'\n";
        return kInvalidInput;
      }
      return 0;
    }
    if (explore->parsed()) return emit(kvv::explore_frobenius(p, points), output);
    if (!scenario_path.empty()) return emit(kvv::run_scenario(kvv::load_scenario(scenario_path)), output);
    return emit(kvv::run_repro(), output);
  } catch (const kvv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
