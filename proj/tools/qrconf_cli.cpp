// Command line front end: qrconf verify | sweep | explore.

#include "qrconf/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::vector<int> parse_cutoffs(const std::string& text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      out.push_back(v);
    } catch (const std::exception&) {
      throw qrconf::ConfigError("malformed cutoff '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"q_R-conformal symmetries in truncated Verma modules"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", qrconf::tool_version());

  qrconf::RunConfig config;
  std::string cutoffs = "256,512,1024,2048,4096";
  std::string mode = "rational";
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--h", config.h_values, "extremal weight, repeatable (p/q or decimal)")->take_all();
    sub->add_option("--N", config.N, "truncation order")->capture_default_str();
    sub->add_option("--M", config.M, "contraction cutoff over the pairing")->capture_default_str();
    sub->add_option("--cutoffs", cutoffs, "comma-separated trace cutoff ladder")->capture_default_str();
    sub->add_option("--mode", mode, "rational | float")->check(CLI::IsMember({"rational", "float"}))->capture_default_str();
    sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", config.out, "output file (default: stdout)");
  };
  auto* verify = app.add_subcommand("verify", "run the invariant suites for each h");
  auto* sweep = app.add_subcommand("sweep", "tabulate closed-form constants across h");
  auto* explore = app.add_subcommand("explore", "emit exploratory curvature data");
  for (auto* sub : {verify, sweep, explore}) {
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qrconf::exit_config;
  }

  try {
    config.cutoffs = parse_cutoffs(cutoffs);
    config.mode = mode == "float" ? qrconf::ScalarMode::real : qrconf::ScalarMode::rational;
    config.format = format == "csv" ? qrconf::ReportFormat::csv : qrconf::ReportFormat::json;

    qrconf::Report report;
    if (verify->parsed()) {
      report = qrconf::run_verify(config);
    } else if (sweep->parsed()) {
      report = qrconf::run_sweep(config);
    } else {
      report = qrconf::run_explore(config);
    }
    const std::string text = qrconf::render(report, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) {
        throw qrconf::ConfigError("cannot open output file '" + config.out + "'");
      }
      file << text;
    }
    return report.exit_status;
  } catch (const qrconf::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return qrconf::exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qrconf::exit_fail;
  }
}
