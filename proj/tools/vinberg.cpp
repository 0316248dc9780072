// vinberg run | check | certify-nonreflective | oracle

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "vinberg/commands.hpp"

namespace {

int usage_error(const std::string& message) {
  nlohmann::ordered_json err{{"error", {{"type", "UsageError"}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return vinberg::kExitError;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw vinberg::ConfigError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vinberg's algorithm for -phi x0^2 + x1^2 + ... + xn^2"};
  app.set_version_flag("--version", VINBERG_VERSION);
  app.require_subcommand(1);

  long long phi = 3;
  int dim = 0;
  std::size_t max_roots = 0;
  long long max_k0 = 10'000;
  std::string format = "json";
  std::string output;
  std::string input = "-";

  auto common = [&](CLI::App* sub, bool with_phi) {
    if (with_phi)
      sub->add_option("--phi", phi, "coefficient of x0^2")->capture_default_str();
    sub->add_option("--format", format, "json, dot or ascii")->capture_default_str()->check(
        CLI::IsMember({"json", "dot", "ascii"}));
    sub->add_option("--output", output, "write the document here instead of standard output");
  };

  auto* run = app.add_subcommand("run", "run the algorithm until finite volume or the budget runs out");
  common(run, true);
  run->add_option("--dim", dim, "dimension n")->required();
  run->add_option("--max-roots", max_roots, "total roots including the initial ones (0: 4n)")->capture_default_str();
  run->add_option("--max-k0", max_k0, "largest k0 to try")->capture_default_str();

  auto* check = app.add_subcommand("check", "analyze a given set of roots or a Gram block");
  common(check, false);
  check->add_option("input", input, "input document, - for standard input")->capture_default_str();
  check->add_option("--dim", dim, "dimension n, overriding the document");

  auto* certify = app.add_subcommand("certify-nonreflective", "certify that no reflection group arises (phi = 3, n >= 14)");
  common(certify, true);
  certify->add_option("--dim", dim, "dimension n")->required();

  long long oracle_k0 = vinberg::kOracleMaxK0;
  auto* oracle = app.add_subcommand("oracle", "compare the engine with a brute-force enumeration (n <= 5)");
  common(oracle, true);
  oracle->add_option("--dim", dim, "dimension n")->required();
  oracle->add_option("--max-k0", oracle_k0, "largest k0 to try (<= 5)")->capture_default_str();
  oracle->add_option("--max-roots", max_roots, "total roots including the initial ones (0: 4n)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  vinberg::CommandResult result;
  try {
    const vinberg::Format fmt = vinberg::parse_format(format);
    if (run->parsed()) {
      result = vinberg::cmd_run(vinberg::RunFlags{phi, dim, max_roots, max_k0, fmt});
    } else if (check->parsed()) {
      std::optional<int> n;
      if (check->count("--dim"))
        n = dim;
      result = vinberg::cmd_check(read_input(input), n, fmt);
    } else if (certify->parsed()) {
      result = vinberg::cmd_certify(phi, dim, fmt);
    } else {
      result = vinberg::cmd_oracle(phi, dim, oracle_k0, max_roots, fmt);
    }
  } catch (const std::exception& e) {
    std::cerr << vinberg::error_object(e);
    return vinberg::kExitError;
  }

  if (!result.error.empty())
    std::cerr << result.error;
  if (!result.output.empty()) {
    if (output.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(output);
      if (!out)
        return usage_error("cannot write " + output);
      out << result.output;
    }
  }
  return result.exit_code;
}
