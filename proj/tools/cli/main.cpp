#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace trunclab;
  CLI::App app{"Exact computations with truncs over finite spaces, omega+1 and finite frames", "trunclab"};
  std::string command;
  std::vector<std::string> names;
  std::string file;
  cli::Flags flags;
  std::size_t cases = 0;
  bool json = false;
  app.add_option("command", command, "command to run")->required();
  app.add_option("names", names, "object names and command arguments");
  app.add_option("--file,-f", file, "instance file");
  app.add_option("--seed", flags.seed, "seed for sampled checks");
  auto* cases_opt = app.add_option("--cases", cases, "case count or sample budget");
  app.add_flag("--json", json, "print the machine-readable report");
  app.footer(cli::usage());
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*cases_opt) flags.cases = cases;

  const auto* info = cli::find_command(command);
  if (!info) {
    std::cerr << "unknown command '" << command << "'\n\n" << cli::usage();
    return 2;
  }
  std::optional<io::Instance> inst;
  if (!file.empty()) {
    auto parsed = io::parse_instance(file);
    if (!parsed.ok()) {
      for (const auto& e : parsed.errors) std::cerr << file << ": " << e.to_string() << "\n";
      return 2;
    }
    inst = std::move(parsed.instance);
  } else if (info->needs_file) {
    std::cerr << command << " needs --file <path>\n";
    return 2;
  }

  try {
    auto report = cli::run_command(command, inst ? &*inst : nullptr, names, flags);
    std::cout << (json ? report.json() : report.human());
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
