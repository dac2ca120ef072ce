#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trunclab/io/instance.hpp"
#include "trunclab/io/report.hpp"

namespace trunclab::cli {

struct Flags {
  std::uint64_t seed = 0;
  std::optional<std::size_t> cases;
};

/// Bad arguments: missing or mistyped objects, unknown command. Exit 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CommandInfo {
  std::string_view name;
  std::string_view args;
  std::string_view summary;
  bool needs_file = true;
};

const std::vector<CommandInfo>& commands();
const CommandInfo* find_command(std::string_view name);
std::string usage();

/// `inst` may be null only for commands with needs_file == false.
io::Report run_command(const std::string& cmd, const io::Instance* inst, const std::vector<std::string>& args,
                       const Flags& flags);

}  // namespace trunclab::cli
