#ifndef GRL_COMMANDS_HPP
#define GRL_COMMANDS_HPP

#include "grl/dsl.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace grl {

/// Exit codes shared by every command.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kError = 2;

struct CommandOptions {
    bool json = false;
    /// Search bound: the largest context arity for `axioms`.
    std::optional<std::size_t> bound;
};

struct CommandResult {
    int code = kHolds;
    std::string out;
    std::string err;
};

/// Runs one subcommand (`args[0]`) against a loaded workspace. Errors are
/// reported in `err` with code 2 rather than thrown.
CommandResult run_command(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts = {});

} // namespace grl

#endif // GRL_COMMANDS_HPP
